"""SAT search for per-family cluster path covers.

One shared variable per edge name; all sizes in a family use the same names.
Path endpoints must pair up across transpose edges, every vertex must be
pinned by a bounded propagation cascade, and subtours are cut lazily.
"""
import sys, itertools, json, argparse
from pysat.solvers import Cadical153

class Design:
    def __init__(self, sizes, w=3, w2=3, absL=False, absR=False, rounds=4, tie_edges=True, period=6):
        self.period = period
        self.sizes, self.w, self.w2 = sizes, w, w2
        self.absL, self.absR, self.rounds, self.tie_edges = absL, absR, rounds, tie_edges
        self.keys = {}
        self.nv = 0
        self.clauses = []
        self.ev = {}
        self.mv = {}

    def new(self):
        self.nv += 1
        return self.nv

    def shared(self, k):
        if k not in self.keys: self.keys[k] = self.new()
        return self.keys[k]

    def side(self, s, l):
        p, q = s
        return 'c' if l == p else ('L' if l < p else 'R')

    def tok(self, s, l):
        p, q = s
        c, i = p, p + q - 1
        w = self.w
        if l == c: return ('c',)
        if l < c:
            if self.absL or l <= w: return ('L', l)
            if c - l <= w: return ('L', -(c - l))
            return ('Lm', (l - w - 1) % self.period)
        k = l - c
        if self.absR or k <= w: return ('R', k)
        if i + 1 - l <= w: return ('R', -(i + 1 - l))
        return ('Rm', (k - w - 1) % self.period)

    def ismid(self, t): return t[0] in ('Lm', 'Rm')

    def mkey(self, s, x, u):
        tx, tu = self.tok(s, x), self.tok(s, u)
        if x == u: return ('diag', tx)
        if self.ismid(tx) and self.ismid(tu) and tx[0] == tu[0]:
            if abs(u - x) <= self.w2:
                return ('mm', tx[0], abs(u - x), self.tok(s, min(x, u))[1])
            return ('far', tx[0], tuple(sorted([tx[1], tu[1]])))
        return ('m',) + tuple(sorted([tx, tu]))

    def ekey(self, s, x, e):
        a, b = e
        tx, ta, tb = self.tok(s, x), self.tok(s, a), self.tok(s, b)
        if self.ismid(tx) and self.ismid(ta) and self.side(s, a) == self.side(s, x) and abs(a - x) <= self.w2 + 1:
            return ('e-near', tx, a - x)
        return ('e', tx, ta, tb)

    def base_edges(self, s):
        p, q = s
        c, i = p, p + q - 1
        E = [(v, v + 1) for v in range(1, c)] + [(c, 1)]
        E += [(v, v + 1) for v in range(c, i)] + [(i, c)]
        return E

    def build(self):
        R = self.rounds
        for s in self.sizes:
            p, q = s
            c, i = p, p + q - 1
            E = self.base_edges(s)
            inc = {v: [] for v in range(1, i + 1)}
            for e in E:
                inc[e[0]].append(e); inc[e[1]].append(e)
            for x in range(1, i + 1):
                for e in E:
                    self.ev[(s, x, e)] = self.shared(self.ekey(s, x, e)) if self.tie_edges else self.new()
                for u in range(1, i + 1):
                    self.mv[(s, x, u)] = self.shared(self.mkey(s, x, u))
            for x in range(1, i + 1):
                for u in range(1, i + 1):
                    m = self.mv[(s, x, u)]
                    if u == x: self.clauses.append([m])
                    lits = [self.ev[(s, x, e)] for e in inc[u]]
                    for assign in itertools.product([0, 1], repeat=len(lits)):
                        cnt = sum(assign)
                        neg = [(-l if a else l) for l, a in zip(lits, assign)]
                        if cnt == 0 or cnt > 2: self.clauses.append(neg)
                        elif cnt == 1: self.clauses.append(neg + [-m])
                        else: self.clauses.append(neg + [m])
            # propagation cascade
            pin = {}
            for x in range(1, i + 1):
                for u in range(1, i + 1):
                    for r in range(R + 1): pin[(x, u, r)] = self.new()
            for x in range(1, i + 1):
                for u in range(1, i + 1):
                    m = self.mv[(s, x, u)]
                    # round 0: endpoints, diagonals (diag: m forced; its both edges forced by live=2)
                    if u == x: self.clauses.append([pin[(x, u, 0)]])
                    else: self.clauses.append([-pin[(x, u, 0)], -m])
                    for r in range(R):
                        a = self.new()
                        for e in inc[u]:
                            w_ = e[0] if e[1] == u else e[1]
                            self.clauses.append([-a, -self.ev[(s, x, e)], pin[(x, w_, r)]])
                        ap = None
                        if u != x:
                            ap = self.new()
                            for e in inc[x]:
                                w_ = e[0] if e[1] == x else e[1]
                                self.clauses.append([-ap, -self.ev[(s, u, e)], pin[(u, w_, r)]])
                        cl = [-pin[(x, u, r + 1)], pin[(x, u, r)], a] + ([ap] if ap else [])
                        self.clauses.append(cl)
                    self.clauses.append([pin[(x, u, R)]])

    def components(self, s, model):
        p, q = s
        i = p + q - 1
        val = model
        adj = {}
        def add(a, b):
            adj.setdefault(a, []).append(b); adj.setdefault(b, []).append(a)
        for x in range(1, i + 1):
            for e in self.base_edges(s):
                if val[self.ev[(s, x, e)]]: add((x, e[0]), (x, e[1]))
            for u in range(x + 1, i + 1):
                if not val[self.mv[(s, x, u)]]: add((x, u), (u, x))
        comp = {}; comps = []
        for v in adj:
            if v in comp: continue
            stack = [v]; cur = []
            comp[v] = len(comps)
            while stack:
                w_ = stack.pop(); cur.append(w_)
                for y in adj[w_]:
                    if y not in comp: comp[y] = len(comps); stack.append(y)
            comps.append(cur)
        return comps

    def cut(self, s, S):
        p, q = s
        c, i = p, p + q - 1
        S = set(S)
        lits = set()
        for x in range(1, i + 1):
            for (a, b) in self.base_edges(s):
                if ((x, a) in S) != ((x, b) in S): lits.add(self.ev[(s, x, (a, b))])
        for (x, u) in S:
            if x != u and (u, x) not in S: lits.add(-self.mv[(s, x, u)])
        return sorted(lits)

    def solve(self, max_iter=3000, verbose=True, assumptions=()):
        self.build()
        solver = Cadical153(bootstrap_with=self.clauses)
        for it in range(max_iter):
            if not solver.solve(assumptions=list(assumptions)): return None
            model = solver.get_model()
            val = [False] * (self.nv + 1)
            for l in model:
                if l > 0: val[l] = True
            bad = 0
            for s in self.sizes:
                comps = self.components(s, val)
                if len(comps) > 1:
                    bad += len(comps)
                    for S in comps: solver.add_clause(self.cut(s, S))
            if verbose and it % 10 == 0: print("iter", it, "subtours", bad, file=sys.stderr)
            if bad == 0:
                return val
        return None

def main():
    ap = argparse.ArgumentParser()
    ap.add_argument('sizes')
    ap.add_argument('--absL', action='store_true')
    ap.add_argument('--absR', action='store_true')
    ap.add_argument('--rounds', type=int, default=4)
    ap.add_argument('--w', type=int, default=3)
    ap.add_argument('--untied', action='store_true')
    ap.add_argument('--period', type=int, default=6)
    ap.add_argument('--out')
    a = ap.parse_args()
    sizes = [tuple(s) for s in json.loads(a.sizes)]
    d = Design(sizes, w=a.w, absL=a.absL, absR=a.absR, rounds=a.rounds, tie_edges=not a.untied, period=a.period)
    val = d.solve()
    if val is None:
        print("UNSAT"); sys.exit(1)
    print("SAT")
    if a.out:
        keys = {repr(k): bool(val[v]) for k, v in d.keys.items()}
        json.dump({'sizes': sizes, 'w': a.w, 'period': a.period, 'absL': a.absL, 'absR': a.absR, 'keys': keys}, open(a.out, 'w'), indent=0)

if __name__ == '__main__':
    main()
