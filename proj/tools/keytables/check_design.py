"""Expands a solved design at one size and checks it without the C++ library."""
import json, sys, ast
from sat_design import Design

def load(path):
    d = json.load(open(path))
    keys = {ast.literal_eval(k): v for k, v in d['keys'].items()}
    des = Design([], w=d['w'], absL=d['absL'], absR=d['absR'], period=d.get('period', 2))
    return des, keys

def expand(des, keys, s):
    """Return per-cluster used-edge sets, or raise KeyError for a missing key."""
    p, q = s
    i = p + q - 1
    used = {}
    for x in range(1, i + 1):
        used[x] = {e for e in des.base_edges(s) if keys[des.ekey(s, x, e)]}
    return used

def check(des, keys, s):
    p, q = s
    c, i = p, p + q - 1
    try:
        used = expand(des, keys, s)
    except KeyError as e:
        return "missing key %s" % (e,)
    E = des.base_edges(s)
    inc = {v: [e for e in E if v in e] for v in range(1, i + 1)}
    deg = {}
    for x in range(1, i + 1):
        for u in range(1, i + 1):
            d = sum(1 for e in inc[u] if e in used[x])
            if d not in (1, 2): return "bad degree %d at <%d,%d>" % (d, x, u)
            if u == x and d != 2: return "diagonal endpoint <%d,%d>" % (x, u)
            deg[(x, u)] = d
    for x in range(1, i + 1):
        for u in range(x + 1, i + 1):
            if (deg[(x, u)] == 1) != (deg[(u, x)] == 1): return "asymmetric <%d,%d>" % (x, u)
    # single cycle
    adj = {}
    def add(a, b):
        adj.setdefault(a, []).append(b); adj.setdefault(b, []).append(a)
    for x in range(1, i + 1):
        for a, b in used[x]: add((x, a), (x, b))
        for u in range(x + 1, i + 1):
            if deg[(x, u)] == 1: add((x, u), (u, x))
    start = (1, 1); seen = {start}; stack = [start]
    while stack:
        v = stack.pop()
        for w_ in adj[v]:
            if w_ not in seen: seen.add(w_); stack.append(w_)
    if len(seen) != i * i: return "subtours (%d of %d reached)" % (len(seen), i * i)
    # cascade
    pinned = {v for v, d in deg.items() if d == 1 or v[0] == v[1]}
    nbr = {}
    for x in range(1, i + 1):
        for u in range(1, i + 1):
            nbr[(x, u)] = [(x, e[0] if e[1] == u else e[1]) for e in inc[u] if e in used[x]]
    changed = True
    rounds = 0
    while changed:
        changed = False; rounds += 1
        new = set()
        for v in deg:
            if v in pinned: continue
            part = (v[1], v[0])
            if all(w_ in pinned for w_ in nbr[v]) or all(w_ in pinned for w_ in nbr[part]):
                new.add(v); new.add(part)
        if new: pinned |= new; changed = True
    if len(pinned) != i * i: return "cascade stalls (%d unpinned)" % (i * i - len(pinned))
    return "ok"

if __name__ == '__main__':
    des, keys = load(sys.argv[1])
    for s in json.loads(sys.argv[2]):
        print(tuple(s), check(des, keys, tuple(s)))
