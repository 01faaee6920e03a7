"""Solves one family, adding the smallest failing check size until all pass."""
import argparse
import json
import os

from check_design import check
from families import families, name
from sat_design import Design


def run(idx, out_dir, max_refine=6):
    f = families()[idx]
    solve = [tuple(s) for s in f['solve']]
    out = {}
    for _ in range(max_refine):
        d = Design(solve, w=3, absL=f['absL'], absR=f['absR'], rounds=4, period=6)
        val = d.solve(verbose=False, max_iter=20000)
        out = dict(f, name=name(f), solve=solve)
        if val is None:
            out['status'] = 'unsat'
            break
        keys = {k: bool(val[v]) for k, v in d.keys.items()}
        out['keys'] = {repr(k): v for k, v in keys.items()}
        res = {str(s): check(d, keys, tuple(s)) for s in f['check']}
        out['checks'] = res
        bad = [tuple(s) for s in f['check'] if res[str(tuple(s))] != 'ok']
        out['status'] = 'ok' if not bad else 'extrapolation-failed'
        if not bad:
            break
        solve = solve + [min(bad, key=lambda s: s[0] + s[1])]
        print(name(f), 'refine', solve, flush=True)
    with open(os.path.join(out_dir, '%s.json' % name(f)), 'w') as fh:
        json.dump(out, fh)
    print(name(f), out['status'], flush=True)


if __name__ == '__main__':
    ap = argparse.ArgumentParser()
    ap.add_argument('index', type=int, help='family index, 0 .. %d' % (len(families()) - 1))
    ap.add_argument('--out', default='fam')
    a = ap.parse_args()
    os.makedirs(a.out, exist_ok=True)
    run(a.index, a.out)
