"""Collects the deleted edge names of every solved family into one TSV."""
import argparse
import ast
import glob
import json
import os
import sys


def tokstr(t):
    if t[0] == 'c':
        return 'c'
    if t[0] in ('Lm', 'Rm'):
        return '%s%d' % t
    return '%s%d' % t if t[1] >= 0 else '%s-%d' % (t[0], -t[1])


def keystr(k):
    if k[0] == 'e-near':
        return 'n:%s:%d' % (tokstr(k[1]), k[2])
    return 'e:%s:%s:%s' % tuple(tokstr(t) for t in k[1:])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument('--fam', default='fam')
    ap.add_argument('--out', default='derived_full.tsv')
    a = ap.parse_args()
    rows = []
    for fn in sorted(glob.glob(os.path.join(a.fam, '*.json'))):
        with open(fn) as fh:
            d = json.load(fh)
        if d['status'] != 'ok':
            print('skip', d['name'], d['status'], file=sys.stderr)
            continue
        for k, v in d['keys'].items():
            k = ast.literal_eval(k)
            if k[0] in ('e', 'e-near') and not v:
                rows.append((d['name'], keystr(k)))
    with open(a.out, 'w') as f:
        for r in sorted(rows):
            f.write('%s\t%s\n' % r)
    print(len(rows))


if __name__ == '__main__':
    main()
