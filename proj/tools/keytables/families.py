"""Families of bowtie sizes sharing one key-edge table, with solve and check sizes."""
SMALL_ODD = [3, 5, 7]
SMALL_EVEN = [4, 6, 8]
GEN_ODD = [9, 11, 13]     # representatives of residues mod 6
GEN_EVEN = [10, 12, 14]

def spec(v, small):
    return str(v) if v in small else "m%d" % (v % 6)

def families():
    fams = []
    # odd-odd, p <= q
    for p in SMALL_ODD:
        for q in SMALL_ODD:
            if q < p or (p, q) in ((3, 3), (5, 7)): continue
            fams.append(dict(cls='oo', p=str(p), q=str(q), absL=True, absR=True, solve=[(p, q)], check=[(p, q)]))
        for q0 in GEN_ODD:
            fams.append(dict(cls='oo', p=str(p), q="m%d" % (q0 % 6), absL=True, absR=False,
                             solve=[(p, q0), (p, q0 + 6), (p, q0 + 12)],
                             check=[(p, q0 + 6 * k) for k in range(0, 8) if p + q0 + 6 * k - 1 <= 65]))
    for p0 in GEN_ODD:
        for q0 in GEN_ODD:
            qs = [q for q in range(q0, 80, 6) if q >= p0]
            q1 = qs[0]
            solve = [(p0, q1), (p0, q1 + 6), (p0 + 6, q1 + 6), (p0, q1 + 12), (p0 + 6, q1 + 12), (p0 + 12, q1 + 12)]
            check = [(p, q) for p in range(p0, 60, 6) for q in range(q1, 60, 6) if p <= q and p + q - 1 <= 65]
            fams.append(dict(cls='oo', p="m%d" % (p0 % 6), q="m%d" % (q0 % 6), absL=False, absR=False, solve=solve, check=check))
    # odd-even, any order
    for p in SMALL_ODD:
        for q in SMALL_EVEN:
            fams.append(dict(cls='oe', p=str(p), q=str(q), absL=True, absR=True, solve=[(p, q)], check=[(p, q)]))
        for q0 in GEN_EVEN:
            fams.append(dict(cls='oe', p=str(p), q="m%d" % (q0 % 6), absL=True, absR=False,
                             solve=[(p, q0), (p, q0 + 6), (p, q0 + 12)],
                             check=[(p, q0 + 6 * k) for k in range(0, 8) if p + q0 + 6 * k - 1 <= 65]))
    for p0 in GEN_ODD:
        for q in SMALL_EVEN:
            fams.append(dict(cls='oe', p="m%d" % (p0 % 6), q=str(q), absL=False, absR=True,
                             solve=[(p0, q), (p0 + 6, q), (p0 + 12, q)],
                             check=[(p0 + 6 * k, q) for k in range(0, 8) if p0 + 6 * k + q - 1 <= 65]))
        for q0 in GEN_EVEN:
            solve = [(p0, q0), (p0, q0 + 6), (p0 + 6, q0), (p0 + 6, q0 + 6), (p0 + 12, q0 + 6), (p0 + 6, q0 + 12)]
            check = [(p, q) for p in range(p0, 60, 6) for q in range(q0, 60, 6) if p + q - 1 <= 65]
            fams.append(dict(cls='oe', p="m%d" % (p0 % 6), q="m%d" % (q0 % 6), absL=False, absR=False, solve=solve, check=check))
    return fams

def name(f):
    return "%s_%s_%s" % (f['cls'], f['p'], f['q'])
