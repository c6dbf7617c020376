#!/usr/bin/env python3
"""Populate the local root-number tables for the eight twist families.

Uses PARI/GP (through the `cypari` wheel) as an independent oracle:
ellrootno(E_t, p) is evaluated on several squarefree representatives of
every residue class, the values are checked for consistency, and each table
is written at the smallest modulus on which it is periodic.

The E^(6) tables are transcribed by hand and only cross-checked here.

    pip install cypari
    python3 tools/gen_root_number_tables.py --out tables
"""

import argparse
import os
import random
import sys

from cypari import pari

CURVES = {
    1: (-33210675, 6964980750),
    2: (-24651, 1453194),
    3: (-97227, 10789254),
    4: (-7155, 187650),
    5: (274725, 126596250),
    6: (-24003, 1296702),
    7: (-132867, 17106174),
    8: (-1196883, 46619118),
}

# Hand-transcribed local tables for E^(6).
MANUAL_TABLES = {
    (6, 2): (8, {1: 1, 2: 1, 3: -1, 5: -1, 6: -1, 7: -1}),
    (6, 3): (3, {0: -1, 1: -1, 2: 1}),
    (6, 5): (5, {0: 1, 1: 1, 2: -1, 3: -1, 4: 1}),
}


def is_squarefree(n):
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def discriminant(a, b):
    return -16 * (4 * a ** 3 + 27 * b ** 2)


def bad_primes(a, b):
    fac = pari.factor(abs(discriminant(a, b)))
    return [int(p) for p in fac[0]]


def twist(a, b, t):
    return pari.ellinit([a * t * t, b * t ** 3])


def representatives(r, m, count):
    """Squarefree integers of both signs congruent to r mod m."""
    out = []
    k = 0
    while len(out) < count and k < 400:
        for cand in (r + k * m, r - (k + 1) * m):
            if cand != 0 and is_squarefree(cand):
                out.append(cand)
        k += 1
    return out


def full_modulus(p):
    # The square class of a squarefree t in Q_p* is fixed by t mod 16 (p = 2)
    # or t mod p^2 (odd p).
    return 16 if p == 2 else p * p


def sample_table(a, b, p, samples):
    m = full_modulus(p)
    values = {}
    for r in range(m):
        reps = representatives(r, m, samples)
        if not reps:
            continue
        seen = {int(pari.ellrootno(twist(a, b, t), p)) for t in reps}
        if len(seen) != 1:
            raise RuntimeError(f"p={p} r={r} mod {m}: inconsistent {seen}")
        values[r] = seen.pop()
    return m, values


def minimal_period(m, values):
    for d in sorted(x for x in range(1, m + 1) if m % x == 0):
        reduced = {}
        ok = True
        for r, v in values.items():
            key = r % d
            if reduced.setdefault(key, v) != v:
                ok = False
                break
        if ok:
            return d, dict(sorted(reduced.items()))
    return m, values


def format_block(curve, p, m, table, provenance):
    lines = [f"curve={curve} p={p} mod={m} provenance={provenance}"]
    for r, v in sorted(table.items()):
        lines.append(f"{r}:{'+1' if v > 0 else '-1'}")
    return "\n".join(lines) + "\n"


def strip(n, d):
    n = abs(n)
    for p in [int(x) for x in pari.factor(d)[0]]:
        while n % p == 0:
            n //= p
    return n


def formula_root_number(curve, a, b, t, tables):
    delta = discriminant(a, b)
    w = -1
    for p in (2, 3):
        m, tab = tables[(curve, p)]
        w *= tab[t % m]
    n = strip(t, 6 * abs(delta))
    w *= 1 if n % 4 == 1 else -1
    for p in bad_primes(a, b):
        if p in (2, 3):
            continue
        m, tab = tables[(curve, p)]
        w *= tab[t % m]
    return w


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="tables")
    ap.add_argument("--samples", type=int, default=6)
    ap.add_argument("--check-bound", type=int, default=3000)
    ap.add_argument("--seed", type=int, default=20261016)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    random.seed(args.seed)

    tables = {}
    for curve, (a, b) in CURVES.items():
        blocks = []
        primes = sorted(set([2, 3] + bad_primes(a, b)))
        for p in primes:
            m, values = sample_table(a, b, p, args.samples)
            period, table = minimal_period(m, values)
            if (curve, p) in MANUAL_TABLES:
                pm, ptab = MANUAL_TABLES[(curve, p)]
                if (pm, ptab) != (period, table):
                    sys.exit(f"E^({curve}) p={p}: hand-derived table disagrees with oracle "
                             f"({pm},{ptab}) vs ({period},{table})")
                blocks.append(format_block(curve, p, pm, ptab, "manual"))
            else:
                blocks.append(format_block(curve, p, period, table, "oracle"))
            tables[(curve, p)] = (period, table)
            print(f"E^({curve}) p={p}: period {period}", file=sys.stderr)
        path = os.path.join(args.out, f"curve{curve}.tbl")
        with open(path, "w") as fh:
            fh.write("\n".join(blocks))

    # Cross-check the product formula against PARI's global root number and
    # freeze a sample of global values for the C++ test suite.
    frozen = []
    for curve, (a, b) in CURVES.items():
        ts = [t for t in range(-args.check_bound, args.check_bound + 1) if is_squarefree(t)]
        for t in ts:
            g = int(pari.ellrootno(twist(a, b, t)))
            f = formula_root_number(curve, a, b, t, tables)
            if f != g:
                sys.exit(f"E^({curve}) t={t}: formula {f} != global {g}")
        for t in random.sample(ts, 60):
            frozen.append((curve, t, int(pari.ellrootno(twist(a, b, t)))))
        print(f"E^({curve}): product formula matches PARI on {len(ts)} twists",
              file=sys.stderr)
    with open(os.path.join(args.out, "global_oracle.txt"), "w") as fh:
        fh.write("# curve t W(E_t) -- PARI ellrootno on the twisted base model\n")
        for curve, t, w in sorted(frozen):
            fh.write(f"{curve} {t} {w:+d}\n")


if __name__ == "__main__":
    main()
