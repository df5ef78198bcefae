#!/usr/bin/env python3
"""Regenerate the bundled OEIS b-files in data/oeis from each entry's definition.

The C++ library is not used here, so the fixtures stay an independent
reference. Run from any directory; the output location is fixed relative to
this script.
"""

import argparse
from math import comb
from pathlib import Path


def digits(n, p):
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def undigits(ds, p):
    return sum(d * p**i for i, d in enumerate(ds))


def nim_sum(a, b, p):
    da, db = digits(a, p), digits(b, p)
    n = max(len(da), len(db))
    da += [0] * (n - len(da))
    db += [0] * (n - len(db))
    return undigits([(x + y) % p for x, y in zip(da, db)], p)


def row_value(n, p):
    return sum((comb(n, i) % p) * p**i for i in range(n + 1))


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def evil(count):
    out, n = [], 0
    while len(out) < count:
        if bin(n).count("1") % 2 == 0:
            out.append(n)
        n += 1
    return out


# id -> (offset, generator(count))
ENTRIES = {
    "A001317": (0, lambda c: [row_value(n, 2) for n in range(c)]),
    "A001969": (1, evil),
    "A003188": (0, lambda c: [n ^ (n >> 1) for n in range(c)]),
    "A019434": (0, lambda c: [f for f in (2 ** (2**j) + 1 for j in range(5)) if is_prime(f)][:c]),
    "A048724": (0, lambda c: [n ^ (2 * n) for n in range(c)]),
    "A071770": (0, lambda c: [nim_sum(n, n // 3, 3) for n in range(c)]),
    "A173019": (0, lambda c: [row_value(n, 3) for n in range(c)]),
    "A242399": (0, lambda c: [nim_sum(n, 3 * n, 3) for n in range(c)]),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=64)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "oeis")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for oeis_id, (offset, gen) in ENTRIES.items():
        values = gen(args.terms)
        lines = [f"# {oeis_id}: generated offline from the sequence definition"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
        (args.out / f"b{oeis_id[1:]}.txt").write_text("\n".join(lines) + "\n")
        print(f"{oeis_id}: {len(values)} terms")


if __name__ == "__main__":
    main()
