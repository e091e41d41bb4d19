#!/usr/bin/env python3
"""Survey complex bases over a norm range.

For each base: digit count, the length-bound constant M(3), whether some
power of the base is a positive integer, and the word of a sample value.
"""

import argparse

from gaussbase.gaussint import GaussInt
from gaussbase.numeration import (
    canonical_digit_set,
    encode,
    lattice_disc,
    length_bound,
    real_power_exponent,
    word_to_text,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--norm-min", type=int, default=5)
    ap.add_argument("--norm-max", type=int, default=26)
    ap.add_argument("--sample", type=GaussInt.parse, default=GaussInt(7, 0))
    args = ap.parse_args()

    print(f"{'base':>8} {'norm':>5} {'|D|':>4} {'M(3)':>5} {'b^j real':>9}   word({args.sample})")
    for b in sorted(lattice_disc(args.norm_max), key=lambda z: (z.norm(), z.re, z.im)):
        if b.norm() < max(5, args.norm_min):
            continue
        D = canonical_digit_set(b)
        j = real_power_exponent(b)
        word = word_to_text(encode(args.sample, D))
        print(
            f"{str(b):>8} {b.norm():>5} {len(D.digits):>4} {length_bound(b).m3:>5}"
            f" {('j=' + str(j)) if j else '-':>9}   {word}"
        )


if __name__ == "__main__":
    main()
