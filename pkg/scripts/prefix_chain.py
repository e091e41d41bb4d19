#!/usr/bin/env python3
"""Prefix-extension demonstration: powers of a whose base-b words extend a target.

Searches for a^m = u*b^n + z with the word of z short enough that the
word of a^m starts with the word of u, then (optionally) re-targets u to
the found power and repeats.  Deeper levels need astronomically precise
approximations, so expect not-found beyond depth 1 at desk budgets.
"""

import argparse

from gaussbase.dependence import prefix_extension
from gaussbase.gaussint import GaussInt
from gaussbase.numeration import canonical_digit_set, encode, word_to_text


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-a", type=GaussInt.parse, default=GaussInt(1, 2))
    ap.add_argument("-b", type=GaussInt.parse, default=GaussInt(2, 1))
    ap.add_argument("-u", type=GaussInt.parse, default=GaussInt(1, 0))
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--budget", type=int, default=256)
    ap.add_argument("--depth", type=int, default=1)
    args = ap.parse_args()

    D = canonical_digit_set(args.b)
    u = args.u
    print(f"a = {args.a}, b = {args.b}; target word w0 = {word_to_text(encode(u, D)) or 'ε'}\n")
    for level in range(args.depth + 1):
        w = prefix_extension(args.a, args.b, u, args.n_min, args.budget)
        if w is None:
            print(f"level {level}: no witness with m <= {args.budget}")
            break
        word = word_to_text(encode(args.a**w.m, D))
        print(f"level {level}: a^{w.m} = u*b^{w.n} + z,  z = {w.z}")
        print(f"          word(a^{w.m}) = {word}\n")
        u = args.a**w.m


if __name__ == "__main__":
    main()
