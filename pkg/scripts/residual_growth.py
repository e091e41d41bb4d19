#!/usr/bin/env python3
"""Residual-class growth: regular vs non-regular power languages.

Writes powers of a generator in base b and counts distinct extension
behaviors among bounded prefixes.  For a generator multiplicatively
dependent on b the counts plateau at the DFA size; for an independent
generator they keep growing, which is finite evidence that no DFA
recognizes the language.
"""

import argparse

from gaussbase.automata import powers_oracle, residual_signatures
from gaussbase.dependence import mult_dependent
from gaussbase.gaussint import GaussInt
from gaussbase.numeration import canonical_digit_set


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-a", type=GaussInt.parse, default=GaussInt(1, 2), help="generator")
    ap.add_argument("-b", type=GaussInt.parse, default=GaussInt(2, 1), help="base")
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("-e", type=int, default=3, help="extension depth")
    args = ap.parse_args()

    D = canonical_digit_set(args.b)
    verdict = mult_dependent(args.a, args.b)
    relation = "dependent" if verdict.dependent else "independent"
    print(f"generator a = {args.a}, base b = {args.b}  ({relation})\n")
    target = powers_oracle(args.a, D)
    control = powers_oracle(args.b, D)
    print(f"{'k':>3} {'classes(a)':>11} {'classes(b)':>11}")
    for k in range(args.k_max + 1):
        ca = residual_signatures(target, k, args.e).class_count
        cb = residual_signatures(control, k, args.e).class_count
        print(f"{k:>3} {ca:>11} {cb:>11}")


if __name__ == "__main__":
    main()
