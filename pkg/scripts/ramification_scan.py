#!/usr/bin/env python3
"""Scan the floor identity under ramification on the bundled corpus.

For each (surface, arc) pair and each n up to --n-max, compares the blow-up
count of the ramified arc with floor(n * r).  The identity pins rho to the
rational invariant r; the last column tracks the gap |rho/n - r| <= 1/n.
"""

import argparse
from fractions import Fraction

from arcinv.nash import persistance
from arcinv.qpers import q_persistance
from arcinv.render import format_rational
from arcinv.verify import corpus


def scan(n_max: int) -> bool:
    all_ok = True
    for label, surface, arc in corpus():
        result = q_persistance(surface, arc)
        print(f"{label}: r = {format_rational(result.r)}, nu = {result.nu}")
        for n in range(1, n_max + 1):
            rho = persistance(surface, arc.ramify(n))
            expected = (n * result.r).numerator // (n * result.r).denominator
            gap = abs(Fraction(rho, n) - result.r)
            ok = rho == expected and gap <= Fraction(1, n)
            all_ok = all_ok and ok
            print(
                f"  n = {n:>2}: rho = {rho:>3}, floor(n*r) = {expected:>3}, "
                f"|rho/n - r| = {format_rational(gap):>6} {'ok' if ok else 'MISMATCH'}"
            )
    return all_ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=12)
    args = parser.parse_args()
    return 0 if scan(args.n_max) else 1


if __name__ == "__main__":
    raise SystemExit(main())
