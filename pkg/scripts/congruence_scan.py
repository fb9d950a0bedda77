#!/usr/bin/env python3
"""Scan every residue class for simple linear congruences.

For each family and each prime modulus p in {3, 5, 7}, tests whether
spt_X(p n + b) is divisible by p for all arguments up to the bound, and
whether the corresponding root-of-unity coefficients vanish.  The fifteen
known progressions show up as the full three-check survivors; everything
else is reported with its first counterexample.
"""

import argparse
import sys

sys.path.insert(0, "src")

from sptforge.sptcrank import FAMILY_NAMES, check_congruence


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=300, help="largest argument to test")
    parser.add_argument("--families", nargs="*", default=list(FAMILY_NAMES))
    args = parser.parse_args()

    survivors = []
    for family in args.families:
        for p in (3, 5, 7):
            for b in range(p):
                rep = check_congruence(family, p, b, args.max)
                if rep.verified:
                    survivors.append((family, p, b))
                    print(f"  {family}: spt({p}n+{b}) divisible by {p}  [all {args.max // p} cases]")
                else:
                    detail = rep.first_failure["detail"]
                    print(f"  {family}: {p}n+{b} fails ({detail})")
    print(f"\n{len(survivors)} surviving progressions up to {args.max}:")
    for family, p, b in survivors:
        print(f"  spt_{family}({p}n+{b}) == 0 mod {p}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
