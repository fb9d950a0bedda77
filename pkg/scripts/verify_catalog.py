#!/usr/bin/env python3
"""Run the full identity catalog and print a timing summary."""

import argparse
import sys

sys.path.insert(0, "src")

from sptforge.registry import verify_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--id", default="*", help="glob over case ids")
    parser.add_argument("--order", type=int, default=None)
    parser.add_argument("--parallelism", type=int, default=1)
    parser.add_argument("--paper-bounds", action="store_true")
    args = parser.parse_args()

    reports = verify_all(args.id, parallelism=args.parallelism,
                         order=args.order, paper_bounds=args.paper_bounds)
    for r in reports:
        print(r.text())
    bad = [r for r in reports if not r.verified]
    total = sum(r.millis for r in reports)
    print(f"\n{len(reports) - len(bad)}/{len(reports)} verified, {total} ms total")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
