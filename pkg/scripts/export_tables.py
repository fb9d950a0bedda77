#!/usr/bin/env python3
"""Export weighted-count and crank-class tables for all families as CSV."""

import argparse
import os
import sys

sys.path.insert(0, "src")

from sptforge.cli import main as cli_main
from sptforge.sptcrank import FAMILY_NAMES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=100)
    parser.add_argument("--outdir", default="tables")
    args = parser.parse_args()

    os.makedirs(args.outdir, exist_ok=True)
    for family in FAMILY_NAMES:
        cli_main(["spt", "--family", family, "--max", str(args.max),
                  "--format", "csv", "--output", os.path.join(args.outdir, f"spt_{family}.csv")])
        for t in (3, 5, 7):
            cli_main(["crank", "--family", family, "--t", str(t), "--max", str(args.max),
                      "--format", "csv",
                      "--output", os.path.join(args.outdir, f"crank_{family}_mod{t}.csv")])
        print(f"wrote {family}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
