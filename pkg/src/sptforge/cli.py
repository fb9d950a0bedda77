"""Command-line front end for the verification engine.

Subcommands:

    verify [--id GLOB] [--order N] [--parallelism P] [--timing wall|none]
           [--paper-bounds]
    spt --family F --max N
    crank --family F --t T --max N
    congruence --family F --p P --b B --max N
    oracle-compare --family F --max N
    list

All subcommands take --format text|json|csv and --output PATH.  The exit
code is the only success channel: 0 when every executed check verified,
1 on a mismatch, 2 for usage errors.  JSON is emitted with sorted keys and
two-space indentation, so parsing and re-serializing the output is
byte-identical.  CSV is comma-separated with a header row and LF endings.

The order cap (default 1200) can be overridden through the environment
variable SPTFORGE_MAX_ORDER; table lengths are capped at 2000.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .qseries import max_order_cap
from .sptcrank import (
    FAMILY_NAMES,
    check_congruence,
    class_counts_from_roots,
    spt_table,
)
from .combinatorics import spt_oracle
from .registry import UnknownCaseError, catalog, verify_all

N_MAX_CAP = 2000


@dataclass
class RunConfig:
    command: str
    case_glob: str = "*"
    family: str = ""
    order: int | None = None
    n_max: int = 0
    t: int = 5
    p: int = 5
    b: int = 0
    fmt: str = "text"
    output: str = ""
    parallelism: int = 1
    timing: str = "wall"
    paper_bounds: bool = False
    seed: int | None = None  # reserved for randomized suites


class UsageError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _open_out(config: RunConfig):
    if config.output:
        return open(config.output, "w", encoding="utf-8", newline="")
    return None


class _Writer:
    """Serializes all table output through one stream."""

    def __init__(self, config: RunConfig):
        self.config = config
        self._file = _open_out(config)
        self.stream = self._file if self._file else sys.stdout
        self._csv = None

    def csv_writer(self):
        if self._csv is None:
            self._csv = csv.writer(self.stream, lineterminator="\n")
        return self._csv

    def line(self, text: str):
        self.stream.write(text + "\n")

    def close(self):
        if self._file:
            self._file.close()


def _check_caps(config: RunConfig) -> None:
    cap = max_order_cap()
    if config.order is not None and not (0 < config.order <= cap):
        raise UsageError(f"order must be in 1..{cap}")
    if config.n_max and not (0 < config.n_max <= N_MAX_CAP):
        raise UsageError(f"--max must be in 1..{N_MAX_CAP}")


def _require_family(config: RunConfig) -> None:
    if config.family not in FAMILY_NAMES:
        raise UsageError(f"--family must be one of {', '.join(FAMILY_NAMES)}")


def _cmd_verify(config: RunConfig) -> int:
    try:
        reports = verify_all(config.case_glob, parallelism=config.parallelism,
                             order=config.order, paper_bounds=config.paper_bounds)
    except UnknownCaseError as exc:
        raise UsageError(f"unknown case id {exc}") from None
    if config.timing == "none":
        for r in reports:
            r.millis = 0
    out = _Writer(config)
    try:
        if config.fmt == "json":
            out.stream.write(_dump_json([r.to_json() for r in reports]))
        elif config.fmt == "csv":
            w = out.csv_writer()
            w.writerow(["id", "order", "status", "mismatch_power",
                        "mismatch_lhs", "mismatch_rhs", "millis"])
            for r in reports:
                m = r.first_mismatch
                w.writerow([r.id, r.order, r.status,
                            m.power if m else "", m.lhs if m else "", m.rhs if m else "",
                            r.millis])
        else:
            for r in reports:
                out.line(r.text())
            n_bad = sum(1 for r in reports if not r.verified)
            out.line(f"-- {len(reports)} cases, {len(reports) - n_bad} verified, {n_bad} mismatched")
    finally:
        out.close()
    return 0 if all(r.verified for r in reports) else 1


def _cmd_spt(config: RunConfig) -> int:
    _require_family(config)
    values = spt_table(config.family, config.n_max)
    out = _Writer(config)
    try:
        if config.fmt == "json":
            rows = [{"n": n, "spt": values[n]} for n in range(1, config.n_max + 1)]
            out.stream.write(_dump_json({"family": config.family, "rows": rows}))
        elif config.fmt == "csv":
            w = out.csv_writer()
            w.writerow(["n", "spt"])
            for n in range(1, config.n_max + 1):
                w.writerow([n, values[n]])
        else:
            for n in range(1, config.n_max + 1):
                out.line(f"{n}\t{values[n]}")
    finally:
        out.close()
    return 0


def _cmd_crank(config: RunConfig) -> int:
    _require_family(config)
    if config.t not in (3, 5, 7):
        raise UsageError("--t must be 3, 5, or 7")
    table = class_counts_from_roots(config.family, config.t, config.n_max)
    header = ["n"] + [f"m{k}" for k in range(config.t)]
    out = _Writer(config)
    try:
        if config.fmt == "json":
            rows = [{"n": n, "classes": table[n]} for n in range(1, config.n_max + 1)]
            out.stream.write(_dump_json({"family": config.family, "t": config.t, "rows": rows}))
        elif config.fmt == "csv":
            w = out.csv_writer()
            w.writerow(header)
            for n in range(1, config.n_max + 1):
                w.writerow([n] + table[n])
        else:
            out.line("\t".join(header))
            for n in range(1, config.n_max + 1):
                out.line("\t".join(str(x) for x in [n] + table[n]))
    finally:
        out.close()
    return 0


def _cmd_congruence(config: RunConfig) -> int:
    _require_family(config)
    if config.p not in (3, 5, 7):
        raise UsageError("--p must be 3, 5, or 7")
    if not (0 <= config.b < config.p):
        raise UsageError("--b must satisfy 0 <= b < p")
    report = check_congruence(config.family, config.p, config.b, config.n_max)
    if config.timing == "none":
        report.millis = 0
    out = _Writer(config)
    try:
        if config.fmt == "json":
            out.stream.write(_dump_json(report.to_json()))
        elif config.fmt == "csv":
            w = out.csv_writer()
            w.writerow(["check", "ok", "witness"])
            for c in report.checks:
                w.writerow([c.name, "yes" if c.ok else "no", c.witness])
        else:
            out.line(report.text())
            for c in report.checks:
                out.line(f"  {c.name}: {'ok' if c.ok else 'FAIL ' + c.witness}")
    finally:
        out.close()
    return 0 if report.verified else 1


def _cmd_oracle_compare(config: RunConfig) -> int:
    _require_family(config)
    values = spt_table(config.family, config.n_max)
    ok = True
    out = _Writer(config)
    try:
        rows = []
        for n in range(1, config.n_max + 1):
            oracle = spt_oracle(config.family, n)
            same = oracle == values[n]
            ok = ok and same
            rows.append((n, values[n], oracle, same))
        if config.fmt == "json":
            out.stream.write(_dump_json({
                "family": config.family,
                "rows": [{"n": n, "series": s, "oracle": o, "equal": e} for n, s, o, e in rows],
                "equal": ok,
            }))
        elif config.fmt == "csv":
            w = out.csv_writer()
            w.writerow(["n", "series", "oracle", "equal"])
            for n, s, o, e in rows:
                w.writerow([n, s, o, "yes" if e else "no"])
        else:
            for n, s, o, e in rows:
                out.line(f"{n}\t{s}\t{o}\t{'ok' if e else 'MISMATCH'}")
    finally:
        out.close()
    return 0 if ok else 1


def _cmd_list(config: RunConfig) -> int:
    out = _Writer(config)
    try:
        cases = sorted(catalog().values(), key=lambda c: c.id)
        if config.fmt == "json":
            out.stream.write(_dump_json([
                {"id": c.id, "ring": c.ring, "default_order": c.default_order,
                 "description": c.description}
                for c in cases
            ]))
        elif config.fmt == "csv":
            w = out.csv_writer()
            w.writerow(["id", "ring", "default_order", "description"])
            for c in cases:
                w.writerow([c.id, c.ring, c.default_order, c.description])
        else:
            for c in cases:
                out.line(f"{c.id:24s} {c.ring:14s} order {c.default_order:4d}  {c.description}")
    finally:
        out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sptforge",
        description="Exact verification of crank-refined smallest-parts series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family=False, n_max=False):
        p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", default="", help="write to a file instead of stdout")
        if family:
            p.add_argument("--family", required=True)
        if n_max:
            p.add_argument("--max", dest="n_max", type=int, required=True)

    p = sub.add_parser("verify", help="run identity cases from the catalog")
    p.add_argument("--id", dest="case_glob", default="*", help="glob over case ids")
    p.add_argument("--order", type=int, default=None, help="raise the truncation order")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--timing", choices=("wall", "none"), default="wall",
                   help="none zeroes the millis field for reproducible output")
    p.add_argument("--paper-bounds", action="store_true",
                   help="run flagged cases at the minimal orders from the original analysis")
    p.add_argument("--seed", type=int, default=None,
                   help="reserved for randomized suites; accepted for config parity")
    common(p)

    p = sub.add_parser("spt", help="weighted smallest-parts counts of one family")
    common(p, family=True, n_max=True)

    p = sub.add_parser("crank", help="crank-class counts of one family modulo t")
    p.add_argument("--t", type=int, default=5)
    common(p, family=True, n_max=True)

    p = sub.add_parser("congruence", help="stacked congruence checks for one progression")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    common(p, family=True, n_max=True)

    p = sub.add_parser("oracle-compare", help="series coefficients against enumeration")
    common(p, family=True, n_max=True)

    p = sub.add_parser("list", help="list the identity catalog")
    common(p)

    return parser


_DISPATCH = {
    "verify": _cmd_verify,
    "spt": _cmd_spt,
    "crank": _cmd_crank,
    "congruence": _cmd_congruence,
    "oracle-compare": _cmd_oracle_compare,
    "list": _cmd_list,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    config = RunConfig(command=ns.command)
    for name in vars(ns):
        if hasattr(config, name):
            setattr(config, name, getattr(ns, name))
    try:
        _check_caps(config)
        return _DISPATCH[config.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# operation-style alias: run(argv) -> exit code
run = main


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
