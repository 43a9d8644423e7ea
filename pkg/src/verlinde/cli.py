"""Command-line interface.

Subcommands: ``compute`` (one certified number), ``weights`` (level weight
and orbit listings), ``suite`` (the batch identity checks) and
``compare-oracle`` (the two independent SO paths side by side).  Values
are emitted as decimal strings since they outgrow 64-bit integers quickly.

Exit codes: 0 success, 1 failed check or certification, 2 argument error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .formula import n_so, n_sp, verlinde_sc
from .numeric import DEFAULT_PRECISION, IntegralityError, VerlindeResult
from .rootsys import GroupType, build_root_system
from .so_oracle import n_so_oracle
from .suite import run_default_suite
from .weights import (
    CenterSpec,
    enumerate_level_weights,
    marks,
    orbit_decompose,
    restrict_to_quotient,
    u_coords,
)

RECORD_FIELDS = (
    "group_label",
    "level",
    "genus",
    "value",
    "residual",
    "precision_bits",
    "term_count",
)

_QUOTIENT_SPEC = {"A": CenterSpec.SO3, "B": CenterSpec.SO_ODD, "D": CenterSpec.SO_EVEN}


def output_record(res: VerlindeResult) -> dict:
    level = list(res.level) if isinstance(res.level, tuple) else res.level
    return {
        "group_label": res.group_label,
        "level": level,
        "genus": res.genus,
        "value": str(res.value),
        "residual": f"{res.residual:.6e}",
        "precision_bits": res.precision_bits,
        "term_count": res.term_count,
    }


def _emit_record(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, sort_keys=True))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=RECORD_FIELDS)
        writer.writeheader()
        row = dict(record)
        if isinstance(row["level"], list):
            row["level"] = ":".join(str(x) for x in row["level"])
        writer.writerow(row)
        print(buf.getvalue(), end="")
    else:  # md
        print("| " + " | ".join(RECORD_FIELDS) + " |")
        print("|" + "---|" * len(RECORD_FIELDS))
        print("| " + " | ".join(str(record[f]) for f in RECORD_FIELDS) + " |")


def _cmd_compute(args, parser) -> int:
    try:
        if args.group == "so":
            if args.r is None:
                parser.error("--group so requires --r")
            res = n_so(args.r, args.genus, args.precision)
        elif args.group == "sp":
            if args.r is None or args.level is None:
                parser.error("--group sp requires --r and --level")
            res = n_sp(args.r, args.level, args.genus, args.precision)
        else:  # sc
            if args.type is None or args.rank is None or args.level is None:
                parser.error("--group sc requires --type, --rank and --level")
            rs = build_root_system(GroupType(args.type, args.rank))
            res = verlinde_sc(rs, args.level, args.genus, args.precision)
    except ValueError as err:
        parser.error(str(err))
    except IntegralityError as err:
        _emit_record(
            {
                "error": "integrality-certification-failed",
                "raw_value": err.raw_value,
                "residual": f"{err.residual:.6e}",
                "precision_bits": err.precision_bits,
            },
            "json",
        )
        return 1
    _emit_record(output_record(res), args.format)
    return 0


def _cmd_weights(args, parser) -> int:
    try:
        rs = build_root_system(GroupType(args.type, args.rank))
        P = enumerate_level_weights(rs, args.level)
        if args.quotient is None:
            listing = [(lam, None) for lam in P.weights]
        else:
            spec = _QUOTIENT_SPEC.get(args.type)
            if spec is None or (args.type == "A" and args.rank != 1):
                parser.error(
                    f"no SO-type center quotient for {args.type}{args.rank}"
                )
            orbits = orbit_decompose(restrict_to_quotient(P, spec), spec)
            listing = [(o.representative, o.size) for o in orbits.orbits]
    except ValueError as err:
        parser.error(str(err))

    rows = []
    for lam, orbit_size in listing:
        row = {
            "marks": list(marks(rs, lam)),
            "coords": [str(c) for c in lam],
        }
        if rs.family in ("B", "D"):
            row["u"] = [str(x) for x in u_coords(rs, lam).u]
        if orbit_size is not None:
            row["orbit_size"] = orbit_size
        rows.append(row)

    if args.format == "json":
        print(json.dumps({"group": str(rs.group_type), "level": args.level,
                          "rows": rows}, sort_keys=True))
    else:
        headers = list(rows[0].keys()) if rows else ["marks", "coords"]
        print("| " + " | ".join(headers) + " |")
        print("|" + "---|" * len(headers))
        for row in rows:
            print("| " + " | ".join(str(row[h]) for h in headers) + " |")
    return 0


def _cmd_suite(args) -> int:
    report = run_default_suite(
        so_r_max=args.r_max,
        so_g_max=args.genus_max,
        sp_max=args.sp_max,
        sp_g_max=args.sp_genus_max,
        unitarity_rank_max=args.unitarity_rank_max,
        unitarity_level_max=args.unitarity_level_max,
        precision=args.precision,
    )
    print(report.to_json() if args.format == "json" else report.to_markdown())
    return 0 if report.failed == 0 else 1


def _cmd_compare_oracle(args) -> int:
    engine = n_so(args.r, args.genus, args.precision)
    oracle = n_so_oracle(args.r, args.genus, args.precision)
    agree = engine.value == oracle.value
    print(
        json.dumps(
            {
                "engine": output_record(engine),
                "oracle": output_record(oracle),
                "equal": agree,
            },
            sort_keys=True,
        )
    )
    return 0 if agree else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verlinde",
        description="Certified Verlinde dimension numbers for classical groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one certified dimension")
    p.add_argument("--group", choices=("so", "sp", "sc"), required=True)
    p.add_argument("--r", type=int, help="r of SO(r), or r of Sp(2r)")
    p.add_argument("--level", type=int, help="level (groups sp and sc)")
    p.add_argument("--type", choices=("A", "B", "C", "D"), help="family (group sc)")
    p.add_argument("--rank", type=int, help="rank (group sc)")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")

    p = sub.add_parser("weights", help="list level weights (and orbits)")
    p.add_argument("--type", choices=("A", "B", "C", "D"), required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--quotient", choices=("so",), default=None,
                   help="restrict to the SO-type center quotient and show orbits")
    p.add_argument("--format", choices=("json", "md"), default="md")

    p = sub.add_parser("suite", help="run the batch identity checks")
    p.add_argument("--r-max", type=int, default=12)
    p.add_argument("--genus-max", type=int, default=5)
    p.add_argument("--sp-max", type=int, default=4)
    p.add_argument("--sp-genus-max", type=int, default=4)
    p.add_argument("--unitarity-rank-max", type=int, default=6)
    p.add_argument("--unitarity-level-max", type=int, default=4)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--format", choices=("json", "md"), default="md")

    p = sub.add_parser("compare-oracle", help="engine vs sequence oracle for SO(r)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return _cmd_compute(args, parser)
    if args.command == "weights":
        return _cmd_weights(args, parser)
    if args.command == "suite":
        return _cmd_suite(args)
    return _cmd_compare_oracle(args)


if __name__ == "__main__":
    sys.exit(main())
