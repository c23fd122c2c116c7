"""Command-line front end: per-prime reports, range sweeps, golden-table
verification, and the zeta special value.

Exit codes: 0 success, 1 verification mismatch or integrality violation,
2 usage error, 3 I/O error.  All data output is exact (rationals as
"num/den" in text modes, {"num": ..., "den": ...} in JSON) and
deterministic: identical invocations produce byte-identical stdout.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .arith import IntegralityViolation, is_prime, primes_in
from .classno import IsogenyCensus, census
from .quadratic import FundamentalUnit
from .zeta import zeta_minus_one

__all__ = [
    "GoldenRow",
    "VerificationReport",
    "SWEEP_COLUMNS",
    "sweep_row",
    "render_sweep_csv",
    "parse_sweep_csv",
    "verify_tables",
    "main",
]

Cell = Union[int, Fraction, None]

SWEEP_COLUMNS = (
    "p", "H",
    "h_O1", "mass_O1", "ell_O1",
    "h_O8", "mass_O8", "ell_O8",
    "h_O16", "mass_O16", "ell_O16",
    "h_D", "deuring",
    "zeta_minus1", "h_F", "h_K1", "h_K2", "h_K3",
    "varpi", "eps_norm",
)

_GOLDEN_FILES = {1: "table_o1.csv", 2: "table_o8.csv", 3: "table_o16.csv"}
_GOLDEN_COLUMNS = {
    1: ("h_O1", "mass_O1", "ell_O1", "zeta_minus1", "h_F", "h_K1", "h_K2", "h_K3"),
    2: ("h_O8", "mass_O8", "ell_O8"),
    3: ("h_O16", "mass_O16", "ell_O16"),
}


# ----------------------------------------------------------------------
# value rendering and parsing
# ----------------------------------------------------------------------

def _fmt(v: Cell) -> str:
    if v is None:
        return ""
    return str(v)  # Fraction prints num/den, integers print bare


def _json_value(v: Cell):
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    return v


def _parse_cell(s: str) -> Cell:
    s = s.strip()
    if not s:
        return None
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return int(s)


def _unit_str(u: FundamentalUnit, p: int) -> str:
    coeff = "" if u.b == 1 else f"{u.b}*"
    core = f"{u.a} + {coeff}sqrt({p})"
    return core if u.denom == 1 else f"({core})/{u.denom}"


# ----------------------------------------------------------------------
# sweep rows
# ----------------------------------------------------------------------

def sweep_row(c: IsogenyCensus) -> dict:
    """Project a census onto the flat sweep schema (SWEEP_COLUMNS order)."""
    r1 = c.reports[0]
    r8 = c.reports[1] if len(c.reports) == 3 else None
    r16 = c.reports[2] if len(c.reports) == 3 else None
    return {
        "p": c.p,
        "H": c.H,
        "h_O1": r1.h, "mass_O1": r1.mass, "ell_O1": r1.ell,
        "h_O8": r8.h if r8 else None,
        "mass_O8": r8.mass if r8 else None,
        "ell_O8": r8.ell if r8 else None,
        "h_O16": r16.h if r16 else None,
        "mass_O16": r16.mass if r16 else None,
        "ell_O16": r16.ell if r16 else None,
        "h_D": c.h_D,
        "deuring": c.deuring,
        "zeta_minus1": c.zeta_minus1,
        "h_F": c.h_F,
        "h_K1": c.h_K1,
        "h_K2": c.h_K2,
        "h_K3": c.h_K3,
        "varpi": c.varpi,
        "eps_norm": c.unit.norm,
    }


def render_sweep_csv(rows: Sequence[dict]) -> str:
    out = [",".join(SWEEP_COLUMNS)]
    for row in rows:
        out.append(",".join(_fmt(row[col]) for col in SWEEP_COLUMNS))
    return "\n".join(out) + "\n"


def parse_sweep_csv(text: str) -> list[dict]:
    """Inverse of render_sweep_csv; round-trips every emitted row."""
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != SWEEP_COLUMNS:
        raise ValueError(f"unexpected sweep header: {header}")
    return [
        {col: _parse_cell(cell) for col, cell in zip(SWEEP_COLUMNS, row)}
        for row in reader if row
    ]


# ----------------------------------------------------------------------
# golden tables
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GoldenRow:
    table_id: int
    p: int
    expected: tuple  # ((column, value), ...) with blank cells dropped


@dataclass
class VerificationReport:
    rows_checked: int
    mismatches: list  # (table_id, p, column, expected, computed)
    elapsed: float


def _load_golden(table_id: int, golden_dir: Optional[Path]) -> list[GoldenRow]:
    name = _GOLDEN_FILES[table_id]
    if golden_dir is not None:
        text = (Path(golden_dir) / name).read_text(encoding="ascii")
    else:
        text = (resources.files("sscensus") / "data" / name).read_text(encoding="ascii")
    reader = csv.DictReader(io.StringIO(text))
    want = ("p",) + _GOLDEN_COLUMNS[table_id]
    if tuple(reader.fieldnames or ()) != want:
        raise ValueError(f"{name}: bad header {reader.fieldnames}")
    rows = []
    for rec in reader:
        p = int(rec["p"])
        if not is_prime(p):
            raise ValueError(f"{name}: {p} is not prime")
        if table_id == 1 and not 7 <= p < 200:
            raise ValueError(f"{name}: p={p} out of range")
        if table_id in (2, 3) and not (5 < p < 200 and p % 4 == 1):
            raise ValueError(f"{name}: p={p} out of range")
        expected = tuple(
            (col, _parse_cell(rec[col]))
            for col in _GOLDEN_COLUMNS[table_id]
            if rec[col].strip() != ""  # h_K2 is blank for p = 1 mod 4
        )
        rows.append(GoldenRow(table_id=table_id, p=p, expected=expected))
    return rows


def _computed_cells(c: IsogenyCensus, table_id: int) -> dict:
    r1 = c.reports[0]
    if table_id == 1:
        return {
            "h_O1": r1.h, "mass_O1": r1.mass, "ell_O1": r1.ell,
            "zeta_minus1": c.zeta_minus1, "h_F": c.h_F,
            "h_K1": c.h_K1, "h_K2": c.h_K2, "h_K3": c.h_K3,
        }
    r = c.reports[1] if table_id == 2 else c.reports[2]
    tag = "O8" if table_id == 2 else "O16"
    return {f"h_{tag}": r.h, f"mass_{tag}": r.mass, f"ell_{tag}": r.ell}


def verify_tables(golden_dir: Optional[Path] = None) -> VerificationReport:
    """Recompute every golden-table cell and collect mismatches."""
    start = time.monotonic()
    rows_checked = 0
    mismatches = []
    censuses: dict[int, IsogenyCensus] = {}
    for table_id in (1, 2, 3):
        for row in _load_golden(table_id, golden_dir):
            if row.p not in censuses:
                censuses[row.p] = census(row.p)
            got = _computed_cells(censuses[row.p], table_id)
            for col, expected in row.expected:
                if got[col] != expected:
                    mismatches.append((table_id, row.p, col, expected, got[col]))
            rows_checked += 1
    return VerificationReport(
        rows_checked=rows_checked,
        mismatches=mismatches,
        elapsed=time.monotonic() - start,
    )


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------

def _usage(msg: str) -> int:
    print(f"census: error: {msg}", file=sys.stderr)
    return 2


def cmd_info(args: argparse.Namespace) -> int:
    p = args.p
    if not is_prime(p):
        return _usage(f"{p} is not prime")
    c = census(p)
    if args.format == "csv":
        sys.stdout.write(render_sweep_csv([sweep_row(c)]))
        return 0
    if args.format == "json":
        doc = {
            "p": c.p,
            "special": c.special,
            "zeta_minus1": _json_value(c.zeta_minus1),
            "h_F": c.h_F,
            "unit": {"a": c.unit.a, "b": c.unit.b,
                     "denom": c.unit.denom, "norm": c.unit.norm},
            "varpi": c.varpi,
            "h_K1": c.h_K1, "h_K2": c.h_K2, "h_K3": c.h_K3,
            "orders": [
                {"kind": int(r.kind), "mass": _json_value(r.mass),
                 "ell": _json_value(r.ell), "h": r.h}
                for r in c.reports
            ],
            "H": c.H, "h_D": c.h_D, "deuring": c.deuring,
        }
        print(json.dumps(doc, indent=2))
        return 0
    lines = [
        ("p", str(c.p)),
        ("special", "yes (special case)" if c.special else "no"),
        ("zeta_minus1", _fmt(c.zeta_minus1)),
        ("h_F", str(c.h_F)),
        ("eps", _unit_str(c.unit, c.p)),
        ("eps_norm", str(c.unit.norm)),
        ("varpi", "-" if c.varpi is None else str(c.varpi)),
        ("h_K1", str(c.h_K1)),
        ("h_K2", "-" if c.h_K2 is None else str(c.h_K2)),
        ("h_K3", str(c.h_K3)),
    ]
    for key, val in lines:
        print(f"{key:<12} {val}")
    print()
    print(f"{'order':<6} {'mass':>10} {'ell':>10} {'h':>6}")
    for r in c.reports:
        print(f"{'O_' + str(int(r.kind)):<6} {_fmt(r.mass):>10} "
              f"{_fmt(r.ell):>10} {r.h:>6}")
    print()
    for key, val in (("H", c.H), ("h_D", c.h_D), ("deuring", c.deuring)):
        print(f"{key:<12} {val}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.p_min < 2 or args.p_min > args.p_max:
        return _usage(f"need 2 <= pmin <= pmax, got {args.p_min} {args.p_max}")
    rows = [sweep_row(census(p)) for p in primes_in(args.p_min, args.p_max)]
    if args.format == "json":
        doc = [{col: _json_value(row[col]) for col in SWEEP_COLUMNS} for row in rows]
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(render_sweep_csv(rows))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    golden = Path(args.golden) if args.golden else None
    try:
        report = verify_tables(golden)
    except (OSError, ValueError) as exc:
        print(f"census: golden table error: {exc}", file=sys.stderr)
        return 3
    for table_id, p, col, expected, got in report.mismatches:
        print(f"MISMATCH table {table_id} p={p} {col}: "
              f"expected {_fmt(expected)}, computed {_fmt(got)}")
    print(f"rows checked: {report.rows_checked}")
    print(f"mismatches: {len(report.mismatches)}")
    print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    return 1 if report.mismatches else 0


def cmd_zeta(args: argparse.Namespace) -> int:
    if not is_prime(args.p):
        return _usage(f"{args.p} is not prime")
    print(_fmt(zeta_minus_one(args.p)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="census",
        description="Exact census of supersingular abelian surfaces over F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="full report for one prime")
    p_info.add_argument("p", type=int)
    p_info.add_argument("--format", choices=("table", "json", "csv"),
                        default="table")
    p_info.set_defaults(func=cmd_info)

    p_sweep = sub.add_parser("sweep", help="one row per prime in a range")
    p_sweep.add_argument("p_min", type=int)
    p_sweep.add_argument("p_max", type=int)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="recompute the golden tables")
    p_verify.add_argument("--golden", help="directory overriding the embedded tables")
    p_verify.set_defaults(func=cmd_verify)

    p_zeta = sub.add_parser("zeta", help="print zeta_F(-1) for Q(sqrt(p))")
    p_zeta.add_argument("p", type=int)
    p_zeta.set_defaults(func=cmd_zeta)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except IntegralityViolation as exc:
        print(f"INTEGRALITY_VIOLATION: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"census: i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
