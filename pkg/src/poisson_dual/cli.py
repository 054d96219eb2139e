"""Command-line front end: ``solve``, ``verify`` and ``table``.

Densities are given either in a small term language::

    2/r + 0.3          # 2 r^-1 + 0.3 r^0
    1.5*r^2 + 4/r      # explicit exponents via *r^

or as a JSON list of ``{"c": ..., "k": ...}`` records.

Exit codes: 0 success, 2 invalid input, 3 not bound, 4 verification failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys

from .duality import DualSolution, solve_dual
from .electrostatics import ChargeDensity
from .errors import DensitySyntaxError, DualityError, UnsupportedDensityError
from .oracle import GridSpec, VerificationReport, verify
from .radial_algebra import RadialPolynomial

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_BOUND = 3
EXIT_FAILED = 4

TABLE_HEADER = ("r", "rho", "E_field", "V", "U", "psi")
DEFAULT_MAX_ROWS = 2000

_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_WS = re.compile(r"\s*")


def _byte_offset(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def fail(self, message: str):
        raise DensitySyntaxError(message, _byte_offset(self.text, self.i))

    def skip(self):
        self.i = _WS.match(self.text, self.i).end()

    def accept(self, literal: str) -> bool:
        self.skip()
        if self.text.startswith(literal, self.i):
            self.i += len(literal)
            return True
        return False

    def number(self) -> float:
        self.skip()
        m = _NUMBER.match(self.text, self.i)
        if not m:
            self.fail("expected a number")
        self.i = m.end()
        return float(m.group())

    def term(self) -> tuple[float, float]:
        c = self.number()
        if self.accept("/"):
            if not self.accept("r"):
                self.fail("expected 'r' after '/'")
            return c, -1.0
        if self.accept("*"):
            if not (self.accept("r") and self.accept("^")):
                self.fail("expected 'r^' after '*'")
            return c, self.number()
        return c, 0.0

    def parse(self) -> list[tuple[float, float]]:
        terms = [self.term()]
        while self.accept("+"):
            terms.append(self.term())
        self.skip()
        if self.i != len(self.text):
            self.fail(f"unexpected {self.text[self.i]!r}")
        return terms


def _parse_records(text: str) -> list[tuple[float, float]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DensitySyntaxError(exc.msg, _byte_offset(text, exc.pos)) from None
    if not isinstance(doc, list):
        raise DensitySyntaxError("expected a list of {c, k} records", 0)
    terms = []
    for rec in doc:
        if not isinstance(rec, dict) or set(rec) != {"c", "k"}:
            raise DensitySyntaxError(f"bad record {rec!r}; expected {{c, k}}", 0)
        terms.append((float(rec["c"]), float(rec["k"])))
    return terms


def parse_density(spec: str) -> ChargeDensity:
    if not spec.strip():
        raise DensitySyntaxError("empty density", 0)
    if spec.lstrip().startswith("["):
        terms = _parse_records(spec)
    else:
        terms = _TermParser(spec).parse()
    for c, k in terms:
        if not (math.isfinite(c) and math.isfinite(k)):
            raise DensitySyntaxError(f"non-finite term ({c}, {k})", 0)
        if k < -1:
            raise UnsupportedDensityError(f"exponent {k!r} is below -1")
    return ChargeDensity(RadialPolynomial(tuple(terms)))


def render_density(rho: ChargeDensity) -> str:
    parts = []
    for c, k in rho.profile:
        if k == -1.0:
            parts.append(f"{c!r}/r")
        elif k == 0.0:
            parts.append(repr(c))
        else:
            parts.append(f"{c!r}*r^{k!r}")
    return " + ".join(parts)


def poly_records(p: RadialPolynomial) -> list[dict]:
    return [{"c": c, "k": k} for c, k in p]


def solution_document(sol: DualSolution) -> dict:
    return {
        "density": poly_records(sol.density.profile),
        "field": poly_records(sol.field),
        "potential_V": poly_records(sol.V),
        "quantum_potential_U": poly_records(sol.U),
        "E0": sol.E0,
        "S": poly_records(sol.S),
        "A": sol.A,
        "bound": sol.bound,
    }


def table_rows(sol: DualSolution, grid: GridSpec, max_rows: int = DEFAULT_MAX_ROWS) -> list[tuple]:
    r = grid.points()
    stride = max(1, math.ceil(len(r) / max_rows))
    r = r[::stride]
    cols = [r, sol.density.profile(r), sol.field(r), sol.V(r), sol.U(r)]
    psi = sol.psi(r) if sol.A is not None else [None] * len(r)
    return [tuple(float(v) for v in row) + (None if p is None else float(p),) for *row, p in zip(*cols, psi)]


# -- formatting ---------------------------------------------------------------
def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, list):
        return " + ".join(f"{t['c']!r}*r^{t['k']!r}" for t in v) or "0"
    return repr(v) if isinstance(v, float) else str(v).lower() if isinstance(v, bool) else str(v)


def _emit_mapping(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("key", "value"))
        w.writerows((k, _fmt(v)) for k, v in doc.items())
        return buf.getvalue()
    width = max(len(k) for k in doc)
    return "".join(f"{k:<{width}}  {_fmt(v)}\n" for k, v in doc.items())


def _emit_table(rows: list[tuple], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"columns": list(TABLE_HEADER), "rows": [list(r) for r in rows]}, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n", delimiter="," if fmt == "csv" else " ")
    w.writerow(TABLE_HEADER)
    w.writerows(tuple(_fmt(v) for v in row) for row in rows)
    return buf.getvalue()


def _report_error(code: str, message: str, **extra) -> None:
    sys.stderr.write(json.dumps({"error": code, "message": message, **extra}) + "\n")


# -- commands -----------------------------------------------------------------
def cmd_solve(args, rho: ChargeDensity, out) -> int:
    sol = solve_dual(rho)
    out.write(_emit_mapping(solution_document(sol), args.format or "json"))
    if args.strict_bound and not sol.bound:
        _report_error("not_bound", f"E0 = {sol.E0!r} is not a bound state")
        return EXIT_NOT_BOUND
    return EXIT_OK


def cmd_verify(args, rho: ChargeDensity, out) -> int:
    report: VerificationReport = verify(rho, args.grid)
    out.write(_emit_mapping(report.to_dict(), args.format or "json"))
    if report.passed:
        return EXIT_OK
    if report.numeric_E0 is None and report.reason in ("E0 >= 0", "not normalizable"):
        _report_error("not_bound", report.reason)
        return EXIT_NOT_BOUND
    _report_error("verification_failed", report.reason or "")
    return EXIT_FAILED


def cmd_table(args, rho: ChargeDensity, out) -> int:
    sol = solve_dual(rho)
    out.write(_emit_table(table_rows(sol, args.grid, args.max_rows), args.format or "csv"))
    if args.strict_bound and not sol.bound:
        _report_error("not_bound", f"E0 = {sol.E0!r} is not a bound state")
        return EXIT_NOT_BOUND
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "verify": cmd_verify, "table": cmd_table}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="poisson-dual", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    defaults = GridSpec()
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--density", required=True, help='e.g. "2/r + 0.3" or JSON [{"c": 2, "k": -1}]')
        p.add_argument("--rmin", type=float, default=defaults.r_min)
        p.add_argument("--rmax", type=float, default=defaults.r_max)
        p.add_argument("--n", type=int, default=defaults.n)
        p.add_argument("--format", choices=("json", "csv", "text"), default=None)
        p.add_argument("--strict-bound", action="store_true", help="exit 3 when the state is not bound")
        if name == "table":
            p.add_argument("--max-rows", type=int, default=DEFAULT_MAX_ROWS)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.grid = GridSpec(args.rmin, args.rmax, args.n)
        if getattr(args, "max_rows", 1) < 1:
            raise DualityError("--max-rows must be positive")
        rho = parse_density(args.density)
    except DensitySyntaxError as exc:
        _report_error(exc.code, str(exc), offset=exc.offset)
        return EXIT_INVALID
    except DualityError as exc:
        _report_error(exc.code, str(exc))
        return EXIT_INVALID
    try:
        return COMMANDS[args.command](args, rho, out)
    except DualityError as exc:
        _report_error(exc.code, str(exc))
        return EXIT_INVALID
    except Exception as exc:  # keep the exit-code contract total
        _report_error("internal_error", repr(exc))
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
