"""Command-line front end.

Subcommands: c (single Ramanujan sum), E / R (full-range and coprime
product sums over a polynomial system or a shift vector), T (modified
orthogonality sum), roots (root counts of a congruence system), alpha
(Euler product constant), asymptotic (average-order report) and verify
(named invariant suites).  Output formats: plain, json, csv.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 scale error,
4 verification failure.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from itertools import product as cartesian

from .arith import mobius, euler_phi  # noqa: F401  (re-exported for interactive use)
from .asymptotics import alpha_r, asymptotic_report
from .congruences import count_roots, parse_polynomial
from .errors import DomainError, PolynomialSyntaxError, ScaleError
from .even import t_a
from .products import e_g_direct, e_g_fast, e_shift, r_g_direct, r_g_fast, r_shift
from .ramanujan import ramanujan_sum
from .verify import run_suite, suite_names, worker_count

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_SCALE = 3
EXIT_VERIFY = 4


class UsageError(Exception):
    pass


@dataclass
class CommandRequest:
    subcommand: str
    moduli: tuple[int, ...] | None = None
    polys: tuple[str, ...] | None = None
    shifts: tuple[int, ...] | None = None
    a: int | None = None
    r: int | None = None
    x: int | None = None
    prime_bound: int | None = None
    strategy: str | None = None
    format: str = "plain"
    range_max: int | None = None
    suite: str | None = None
    max: int | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}")


def _poly_list(text: str) -> tuple[str, ...]:
    parts = tuple(p for p in text.split(";"))
    for p in parts:
        try:
            parse_polynomial(p)
        except PolynomialSyntaxError as exc:
            raise argparse.ArgumentTypeError(f"bad polynomial {p!r}: {exc}")
    return parts


def _build_parser() -> _Parser:
    parser = _Parser(prog="ramsum", description="exact Ramanujan-sum computations")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("c", help="Ramanujan sum c_n(a)")
    p.add_argument("--moduli", type=_int_list, help="the single modulus n")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--range", type=int, dest="range_max", help="tabulate n = 1..N")
    add_format(p)

    for name, hlp in (("E", "averaged full-range product sum"), ("R", "coprime product sum")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--moduli", type=_int_list)
        p.add_argument("--polys", type=_poly_list, help="semicolon-separated polynomials")
        p.add_argument("--shifts", type=_int_list, help="linear system shifts a_i")
        p.add_argument("--strategy", choices=("fast", "direct"), default="fast")
        p.add_argument("--range", type=int, dest="range_max", help="tabulate all tuples in [1..N]^r")
        add_format(p)

    p = sub.add_parser("T", help="modified orthogonality sum")
    p.add_argument("--moduli", type=_int_list)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--strategy", choices=("closed", "spectral", "direct"), default="closed")
    p.add_argument("--r", type=int, help="tuple arity for --range (default 1)")
    p.add_argument("--range", type=int, dest="range_max")
    add_format(p)

    p = sub.add_parser("roots", help="root counts N and eta of a congruence system")
    p.add_argument("--moduli", type=_int_list, required=True)
    p.add_argument("--polys", type=_poly_list, required=True)
    p.add_argument("--strategy", choices=("multiplicative", "direct"), default="multiplicative")
    add_format(p)

    p = sub.add_parser("alpha", help="Euler product constant")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--prime-bound", type=int, dest="prime_bound", default=100_000)
    add_format(p)

    p = sub.add_parser("asymptotic", help="average-order report for g_r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--prime-bound", type=int, dest="prime_bound", default=100_000)
    add_format(p)

    p = sub.add_parser("verify", help="run named invariant suites")
    p.add_argument("--suite", required=True, help=f"one of: {', '.join(suite_names())}, all")
    p.add_argument("--max", type=int, help="override the suite's default range")
    add_format(p)

    return parser


def parse_args(argv) -> CommandRequest:
    """Parse and validate argv into a CommandRequest; raises UsageError."""
    ns = _build_parser().parse_args(argv)
    req = CommandRequest(subcommand=ns.subcommand, format=getattr(ns, "format", "plain"))
    for fld in ("moduli", "polys", "shifts", "a", "r", "x", "prime_bound", "strategy",
                "range_max", "suite", "max"):
        if hasattr(ns, fld):
            setattr(req, fld, getattr(ns, fld))

    cmd = req.subcommand
    if cmd in ("c", "E", "R", "T"):
        if req.range_max is not None and req.moduli is not None:
            raise UsageError(f"{cmd}: --range and --moduli are mutually exclusive")
        if req.range_max is None and req.moduli is None:
            raise UsageError(f"{cmd}: one of --moduli or --range is required")
        if req.range_max is not None and req.range_max < 1:
            raise UsageError(f"{cmd}: --range must be >= 1")
    if cmd == "c" and req.moduli is not None and len(req.moduli) != 1:
        raise UsageError("c: exactly one modulus expected")
    if cmd == "T" and req.r is not None and req.range_max is None:
        raise UsageError("T: --r only applies together with --range")
    if cmd in ("E", "R"):
        if (req.polys is None) == (req.shifts is None):
            raise UsageError(f"{cmd}: exactly one of --polys or --shifts is required")
        arity = len(req.polys or req.shifts)
        if req.moduli is not None and arity != len(req.moduli):
            kind = "poly" if req.polys else "shift"
            raise UsageError(
                f"{cmd}: {kind} count {arity} != moduli count {len(req.moduli)}"
            )
    if cmd == "roots" and len(req.polys) != len(req.moduli):
        raise UsageError(f"roots: poly count {len(req.polys)} != moduli count {len(req.moduli)}")
    return req


# ---------------------------------------------------------------------------
# execution


def _tuple_space(req: CommandRequest):
    if req.subcommand == "c":
        arity = 1
    elif req.subcommand == "T":
        arity = req.r or 1
    else:
        arity = len(req.polys or req.shifts)
    return cartesian(range(1, req.range_max + 1), repeat=arity)


def _value_for(req: CommandRequest, moduli: tuple[int, ...]):
    cmd = req.subcommand
    if cmd == "c":
        return ramanujan_sum(moduli[0], req.a)
    if cmd == "E":
        if req.polys:
            fn = e_g_direct if req.strategy == "direct" else e_g_fast
            return fn(req.polys, moduli)
        if req.strategy == "direct":
            return e_g_direct(tuple(f"x-{a}" if a >= 0 else f"x+{-a}" for a in req.shifts), moduli)
        return e_shift(req.shifts, moduli)
    if cmd == "R":
        if req.polys:
            fn = r_g_direct if req.strategy == "direct" else r_g_fast
            return fn(req.polys, moduli)
        if req.strategy == "direct":
            return r_g_direct(tuple(f"x-{a}" if a >= 0 else f"x+{-a}" for a in req.shifts), moduli)
        return r_shift(req.shifts, moduli)
    if cmd == "T":
        return t_a(moduli, req.a, strategy=req.strategy)
    raise DomainError(f"no tuple evaluation for {cmd}")


def _input_columns(req: CommandRequest, moduli) -> list[tuple[str, object]]:
    cols: list[tuple[str, object]] = []
    if req.subcommand == "c":
        cols.append(("n", moduli[0]))
    else:
        cols += [(f"m_{i + 1}", m) for i, m in enumerate(moduli)]
    if req.polys is not None:
        cols.append(("polys", ";".join(req.polys)))
    if req.shifts is not None:
        cols.append(("shifts", ",".join(str(a) for a in req.shifts)))
    if req.a is not None:
        cols.append(("a", req.a))
    return cols


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit_rows(req: CommandRequest, rows) -> str:
    """rows: list of (columns, value) with columns from _input_columns."""
    if req.format == "json":
        payload = {
            "subcommand": req.subcommand,
            "rows": [dict(cols, value=value) for cols, value in rows],
        }
        return json.dumps(payload, sort_keys=True)
    if req.format == "csv":
        header = [name for name, _ in rows[0][0]] + ["value"]
        return _csv_text(header, [[v for _, v in cols] + [value] for cols, value in rows])
    return "\n".join(
        " ".join(f"{name}={v}" for name, v in cols) + f" value={value}" for cols, value in rows
    )


def _emit_scalar(req: CommandRequest, inputs: dict, value) -> str:
    if req.format == "json":
        return json.dumps(
            {"subcommand": req.subcommand, "inputs": inputs, "value": value}, sort_keys=True
        )
    if req.format == "csv":
        return _csv_text(list(inputs) + ["value"], [list(inputs.values()) + [value]])
    return str(value)


def execute(req: CommandRequest) -> tuple[int, str]:
    """Run a validated request; returns (exit status, formatted output)."""
    cmd = req.subcommand
    if cmd in ("c", "E", "R", "T"):
        if req.range_max is not None:
            rows = []
            for ms in _tuple_space(req):
                rows.append((dict(_input_columns(req, ms)), _value_for(req, ms)))
            return EXIT_OK, _emit_rows(req, [(list(c.items()), v) for c, v in rows])
        value = _value_for(req, req.moduli)
        return EXIT_OK, _emit_scalar(req, dict(_input_columns(req, req.moduli)), value)

    if cmd == "roots":
        full = count_roots(req.polys, req.moduli, units_only=False, strategy=req.strategy)
        units = count_roots(req.polys, req.moduli, units_only=True, strategy=req.strategy)
        inputs = dict(_input_columns(req, req.moduli))
        if req.format == "json":
            return EXIT_OK, json.dumps(
                {
                    "subcommand": "roots",
                    "inputs": inputs,
                    "modulus": full.modulus,
                    "N": full.count,
                    "eta": units.count,
                },
                sort_keys=True,
            )
        if req.format == "csv":
            return EXIT_OK, _csv_text(
                list(inputs) + ["modulus", "N", "eta"],
                [list(inputs.values()) + [full.modulus, full.count, units.count]],
            )
        return EXIT_OK, f"N={full.count} eta={units.count} (mod {full.modulus})"

    if cmd == "alpha":
        value = alpha_r(req.r, req.prime_bound)
        return EXIT_OK, _emit_scalar(req, {"r": req.r, "prime_bound": req.prime_bound}, value)

    if cmd == "asymptotic":
        rep = asymptotic_report(req.r, req.x, req.prime_bound)
        fields = [
            ("r", rep.r),
            ("x", rep.x),
            ("prime_bound", rep.alpha_truncation),
            ("empirical", f"{rep.empirical.numerator}/{rep.empirical.denominator}"),
            ("predicted", rep.predicted),
            ("ratio", rep.ratio),
        ]
        if req.format == "json":
            return EXIT_OK, json.dumps(
                {"subcommand": "asymptotic", **dict(fields)}, sort_keys=True
            )
        if req.format == "csv":
            return EXIT_OK, _csv_text([k for k, _ in fields], [[v for _, v in fields]])
        return EXIT_OK, "\n".join(f"{k}={v}" for k, v in fields)

    if cmd == "verify":
        results = run_suite(req.suite, req.max, worker_count())
        failed = sum(1 for _, ok in results if not ok)
        if req.format == "json":
            out = json.dumps(
                {
                    "suite": req.suite,
                    "cases": [{"label": label, "ok": ok} for label, ok in results],
                    "passed": len(results) - failed,
                    "failed": failed,
                },
                sort_keys=True,
            )
        elif req.format == "csv":
            out = _csv_text(
                ["suite", "label", "ok"],
                [[req.suite, label, ok] for label, ok in results],
            )
        else:
            lines = [f"{'PASS' if ok else 'FAIL'} {label}" for label, ok in results]
            lines.append(
                f"suite {req.suite}: {len(results) - failed}/{len(results)} checks passed"
            )
            out = "\n".join(lines)
        return (EXIT_VERIFY if failed else EXIT_OK), out

    raise DomainError(f"unknown subcommand {cmd!r}")


def _emit_error(req: CommandRequest | None, kind: str, message: str) -> None:
    if req is not None and req.format == "json":
        print(json.dumps({"error": {"type": kind, "message": message}}, sort_keys=True))
    else:
        print(f"ramsum: {kind} error: {message}", file=sys.stderr)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        req = parse_args(argv)
    except UsageError as exc:
        print(f"ramsum: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        code, out = execute(req)
    except DomainError as exc:
        _emit_error(req, "domain", str(exc))
        return EXIT_DOMAIN
    except ScaleError as exc:
        _emit_error(req, "scale", str(exc))
        return EXIT_SCALE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
