"""
Command-line front end.

    python cli.py tables --n 2..12
    python cli.py poly --n 4 --exact
    python cli.py verify {lemmas,theorem,moments,trig,binomial,all} [flags]

Exit codes: 0 when every counted record passed (trivial counts as pass),
1 on any fail/error verdict, 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, Optional, Sequence

from algebra.construct import (
    build_W_exact,
    build_W_numeric,
    constants_exact,
    constants_numeric,
)
from algebra.cosring import format_elem, ring_new, ring_rational_value
from numerics.realnum import BigReal
from utils.log_format import LOG_LEVELS, configure_logging
from verification.report import render_report, render_table
from verification.suite import (
    DEFAULT_CONFIG,
    SUBCOMMAND_IDENTITIES,
    SuiteConfig,
    exit_code,
    load_config_from_json,
    merge_config,
    parse_range,
    run_suite,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

TABLE_DIGITS = 30


class UsageError(ValueError):
    pass


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _ball_fields(prefix: str, ball: BigReal) -> Dict[str, str]:
    mid, rad = ball.to_decimal(TABLE_DIGITS)
    return {f"{prefix}_mid": mid, f"{prefix}_rad": rad}


def _exact_text(x) -> str:
    value = ring_rational_value(x)
    return str(value) if value is not None else format_elem(x)


def cmd_tables(n_lo: int, n_hi: int, precision: int, exact_cap: int, fmt: str, out: Optional[str]) -> int:
    if n_lo < 2 or n_hi < n_lo:
        raise UsageError(f"tables need 2 <= n_lo <= n_hi, got {n_lo}..{n_hi}")
    rows = []
    for n in range(n_lo, n_hi + 1):
        consts = constants_numeric(n, precision)
        row: Dict[str, Any] = {"n": n}
        for name in ("a", "b", "u", "v"):
            row.update(_ball_fields(name, getattr(consts, f"{name}_real")))
        if n <= exact_cap:
            exact = constants_exact(ring_new(n), precision)
            row["a_exact"], row["b_exact"] = _exact_text(exact.a), _exact_text(exact.b)
        else:
            row["a_exact"] = row["b_exact"] = None
        rows.append(row)
    _write(render_table(rows, fmt), out)
    return EXIT_OK


def cmd_poly(n: int, exact: bool, precision: int, fmt: str, out: Optional[str]) -> int:
    if n < 2:
        raise UsageError(f"W_n is defined for n >= 2, got {n}")
    if exact:
        ring = ring_new(n)
        w = build_W_exact(ring)
        lo, hi = ring.interval
        rows = [
            {
                "power": i,
                "coefficient": _exact_text(c),
                "representative": format_elem(c),
                "modulus": str(ring.modulus),
                "interval": f"[{lo}, {hi}]",
            }
            for i, c in enumerate(w.coeffs)
        ]
    else:
        rows = [{"power": i, **_ball_fields("coefficient", ball)} for i, ball in enumerate(build_W_numeric(n, precision))]
    _write(render_table(rows, fmt), out)
    return EXIT_OK


def cmd_verify(sub: str, config: SuiteConfig, fmt: str, out: Optional[str]) -> int:
    report = run_suite(config)
    _write(render_report(report, fmt), out)
    code = exit_code(report)
    logger.info("verify %s: %s -> exit %d", sub, report.summary, code)
    return code


def _suite_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "n": args.n,
        "binomial_n_max": args.n_max,
        "k_max": args.k_max,
        "functions": args.functions,
        "precision_bits": args.precision_bits,
        "tol_smooth": args.tol_smooth,
        "tol_kink": args.tol_kink,
        "normalization": args.normalization,
        "exact_cap": args.exact_cap,
        "order": args.order,
        "include_diagnostics": False if args.no_diagnostics else None,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wn-verify", description="Verify the W_n integral identities.")
    parser.add_argument("--log-level", choices=LOG_LEVELS, default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "md"), default="json")
        p.add_argument("--out", default=None, help="output path (default: standard output)")

    tables = sub.add_parser("tables", help="a_n, b_n, u_n, v_n per n")
    tables.add_argument("--n", default="3..40")
    tables.add_argument("--precision-bits", type=int, default=DEFAULT_CONFIG.precision_bits)
    tables.add_argument("--exact-cap", type=int, default=DEFAULT_CONFIG.exact_cap)
    output_flags(tables)

    poly = sub.add_parser("poly", help="coefficients of W_n")
    poly.add_argument("--n", type=int, required=True)
    poly.add_argument("--exact", action="store_true")
    poly.add_argument("--precision-bits", type=int, default=DEFAULT_CONFIG.precision_bits)
    output_flags(poly)

    verify = sub.add_parser("verify", help="run identity checks")
    verify.add_argument("suite", choices=tuple(SUBCOMMAND_IDENTITIES))
    verify.add_argument("--config", default=None, help="JSON file of config overrides")
    verify.add_argument("--n", default=None, help="inclusive range lo..hi")
    verify.add_argument("--n-max", type=int, default=None, help="binomial sweep bound")
    verify.add_argument("--k-max", type=int, default=None)
    verify.add_argument("--functions", default=None, help="e.g. all, monomial:0..4,sqrtx")
    verify.add_argument("--precision-bits", type=int, default=None)
    verify.add_argument("--tol-smooth", default=None)
    verify.add_argument("--tol-kink", default=None)
    verify.add_argument("--normalization", choices=("consistent", "as-printed"), default=None)
    verify.add_argument("--exact-cap", type=int, default=None)
    verify.add_argument("--order", type=int, default=None, help="Gauss-Legendre base order")
    verify.add_argument("--no-diagnostics", action="store_true")
    output_flags(verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        if args.command == "tables":
            lo, hi = parse_range(args.n)
            return cmd_tables(lo, hi, args.precision_bits, args.exact_cap, args.format, args.out)
        if args.command == "poly":
            return cmd_poly(args.n, args.exact, args.precision_bits, args.format, args.out)
        base = load_config_from_json(args.config) if args.config else DEFAULT_CONFIG
        config = merge_config(base, {**_suite_overrides(args), "identities": SUBCOMMAND_IDENTITIES[args.suite]})
    except (ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE
    return cmd_verify(args.suite, config, args.format, args.out)


if __name__ == "__main__":
    sys.exit(main())
