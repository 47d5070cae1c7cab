"""
Suite configuration and runner.

Configuration follows a validate / merge / load-from-JSON pattern: the
defaults are a frozen SuiteConfig, overrides are plain mappings (from the CLI
or a JSON file) laid over it, and the result is validated before any
computation starts.

Core API:
- SuiteConfig, DEFAULT_CONFIG, validate_config, merge_config, load_config_from_json
- run_suite(config) -> SuiteReport
- summarize(records), exit_code(report)
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from typing import Any, Callable, Dict, Literal, Mapping, Sequence

from numerics.quadrature import MAX_ORDER
from numerics.realnum import MIN_PRECISION, BigReal

from .binomial import sweep
from .corpus import function_from_tag, parse_function_selector
from .identities import (
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_point_values,
    check_theorem,
    check_theorem_intermediate,
    check_trig_sum,
    moment_identity_exact,
    moment_intermediate_exact,
)
from .records import (
    EXACT_PRECISION,
    IDENTITY_ORDER,
    NO_FUNCTION,
    CheckRecord,
    error_record,
    record_sort_key,
)

logger = logging.getLogger(__name__)

Normalization = Literal["consistent", "as_printed"]

NUMERIC_IDENTITIES = IDENTITY_ORDER[:8]
BINOMIAL_IDENTITIES = ("binomial_eq2", "binomial_eq3")

# CLI sub-command -> identity ids
SUBCOMMAND_IDENTITIES: Mapping[str, tuple[str, ...]] = {
    "lemmas": ("lemma1", "lemma2", "lemma3", "theorem_intermediate"),
    "theorem": ("theorem",),
    "moments": ("moment_exact",),
    "trig": ("trig_sum",),
    "binomial": BINOMIAL_IDENTITIES,
    "all": IDENTITY_ORDER,
}


@dataclass(frozen=True, slots=True)
class SuiteConfig:
    """
    - n_min, n_max: inclusive range of n for the W_n checks (n >= 2)
    - functions: selector strings, expanded with k_max (``all``, ``monomial:0..4``, ``sqrtx``)
    - exact_cap: largest n for exact ring checks (moments, point values)
    - include_diagnostics: also emit Lemma 1 under the printed B_n normalization
    """

    n_min: int = 3
    n_max: int = 40
    k_max: int = 10
    functions: tuple[str, ...] = ("all",)
    identities: tuple[str, ...] = IDENTITY_ORDER
    precision_bits: int = 256
    tol_smooth: Fraction = Fraction(1, 10**40)
    tol_kink: Fraction = Fraction(1, 10**25)
    normalization: Normalization = "consistent"
    exact_cap: int = 12
    binomial_n_max: int = 500
    order: int = 24
    include_diagnostics: bool = True

    def function_tags(self) -> list[str]:
        return parse_function_selector(list(self.functions), self.k_max) if self.functions else []

    def tolerance_for(self, tag: str) -> Fraction:
        return self.tol_kink if function_from_tag(tag).smoothness == "kink" else self.tol_smooth


DEFAULT_CONFIG = SuiteConfig()


@dataclass(frozen=True, slots=True)
class SuiteReport:
    config: SuiteConfig
    records: tuple[CheckRecord, ...] = field(default_factory=tuple)

    @property
    def summary(self) -> Dict[str, int]:
        return summarize(self.records)


def validate_config(config: SuiteConfig) -> None:
    if config.n_min < 2:
        raise ValueError(f"n range must start at 2 or above, got {config.n_min}")
    if config.n_max < config.n_min:
        raise ValueError(f"empty n range {config.n_min}..{config.n_max}")
    if config.k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {config.k_max}")
    if config.precision_bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}, got {config.precision_bits}")
    for name in ("tol_smooth", "tol_kink"):
        if getattr(config, name) <= 0:
            raise ValueError(f"{name} must be > 0")
    if config.normalization not in ("consistent", "as_printed"):
        raise ValueError(f"normalization must be 'consistent' or 'as_printed', got {config.normalization!r}")
    if config.exact_cap < 0:
        raise ValueError(f"exact_cap must be >= 0, got {config.exact_cap}")
    if config.binomial_n_max < 0:
        raise ValueError(f"binomial_n_max must be >= 0, got {config.binomial_n_max}")
    if not 1 <= config.order <= MAX_ORDER // 2:
        raise ValueError(f"order must be in [1, {MAX_ORDER // 2}], got {config.order}")
    unknown = [i for i in config.identities if i not in IDENTITY_ORDER]
    if unknown:
        raise ValueError(f"unknown identity ids: {unknown}")
    try:
        config.function_tags()
    except KeyError as exc:
        raise ValueError(str(exc.args[0])) from None


def parse_range(text: str) -> tuple[int, int]:
    """'3..40' -> (3, 40); '7' -> (7, 7)."""
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", str(text))
    if not m:
        raise ValueError(f"expected a range like 3..40, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return lo, hi


def parse_tolerance(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"invalid tolerance {value!r}")
    try:
        return Fraction(str(value))
    except ValueError:
        raise ValueError(f"invalid tolerance {value!r}") from None


def _as_tuple(value: Any) -> tuple[str, ...]:
    if isinstance(value, str):
        return tuple(p.strip() for p in value.split(",") if p.strip())
    return tuple(str(v) for v in value)


_COERCE: Mapping[str, Callable[[Any], Any]] = {
    "n_min": int,
    "n_max": int,
    "k_max": int,
    "functions": _as_tuple,
    "identities": _as_tuple,
    "precision_bits": int,
    "tol_smooth": parse_tolerance,
    "tol_kink": parse_tolerance,
    "normalization": lambda v: str(v).replace("-", "_"),
    "exact_cap": int,
    "binomial_n_max": int,
    "order": int,
    "include_diagnostics": bool,
}


def merge_config(base: SuiteConfig, overrides: Mapping[str, Any]) -> SuiteConfig:
    """
    Create a new config by overlaying `overrides` on top of `base`.

    Keys are SuiteConfig field names, plus ``n`` as a range string. Unknown
    keys raise KeyError; invalid values raise ValueError.
    """
    changes: Dict[str, Any] = {}
    for key, value in overrides.items():
        if value is None:
            continue
        if key == "n":
            changes["n_min"], changes["n_max"] = parse_range(value)
            continue
        if key not in _COERCE:
            raise KeyError(f"unknown config key {key!r}")
        try:
            changes[key] = _COERCE[key](value)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"invalid value for {key!r}: {exc}") from None
    merged = replace(base, **changes)
    validate_config(merged)
    return merged


def load_config_from_json(path: str, base: SuiteConfig = DEFAULT_CONFIG) -> SuiteConfig:
    """
    Load config overrides from a JSON object, e.g.

    {"n": "3..12", "functions": ["monomial:0..4", "sqrtx"], "tol_smooth": "1e-40"}
    """
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    if not isinstance(raw, dict):
        raise ValueError("config JSON must be an object")
    return merge_config(base, raw)


def fraction_text(value: Fraction) -> str:
    """Stable text for a tolerance: '1e-40' for powers of ten, 'p/q' otherwise."""
    if value.numerator == 1 and value.denominator > 1:
        digits = str(value.denominator)
        if digits.strip("0") == "1":
            return f"1e-{len(digits) - 1}"
    return str(value)


def config_to_dict(config: SuiteConfig) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for f in fields(config):
        value = getattr(config, f.name)
        if isinstance(value, Fraction):
            value = fraction_text(value)
        elif isinstance(value, tuple):
            value = list(value)
        out[f.name] = value
    return out


# --- runner ----------------------------------------------------------------


def _guarded(
    identity: str,
    n: int,
    tag: str,
    tolerance: Fraction,
    precision: int,
    check: Callable[[], CheckRecord],
) -> CheckRecord:
    try:
        return check()
    except Exception as exc:  # one failing check never aborts the suite
        logger.warning("check %s n=%d %s raised %s: %s", identity, n, tag, type(exc).__name__, exc)
        return error_record(identity, n, tag, tolerance, precision, exc)


def _n_checks(config: SuiteConfig, n: int, tags: Sequence[str]) -> list[CheckRecord]:
    prec, order = config.precision_bits, config.order
    wanted = set(config.identities)
    monomials = [function_from_tag(t).k for t in tags if t.startswith("monomial:")]
    out: list[CheckRecord] = []

    for tag in tags:
        f = function_from_tag(tag)
        tol = config.tolerance_for(tag)
        if "lemma1" in wanted:
            out.append(_guarded("lemma1", n, tag, tol, prec, lambda: check_lemma1(
                f, n, prec, normalization=config.normalization, tol=tol, order=order)))
            if config.include_diagnostics and config.normalization == "consistent":
                diag = _guarded("lemma1", n, tag, tol, prec, lambda: check_lemma1(
                    f, n, prec, normalization="as_printed", tol=tol, order=order))
                out.append(replace(diag, diagnostic=True))
        if "lemma2" in wanted:
            out.append(_guarded("lemma2", n, tag, tol, prec, lambda: check_lemma2(f, n, prec, tol=tol, order=order)))
        if "lemma3" in wanted:
            out.append(_guarded("lemma3", n, tag, tol, prec, lambda: check_lemma3(f, n, prec, tol=tol, order=order)))
        if "theorem" in wanted:
            out.append(_guarded("theorem", n, tag, tol, prec, lambda: check_theorem(f, n, prec, tol=tol, order=order)))
        if "theorem_intermediate" in wanted and n % 2 and n >= 3:
            out.append(_guarded("theorem_intermediate", n, tag, tol, prec,
                                lambda: check_theorem_intermediate(f, n, prec, tol=tol, order=order)))

    exact = n <= config.exact_cap
    if exact and "theorem_intermediate" in wanted and n % 2 and n >= 3:
        for k in monomials:
            out.append(_guarded("theorem_intermediate", n, f"monomial:{k}", Fraction(0), EXACT_PRECISION,
                                lambda: moment_intermediate_exact(n, k)))
    if exact and "moment_exact" in wanted:
        for k in monomials:
            out.append(_guarded("moment_exact", n, f"monomial:{k}", Fraction(0), EXACT_PRECISION,
                                lambda: moment_identity_exact(n, k)))
    if "trig_sum" in wanted:
        out.append(_guarded("trig_sum", n, NO_FUNCTION, config.tol_smooth, prec,
                            lambda: check_trig_sum(n, prec, tol=config.tol_smooth)))
    if "point_values" in wanted:
        out.append(_guarded("point_values", n, NO_FUNCTION, Fraction(0), prec,
                            lambda: check_point_values(n, prec, exact_cap=config.exact_cap)))
    return out


def _binomial_records(config: SuiteConfig) -> list[CheckRecord]:
    wanted = [i for i in BINOMIAL_IDENTITIES if i in config.identities]
    if not wanted:
        return []
    out: list[CheckRecord] = []
    for row in sweep(config.binomial_n_max):
        identity = f"binomial_{row.identity}"
        if identity not in wanted:
            continue
        out.append(
            CheckRecord(
                identity=identity,
                n=row.n,
                function=NO_FUNCTION,
                residual=BigReal.exact(row.lhs - row.rhs),
                tolerance=Fraction(0),
                verdict="pass" if row.equal else "fail",
                precision_bits=EXACT_PRECISION,
                detail="" if row.equal else f"lhs={row.lhs} rhs={row.rhs}",
                exact=True,
            )
        )
    return out


def run_suite(config: SuiteConfig = DEFAULT_CONFIG) -> SuiteReport:
    """Run every selected check; records come back in report order."""
    validate_config(config)
    tags = config.function_tags()
    records: list[CheckRecord] = []
    if any(i in NUMERIC_IDENTITIES for i in config.identities):
        for n in range(config.n_min, config.n_max + 1):
            batch = _n_checks(config, n, tags)
            logger.info("n=%d: %d records", n, len(batch))
            records.extend(batch)
    records.extend(_binomial_records(config))
    records.sort(key=record_sort_key)
    report = SuiteReport(config=config, records=tuple(records))
    logger.info("suite finished: %s", report.summary)
    return report


def summarize(records: Sequence[CheckRecord]) -> Dict[str, int]:
    counts = {"pass": 0, "fail": 0, "trivial": 0, "error": 0, "diagnostic": 0}
    for r in records:
        if r.diagnostic:
            counts["diagnostic"] += 1
        else:
            counts[r.verdict] += 1
    return counts


def exit_code(report: SuiteReport) -> int:
    """0 when nothing failed or errored (trivial counts as pass), else 1."""
    s = report.summary
    return 1 if s["fail"] or s["error"] else 0
