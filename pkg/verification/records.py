"""
CheckRecord: the outcome of one identity check, and the verdict rule.

A numeric check passes only when its whole residual ball lies below the
tolerance. A ball that straddles the tolerance is a fail with a retry hint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from numerics.realnum import BigReal

from .corpus import function_rank

Verdict = Literal["pass", "fail", "trivial", "error"]

IDENTITY_ORDER: tuple[str, ...] = (
    "lemma1",
    "lemma2",
    "lemma3",
    "theorem",
    "theorem_intermediate",
    "trig_sum",
    "moment_exact",
    "point_values",
    "binomial_eq2",
    "binomial_eq3",
)

NO_FUNCTION = "-"
EXACT_PRECISION = 0


@dataclass(frozen=True, slots=True)
class CheckRecord:
    identity: str
    n: int
    function: str
    residual: Optional[BigReal]
    tolerance: Fraction
    verdict: Verdict
    precision_bits: int
    detail: str = ""
    diagnostic: bool = False
    exact: bool = False

    def __post_init__(self) -> None:
        if self.identity not in IDENTITY_ORDER:
            raise ValueError(f"unknown identity id {self.identity!r}")


def record_sort_key(record: CheckRecord) -> tuple:
    return (
        IDENTITY_ORDER.index(record.identity),
        record.n,
        function_rank(record.function),
        record.exact,
        record.diagnostic,
    )


def numeric_verdict(residual: BigReal, tolerance: Fraction) -> tuple[Verdict, str]:
    if residual.magnitude() < tolerance:
        return "pass", ""
    if residual.lower >= tolerance:
        return "fail", ""
    return "fail", "residual ball straddles the tolerance; retry at a higher precision"


def numeric_record(
    identity: str,
    n: int,
    function: str,
    lhs: BigReal,
    rhs: BigReal,
    tolerance: Fraction,
    precision: int,
    *,
    diagnostic: bool = False,
) -> CheckRecord:
    residual = abs(lhs - rhs)
    verdict, detail = numeric_verdict(residual, tolerance)
    return CheckRecord(
        identity=identity,
        n=n,
        function=function,
        residual=residual,
        tolerance=tolerance,
        verdict=verdict,
        precision_bits=precision,
        detail=detail,
        diagnostic=diagnostic,
    )


def error_record(identity: str, n: int, function: str, tolerance: Fraction, precision: int, exc: BaseException) -> CheckRecord:
    return CheckRecord(
        identity=identity,
        n=n,
        function=function,
        residual=None,
        tolerance=tolerance,
        verdict="error",
        precision_bits=precision,
        detail=f"{type(exc).__name__}: {exc}",
    )
