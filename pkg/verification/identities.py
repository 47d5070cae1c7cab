"""
Identity checks for the W_n family.

Numeric checks integrate f(W_n) over the three pieces [u, 0], [0, 1], [1, v]
and recombine them; A and B come from integrals of f(cos^2 nu) sin 2u and
f(cos^2 nu) cos 2u over [0, pi/2n]. Exact checks run the monomial case of an
identity in Q[cos(pi/n)] after the substitution y = a x + b, multiplied
through by a so that no division remains.

Core API:
- ab_values
- check_lemma1 / check_lemma2 / check_lemma3
- check_trig_sum
- check_theorem / check_theorem_intermediate
- moment_identity_exact / moment_intermediate_exact
- check_point_values
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Optional

from algebra.chebyshev import build_V
from algebra.construct import (
    DEFAULT_EXACT_CAP,
    WEvaluator,
    constants_exact,
    constants_numeric,
    kink_abscissae,
)
from algebra.cosring import RingElem, ring_eval_real, ring_is_zero, ring_new
from numerics.quadrature import DEFAULT_ORDER, Integrand, integrate
from numerics.realnum import (
    DEFAULT_PRECISION,
    BigReal,
    ball_sum,
    clamp,
    cos,
    pi,
    sin,
    working_precision,
)

from .corpus import TestFunction, function_from_tag
from .records import EXACT_PRECISION, NO_FUNCTION, CheckRecord, numeric_record

logger = logging.getLogger(__name__)

Normalization = Literal["consistent", "as_printed"]
Piece = Literal["u0", "01", "1v"]

DEFAULT_TOL_SMOOTH = Fraction(1, 10**40)
DEFAULT_TOL_KINK = Fraction(1, 10**25)
POINT_VALUE_TOL = Fraction(1, 10**30)

# Each check combines a handful of integrals with coefficients of modulus <= 1;
# every integral is asked for this fraction of the check's tolerance.
PIECE_SHARE = Fraction(1, 64)


def default_tolerance(f: TestFunction) -> Fraction:
    return DEFAULT_TOL_KINK if f.smoothness == "kink" else DEFAULT_TOL_SMOOTH


def _dyadic_floor(x: Fraction) -> Fraction:
    """A power of two in (x/2, x], so cache keys stay small."""
    if x >= 1:
        return Fraction(1)
    q = x.denominator // x.numerator
    return Fraction(1, 1 << q.bit_length())


@dataclass(frozen=True, slots=True, eq=False)
class ABPair:
    A: BigReal
    B: BigReal
    normalization: Normalization


# --- cached integrals --------------------------------------------------------


@lru_cache(maxsize=256)
def _evaluator(n: int, precision: int) -> WEvaluator:
    return WEvaluator(n, precision)


@lru_cache(maxsize=4096)
def w_integral(tag: str, n: int, piece: Piece, precision: int, tol: Fraction, order: int = DEFAULT_ORDER) -> BigReal:
    """Integral of f(W_n) over one of [u, 0], [0, 1], [1, v]."""
    f = function_from_tag(tag)
    ev = _evaluator(n, precision)
    u, v = ev.consts.u_real, ev.consts.v_real
    bounds = {"u0": (u, 0), "01": (0, 1), "1v": (1, v)}
    lo, hi = bounds[piece]
    breakpoints = tuple(x for level in f.kink_levels for x in kink_abscissae(n, level, precision))
    singular = (v,) if f.sqrt_at_zero and n % 2 else ()
    integrand = Integrand(
        evaluate=lambda x: f(ev(x)),
        smoothness=f.smoothness,
        breakpoints=breakpoints,
        singular_points=singular,
        label=f"{tag}(W_{n}) on {piece}",
    )
    return integrate(integrand, lo, hi, tol, precision, order=order)


@lru_cache(maxsize=4096)
def ab_integrals(tag: str, n: int, precision: int, tol: Fraction, order: int = DEFAULT_ORDER) -> tuple[BigReal, BigReal]:
    """(int f(cos^2 nu) sin 2u du, int f(cos^2 nu) cos 2u du) over [0, pi/2n], before scaling."""
    f = function_from_tag(tag)
    with working_precision(precision):
        top = pi() / (2 * n)
        breakpoints = tuple(pi() * angle / n for angle in f.kink_levels)

    def level(t: BigReal) -> BigReal:
        return clamp((1 + cos(2 * n * t)) * Fraction(1, 2), 0, 1)

    def make(weight):
        return Integrand(
            evaluate=lambda t: f(level(t)) * weight(2 * t),
            smoothness=f.smoothness,
            breakpoints=breakpoints,
            label=f"{tag}(cos^2 {n}u) {weight.__name__} 2u",
        )

    return (
        integrate(make(sin), 0, top, tol, precision, order=order),
        integrate(make(cos), 0, top, tol, precision, order=order),
    )


class _Pieces:
    """Lazy access to the three W-integrals and their sums for one (f, n)."""

    def __init__(self, f: TestFunction, n: int, precision: int, tol: Fraction, order: int) -> None:
        self.f, self.n, self.precision, self.order = f, n, precision, order
        self.tol = _dyadic_floor(tol * PIECE_SHARE)

    def __getitem__(self, piece: Piece) -> BigReal:
        return w_integral(self.f.tag, self.n, piece, self.precision, self.tol, self.order)

    def span(self, *pieces: Piece) -> BigReal:
        with working_precision(self.precision):
            return ball_sum(self[p] for p in pieces)


def _trig(n: int, precision: int) -> dict[str, BigReal]:
    with working_precision(precision):
        p = pi()
        return {
            "c": cos(p / n),
            "cos2": cos(2 * p / n),
            "sin2": sin(2 * p / n),
            "cot_half": cos(p / (2 * n)) / sin(p / (2 * n)),
            "cot": cos(p / n) / sin(p / n),
            "sin_half_sq": sin(p / (2 * n)) ** 2,
            "sin_sq": sin(p / n) ** 2,
        }


def _check_n(n: int, minimum: int = 2) -> None:
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")


# --- A_n(f), B_n(f) ----------------------------------------------------------


def ab_values(
    f: TestFunction,
    n: int,
    precision: int = DEFAULT_PRECISION,
    normalization: Normalization = "consistent",
    *,
    tol: Optional[Fraction] = None,
    order: int = DEFAULT_ORDER,
) -> ABPair:
    """
    A = (1/a) int f(cos^2 nu) sin 2u du; B = (1/a) int f(cos^2 nu) cos 2u du
    (or 1/b for B under ``as_printed``), both over [0, pi/2n].

    ``tol`` bounds the error of the final A and B; the raw integrals are
    tightened by |a| / n so that the cotangent factors of the lemmas stay
    within it.
    """
    _check_n(n)
    if normalization not in ("consistent", "as_printed"):
        raise ValueError(f"unknown normalization {normalization!r}")
    tol = default_tolerance(f) if tol is None else tol
    consts = constants_numeric(n, precision)
    scale = -consts.a_real.upper
    raw_tol = _dyadic_floor(tol * PIECE_SHARE * scale / n)
    i_sin, i_cos = ab_integrals(f.tag, n, precision, raw_tol, order)
    with working_precision(precision):
        a_value = i_sin / consts.a_real
        b_value = i_cos / (consts.a_real if normalization == "consistent" else consts.b_real)
    return ABPair(A=a_value, B=b_value, normalization=normalization)


# --- lemmas ------------------------------------------------------------------


def check_lemma1(
    f: TestFunction,
    n: int,
    precision: int = DEFAULT_PRECISION,
    *,
    normalization: Normalization = "consistent",
    tol: Optional[Fraction] = None,
    order: int = DEFAULT_ORDER,
) -> CheckRecord:
    """int_0^1 f(W_n) = A cos(2pi/n) - B sin(2pi/n). ``as_printed`` yields a diagnostic record."""
    _check_n(n)
    tol = default_tolerance(f) if tol is None else tol
    ab = ab_values(f, n, precision, normalization, tol=tol, order=order)
    pieces = _Pieces(f, n, precision, tol, order)
    t = _trig(n, precision)
    with working_precision(precision):
        rhs = ab.A * t["cos2"] - ab.B * t["sin2"]
        record = numeric_record(
            "lemma1", n, f.tag, pieces["01"], rhs, tol, precision, diagnostic=normalization == "as_printed"
        )
    return record


def check_lemma2(
    f: TestFunction,
    n: int,
    precision: int = DEFAULT_PRECISION,
    *,
    tol: Optional[Fraction] = None,
    order: int = DEFAULT_ORDER,
) -> CheckRecord:
    """int_u^0 f(W_n) = -A (B does not appear, so normalization is irrelevant)."""
    _check_n(n)
    tol = default_tolerance(f) if tol is None else tol
    ab = ab_values(f, n, precision, "consistent", tol=tol, order=order)
    pieces = _Pieces(f, n, precision, tol, order)
    with working_precision(precision):
        return numeric_record("lemma2", n, f.tag, pieces["u0"], -ab.A, tol, precision)


def check_lemma3(
    f: TestFunction,
    n: int,
    precision: int = DEFAULT_PRECISION,
    *,
    tol: Optional[Fraction] = None,
    order: int = DEFAULT_ORDER,
) -> CheckRecord:
    """
    int_u^v f(W_n) = -A - B cot(pi/2n)        (n odd)
                   = -2A - 2B cot(pi/n)       (n even)
    """
    _check_n(n)
    tol = default_tolerance(f) if tol is None else tol
    ab = ab_values(f, n, precision, "consistent", tol=tol, order=order)
    pieces = _Pieces(f, n, precision, tol, order)
    t = _trig(n, precision)
    with working_precision(precision):
        if n % 2:
            rhs = -ab.A - ab.B * t["cot_half"]
        else:
            rhs = -2 * ab.A - 2 * ab.B * t["cot"]
        return numeric_record("lemma3", n, f.tag, pieces.span("u0", "01", "1v"), rhs, tol, precision)


def trig_sum_closed_form(n: int, precision: int = DEFAULT_PRECISION) -> BigReal:
    with working_precision(precision):
        p = pi()
        if n % 2:
            return cos(p / (2 * n)) / (2 * sin(p / (2 * n)))
        return cos(p / n) / sin(p / n)


def check_trig_sum(n: int, precision: int = DEFAULT_PRECISION, *, tol: Optional[Fraction] = None) -> CheckRecord:
    """Sum of sin(k pi/n) over even k in [1, n-1] against its closed form."""
    _check_n(n)
    tol = DEFAULT_TOL_SMOOTH if tol is None else tol
    with working_precision(precision):
        p = pi()
        direct = ball_sum(sin(p * k / n) for k in range(2, n, 2))
        closed = trig_sum_closed_form(n, precision)
        return numeric_record("trig_sum", n, NO_FUNCTION, direct, closed, tol, precision)


# --- theorem -----------------------------------------------------------------


def check_theorem(
    f: TestFunction,
    n: int,
    precision: int = DEFAULT_PRECISION,
    *,
    tol: Optional[Fraction] = None,
    order: int = DEFAULT_ORDER,
) -> CheckRecord:
    """
    n odd:  int_0^1 = -cos(2pi/n) int_u^v + (2 cos(pi/n) - 1) int_0^v
    n even: int_u^1 = sin^2(pi/n) int_u^v

    Both sides are integrals of f(W_n); A and B are never formed.
    n = 1 and n = 2 are recorded as trivial.
    """
    _check_n(n, minimum=1)
    tol = default_tolerance(f) if tol is None else tol
    if n <= 2:
        return CheckRecord(
            identity="theorem",
            n=n,
            function=f.tag,
            residual=None,
            tolerance=tol,
            verdict="trivial",
            precision_bits=precision,
            detail="the identity is trivial for n <= 2",
        )
    pieces = _Pieces(f, n, precision, tol, order)
    t = _trig(n, precision)
    whole = pieces.span("u0", "01", "1v")
    with working_precision(precision):
        if n % 2:
            lhs = pieces["01"]
            rhs = -t["cos2"] * whole + (2 * t["c"] - 1) * pieces.span("01", "1v")
        else:
            lhs = pieces.span("u0", "01")
            rhs = t["sin_sq"] * whole
        return numeric_record("theorem", n, f.tag, lhs, rhs, tol, precision)


def check_theorem_intermediate(
    f: TestFunction,
    n: int,
    precision: int = DEFAULT_PRECISION,
    *,
    tol: Optional[Fraction] = None,
    order: int = DEFAULT_ORDER,
) -> CheckRecord:
    """int_0^1 = 4 cos(pi/n) sin^2(pi/2n) int_u^v + (1 - 2 cos(pi/n)) int_u^0, for odd n >= 3."""
    _check_n(n, minimum=3)
    if n % 2 == 0:
        raise ValueError(f"the intermediate form holds for odd n, got {n}")
    tol = default_tolerance(f) if tol is None else tol
    pieces = _Pieces(f, n, precision, tol, order)
    t = _trig(n, precision)
    whole = pieces.span("u0", "01", "1v")
    with working_precision(precision):
        rhs = 4 * t["c"] * t["sin_half_sq"] * whole + (1 - 2 * t["c"]) * pieces["u0"]
        return numeric_record("theorem_intermediate", n, f.tag, pieces["01"], rhs, tol, precision)


# --- exact monomial moments ----------------------------------------------------


def _exact_record(identity: str, n: int, k: int, value: RingElem, *, trivial: bool = False) -> CheckRecord:
    zero = ring_is_zero(value)
    if zero:
        verdict = "trivial" if trivial else "pass"
        residual, detail = None, "value-level zero in Q[cos(pi/n)]"
    else:
        verdict = "fail"
        residual = ring_eval_real(value, DEFAULT_PRECISION)
        detail = f"nonzero residual {value!r}"
    return CheckRecord(
        identity=identity,
        n=n,
        function=f"monomial:{k}",
        residual=residual,
        tolerance=Fraction(0),
        verdict=verdict,
        precision_bits=EXACT_PRECISION,
        detail=detail,
        exact=True,
    )


def _moment_terms(n: int, k: int) -> tuple[RingElem, RingElem, RingElem, RingElem]:
    """(c, F(a+b), F(b), F(1)) with F the antiderivative of V_n^k, F(0) = 0."""
    ring = ring_new(n)
    consts = constants_exact(ring, 64)
    antiderivative = (build_V(n) ** k).antiderivative()
    a, b = consts.a, consts.b
    return ring.generator, antiderivative(a + b), antiderivative(b), ring.element(antiderivative(Fraction(1)))


def moment_identity_exact(n: int, k: int) -> CheckRecord:
    """
    Monomial f(x) = x^k, checked exactly. Multiplying the theorem by a after
    y = a x + b leaves, with F the antiderivative of V_n^k:

        n odd:  F(a+b) - F(b) - (2c^2 - 1) F(1) + (2c - 1) F(b) = 0
        n even: F(a+b) - c^2 F(1) = 0
    """
    _check_n(n)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    c, f_top, f_b, f_one = _moment_terms(n, k)
    if n % 2:
        value = f_top - f_b - (2 * c * c - 1) * f_one + (2 * c - 1) * f_b
    else:
        value = f_top - c * c * f_one
    logger.debug("moment n=%d k=%d checked exactly", n, k)
    return _exact_record("moment_exact", n, k, value, trivial=n == 2)


def moment_intermediate_exact(n: int, k: int) -> CheckRecord:
    """Exact monomial form of the intermediate odd-n identity:
    F(a+b) - F(b) + 2c(1-c) F(1) - (1-2c)(F(b) - F(1)) = 0."""
    _check_n(n, minimum=3)
    if n % 2 == 0:
        raise ValueError(f"the intermediate form holds for odd n, got {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    c, f_top, f_b, f_one = _moment_terms(n, k)
    value = f_top - f_b + 2 * c * (1 - c) * f_one - (1 - 2 * c) * (f_b - f_one)
    return _exact_record("theorem_intermediate", n, k, value)


# --- structural invariants ------------------------------------------------------


def check_point_values(
    n: int,
    precision: int = DEFAULT_PRECISION,
    *,
    exact_cap: int = DEFAULT_EXACT_CAP,
    tol: Fraction = POINT_VALUE_TOL,
) -> CheckRecord:
    """
    a_n < 0, u < 0 < 1 < v (n >= 3), and W_n(u) = 1, W_n(0) = 0, W_n(1) = 1,
    W_n(v) = 0 for odd n and 1 for even n. Exact in the ring for n <= exact_cap,
    by balls beyond.
    """
    _check_n(n)
    parity_value = n % 2 == 0
    consts = constants_numeric(n, precision)
    problems: list[str] = []
    if not consts.a_real.is_negative():
        problems.append("a_n < 0 not certified")
    if n >= 3:
        u, v = consts.u_real, consts.v_real
        if not (u.is_negative() and v.lower > 1):
            problems.append("u < 0 < 1 < v not certified")

    if n <= exact_cap:
        ring = ring_new(n)
        exact = constants_exact(ring, precision)
        v_poly = build_V(n)
        # W(x) = V(a x + b): x = u, 0, 1, v give y = 1, b, a + b, 0
        checks = {
            "W(u) = 1": v_poly(ring.one) - 1,
            "W(0) = 0": v_poly(exact.b),
            "W(1) = 1": v_poly(exact.a + exact.b) - 1,
            f"W(v) = {int(parity_value)}": ring.element(v_poly(Fraction(0)) - int(parity_value)),
        }
        problems.extend(label for label, value in checks.items() if not ring_is_zero(value))
        return CheckRecord(
            identity="point_values",
            n=n,
            function=NO_FUNCTION,
            residual=None,
            tolerance=Fraction(0),
            verdict="fail" if problems else "pass",
            precision_bits=EXACT_PRECISION,
            detail="; ".join(problems) if problems else "exact",
            exact=True,
        )

    ev = WEvaluator(n, precision)
    targets = ((ev.consts.u_real, 1), (BigReal.exact(0), 0), (BigReal.exact(1), 1), (ev.consts.v_real, int(parity_value)))
    with working_precision(precision):
        residual = ball_sum(abs(ev(x) - target) for x, target in targets)
        record = numeric_record("point_values", n, NO_FUNCTION, residual, BigReal.exact(0), tol, precision)
    if problems:
        return replace(record, verdict="fail", detail="; ".join(problems))
    return record
