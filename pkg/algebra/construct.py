"""
Construction of the W_n family.

With c = cos(pi/n):
    a_n = cos^2(pi/n) - cos^2(pi/2n) = (2c^2 - c - 1) / 2
    b_n = cos^2(pi/2n)               = (c + 1) / 2
    W_n(X) = V_n(a_n X + b_n)

Core API:
- constants_exact / constants_numeric: a_n, b_n and the endpoints u = (1-b)/a, v = -b/a
- build_W_exact: W_n with coefficients in Q[cos(pi/n)]
- build_W_numeric / build_W_real: coefficient balls (the latter cross-checked
  against the exact coefficients)
- WEvaluator: ball evaluation of W_n through the Chebyshev recurrence
- kink_abscissae: points of [u, v] where W_n takes a prescribed level
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from numerics.realnum import (
    DEFAULT_PRECISION,
    BigReal,
    PrecisionExhaustedError,
    clamp,
    cos,
    pi,
    working_precision,
)

from .chebyshev import build_V, chebyshev_T
from .cosring import CosRing, RingElem, format_elem, ring_eval_real, ring_is_zero
from .exactnum import RatPoly

__all__ = [
    "DEFAULT_EXACT_CAP",
    "Constants",
    "FieldPoly",
    "NumericConstants",
    "WEvaluator",
    "build_V",
    "build_W_exact",
    "build_W_numeric",
    "build_W_real",
    "chebyshev_T",
    "constants_exact",
    "constants_numeric",
    "endpoints_real",
    "kink_abscissae",
]

logger = logging.getLogger(__name__)

# Largest n for which exact (ring) construction runs by default.
DEFAULT_EXACT_CAP = 24


@dataclass(frozen=True, slots=True, eq=False)
class NumericConstants:
    n: int
    a_real: BigReal
    b_real: BigReal
    u_real: BigReal
    v_real: BigReal
    precision: int


@dataclass(frozen=True, slots=True, eq=False)
class Constants:
    n: int
    a: RingElem
    b: RingElem
    a_real: BigReal
    b_real: BigReal
    u_real: BigReal
    v_real: BigReal
    precision: int

    def numeric(self) -> NumericConstants:
        return NumericConstants(self.n, self.a_real, self.b_real, self.u_real, self.v_real, self.precision)


def _ring_ab(ring: CosRing) -> tuple[RingElem, RingElem]:
    c = ring.generator
    return (2 * c * c - c - 1) / 2, (c + 1) / 2


def _endpoints(a_real: BigReal, b_real: BigReal) -> tuple[BigReal, BigReal]:
    return (1 - b_real) / a_real, -b_real / a_real


def constants_exact(ring: CosRing, precision: int = DEFAULT_PRECISION) -> Constants:
    a, b = _ring_ab(ring)
    a_real = ring_eval_real(a, precision)
    if ring_is_zero(a) or not a_real.is_negative():
        raise PrecisionExhaustedError(f"cannot certify a_{ring.n} < 0 at {precision} bits")
    b_real = ring_eval_real(b, precision)
    with working_precision(precision):
        u_real, v_real = _endpoints(a_real, b_real)
    return Constants(ring.n, a, b, a_real, b_real, u_real, v_real, precision)


def constants_numeric(n: int, precision: int = DEFAULT_PRECISION) -> NumericConstants:
    """Ball-only constants; no ring is built, so any n >= 2 is cheap."""
    if n < 2:
        raise ValueError(f"a_n and b_n are defined for n >= 2, got {n}")
    with working_precision(precision + 8):
        c = cos(pi() / n)
        a_real = (2 * c * c - c - 1) * Fraction(1, 2)
        b_real = (c + 1) * Fraction(1, 2)
        if not a_real.is_negative():
            raise PrecisionExhaustedError(f"cannot certify a_{n} < 0 at {precision} bits")
        u_real, v_real = _endpoints(a_real, b_real)
    return NumericConstants(n, a_real, b_real, u_real, v_real, precision)


def endpoints_real(consts: Union[Constants, NumericConstants], precision: int) -> tuple[BigReal, BigReal]:
    if isinstance(consts, Constants):
        a_real = ring_eval_real(consts.a, precision)
        b_real = ring_eval_real(consts.b, precision)
        with working_precision(precision):
            return _endpoints(a_real, b_real)
    if consts.precision >= precision:
        return consts.u_real, consts.v_real
    fresh = constants_numeric(consts.n, precision)
    return fresh.u_real, fresh.v_real


@dataclass(frozen=True, slots=True, eq=False)
class FieldPoly:
    """Polynomial with coefficients in one CosRing (index = power)."""

    ring: CosRing
    coeffs: tuple[RingElem, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        for c in coeffs:
            if c.ring is not self.ring:
                raise ValueError("all FieldPoly coefficients must share one ring")
        while coeffs and coeffs[-1].rep.is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_rational(cls, ring: CosRing, p: RatPoly) -> "FieldPoly":
        return cls(ring, tuple(ring.element(c) for c in p.coeffs))

    def trimmed(self) -> "FieldPoly":
        """Drop leading coefficients that are zero by value, not just by representative."""
        coeffs = list(self.coeffs)
        while coeffs and ring_is_zero(coeffs[-1]):
            coeffs.pop()
        return FieldPoly(self.ring, tuple(coeffs))

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __getitem__(self, power: int) -> RingElem:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return self.ring.zero

    def __add__(self, other: "FieldPoly | RingElem | int | Fraction") -> "FieldPoly":
        if not isinstance(other, FieldPoly):
            other = FieldPoly(self.ring, (other if isinstance(other, RingElem) else self.ring.element(other),))
        size = max(len(self.coeffs), len(other.coeffs))
        return FieldPoly(self.ring, tuple(self[i] + other[i] for i in range(size)))

    def __mul__(self, other: "FieldPoly | RingElem | int | Fraction") -> "FieldPoly":
        if not isinstance(other, FieldPoly):
            return FieldPoly(self.ring, tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return FieldPoly(self.ring, ())
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return FieldPoly(self.ring, tuple(out))

    def __call__(self, x: Union[RingElem, int, Fraction]) -> RingElem:
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def equals_rational(self, p: RatPoly) -> bool:
        size = max(len(self.coeffs), len(p.coeffs))
        return all(ring_is_zero(self[i] - p[i]) for i in range(size))

    def coefficient_balls(self, precision: int) -> list[BigReal]:
        return [ring_eval_real(c, precision) for c in self.coeffs]

    def __str__(self) -> str:
        return " + ".join(f"({format_elem(c)})*X^{i}" for i, c in enumerate(self.coeffs)) or "0"


def build_W_exact(ring: CosRing) -> FieldPoly:
    a, b = _ring_ab(ring)
    inner = FieldPoly(ring, (b, a))
    v = build_V(ring.n)
    acc = FieldPoly.from_rational(ring, RatPoly.constant(v.leading))
    for coeff in reversed(v.coeffs[:-1]):
        acc = acc * inner + coeff
    return acc.trimmed()


def _ball_poly_mul_linear(p: Sequence[BigReal], slope: BigReal, offset: BigReal) -> list[BigReal]:
    # p(X) * (slope X + offset)
    zero = BigReal.exact(0)
    out = [zero] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i] = out[i] + c * offset
        out[i + 1] = out[i + 1] + c * slope
    return out


def build_W_numeric(n: int, precision: int = DEFAULT_PRECISION) -> list[BigReal]:
    """
    Coefficient balls of W_n from a ball for cos(pi/n).

    The expansion cancels heavily (V_n has coefficients near 4^n), so it runs
    with 4n extra guard bits.
    """
    guard = precision + 4 * n + 32
    consts = constants_numeric(n, guard)
    v = build_V(n)
    with working_precision(guard):
        acc = [BigReal.exact(v.leading)]
        for coeff in reversed(v.coeffs[:-1]):
            acc = _ball_poly_mul_linear(acc, consts.a_real, consts.b_real)
            acc[0] = acc[0] + coeff
    return acc


def build_W_real(ring: CosRing, precision: int = DEFAULT_PRECISION, *, exact_cap: int = DEFAULT_EXACT_CAP) -> list[BigReal]:
    """
    Numeric twin of build_W_exact. For n <= exact_cap every ball is checked
    against the exact coefficient evaluated in the ring.
    """
    balls = build_W_numeric(ring.n, precision)
    if ring.n <= exact_cap:
        exact = build_W_exact(ring)
        for i, ball in enumerate(balls):
            reference = ring_eval_real(exact[i], precision)
            if not ball.overlaps(reference):
                raise AssertionError(f"W_{ring.n} coefficient {i}: numeric {ball!r} disagrees with exact {reference!r}")
        logger.debug("W_%d numeric coefficients agree with the exact construction", ring.n)
    return balls


class WEvaluator:
    """
    Ball evaluation of W_n(x) = (1 + T_n(2(a x + b) - 1)) / 2 on [u, v].

    T_n is evaluated at the exact midpoint of its argument by the three-term
    recurrence and widened by n^2 * radius (|T_n'| <= n^2 on [-1, 1]), which
    keeps the enclosure tight where plain interval recurrence would blow up.
    Arguments are assumed to lie in [u, v], so y = a x + b is clamped to [0, 1].
    """

    def __init__(self, n: int, precision: int = DEFAULT_PRECISION, consts: NumericConstants | None = None) -> None:
        if n < 2:
            raise ValueError(f"W_n is defined for n >= 2, got {n}")
        self.n = n
        self.precision = precision
        self.guard = precision + 2 * n + 16
        if consts is None or consts.precision < self.guard:
            consts = constants_numeric(n, self.guard)
        self.consts = consts

    def chebyshev(self, t: BigReal) -> BigReal:
        """T_n over a ball inside [-1, 1]."""
        centre, spread = t.centre, t.radius
        with working_precision(self.guard):
            x = BigReal.exact(centre)
            prev, cur = BigReal.exact(1), x
            for _ in range(self.n - 1):
                prev, cur = cur, 2 * x * cur - prev
            if spread:
                cur = cur + BigReal.from_mid_rad(0, spread * self.n * self.n)
            return clamp(cur, -1, 1)

    def level(self, x: BigReal) -> BigReal:
        """y = a x + b, clamped to [0, 1]."""
        with working_precision(self.guard):
            return clamp(self.consts.a_real * x + self.consts.b_real, 0, 1)

    def __call__(self, x: BigReal) -> BigReal:
        y = self.level(x)
        with working_precision(self.guard):
            t = clamp(2 * y - 1, -1, 1)
            return clamp((1 + self.chebyshev(t)) * Fraction(1, 2), 0, 1)


def kink_abscissae(n: int, angle_fraction: Fraction, precision: int = DEFAULT_PRECISION) -> list[BigReal]:
    """
    Points x in [u, v] with W_n(x) = cos^2(angle_fraction * pi), increasing.

    With a x + b = cos^2(theta), W_n(x) = cos^2(n theta); the solutions are
    theta = (angle_fraction + j) pi / n for theta in [0, pi/2].
    """
    consts = constants_numeric(n, precision + 16)
    points: list[BigReal] = []
    with working_precision(precision + 16):
        j = 0
        while True:
            num = Fraction(angle_fraction) + j
            if num * 2 > n:
                break
            if num >= 0:
                theta = pi() * num / n
                cos_theta = cos(theta)
                points.append((cos_theta * cos_theta - consts.b_real) / consts.a_real)
            j += 1
    return sorted(points, key=lambda p: p.lower)
