"""
Exact arithmetic in Q[cos(pi/n)].

Elements are rational polynomials in the generator c = cos(pi/n), reduced
modulo T_n(X) + 1 (c is a root because T_n(cos(pi/n)) = cos(pi) = -1).
T_n + 1 is not irreducible, so a nonzero representative can still have value
zero; ``ring_is_zero`` decides value equality with a gcd and a Sturm count
inside an interval isolating c among the roots of the squarefree modulus.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Any, Literal, Union

from numerics.realnum import BigReal, cos, pi, working_precision

from .chebyshev import chebyshev_T
from .exactnum import RatPoly, X, poly_gcd, squarefree_part, sturm_count, sturm_sequence

logger = logging.getLogger(__name__)

RingOp = Literal["add", "sub", "mul", "rat_scale", "rat_div"]

_BRACKET_START_BITS = 64


def _isolating_interval(n: int, target: RatPoly, start_bits: int = _BRACKET_START_BITS) -> tuple[Fraction, Fraction]:
    """
    Rational interval containing cos(pi/n) and exactly one root of ``target``.

    Brackets the certified ball for cos(pi/n) with dyadic margins, doubling the
    bit count until the Sturm count of ``target`` drops to one.
    """
    seq = sturm_sequence(target)
    bits = start_bits
    while True:
        with working_precision(bits):
            c = cos(pi() / n)
        margin = Fraction(1, 1 << bits)
        lo, hi = c.lower - margin, c.upper + margin
        if target(lo) != 0 and target(hi) != 0:
            if sturm_count(target, lo, hi, sequence=seq) == 1:
                return lo, hi
        bits *= 2


@dataclass(frozen=True, slots=True, eq=False)
class CosRing:
    n: int
    modulus: RatPoly
    squarefree_modulus: RatPoly
    interval: tuple[Fraction, Fraction]

    def element(self, rep: Union[RatPoly, int, Fraction]) -> "RingElem":
        if isinstance(rep, Rational):
            rep = RatPoly.constant(rep)
        return RingElem(self, rep % self.modulus)

    @property
    def generator(self) -> "RingElem":
        return self.element(X)

    @property
    def zero(self) -> "RingElem":
        return self.element(0)

    @property
    def one(self) -> "RingElem":
        return self.element(1)

    def __repr__(self) -> str:
        return f"CosRing(n={self.n}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def ring_new(n: int) -> CosRing:
    if n < 2:
        raise ValueError(f"the cosine ring needs n >= 2, got {n}")
    modulus = chebyshev_T(n) + 1
    sqf = squarefree_part(modulus)
    interval = _isolating_interval(n, sqf)
    logger.debug("ring n=%d: modulus degree %d, isolating width %.3g", n, n, float(interval[1] - interval[0]))
    return CosRing(n=n, modulus=modulus, squarefree_modulus=sqf, interval=interval)


@dataclass(frozen=True, slots=True, eq=False)
class RingElem:
    """Value ``rep(cos(pi/n))``; ``==`` is value equality."""

    ring: CosRing
    rep: RatPoly = field(default_factory=RatPoly)

    def _other(self, other: Any) -> "RingElem | None":
        if isinstance(other, RingElem):
            if other.ring is not self.ring:
                raise ValueError(f"cross-ring operands: n={self.ring.n} and n={other.ring.n}")
            return other
        if isinstance(other, Rational):
            return self.ring.element(other)
        return None

    def __add__(self, other: Any) -> "RingElem":
        o = self._other(other)
        return NotImplemented if o is None else RingElem(self.ring, self.rep + o.rep)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "RingElem":
        o = self._other(other)
        return NotImplemented if o is None else RingElem(self.ring, self.rep - o.rep)

    def __rsub__(self, other: Any) -> "RingElem":
        o = self._other(other)
        return NotImplemented if o is None else RingElem(self.ring, o.rep - self.rep)

    def __neg__(self) -> "RingElem":
        return RingElem(self.ring, -self.rep)

    def __mul__(self, other: Any) -> "RingElem":
        if isinstance(other, Rational):
            return RingElem(self.ring, self.rep * other)
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RingElem(self.ring, (self.rep * o.rep) % self.ring.modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElem":
        if exponent < 0:
            raise ValueError("ring elements are not inverted")
        result, base = self.ring.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other: Any) -> "RingElem":
        if not isinstance(other, Rational):
            return NotImplemented
        if other == 0:
            raise ValueError("division of a ring element by zero")
        return RingElem(self.ring, self.rep * (1 / Fraction(other)))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (RingElem, Rational)):
            return ring_is_zero(self - other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def rational_value(self) -> Fraction | None:
        """The value when it is provably rational (constant representative), else None."""
        if self.rep.degree <= 0:
            return self.rep[0]
        return None

    def __repr__(self) -> str:
        return f"RingElem(n={self.ring.n}, {format_elem(self)})"


def ring_arith(op: RingOp, x: RingElem, y: Union[RingElem, int, Fraction]) -> RingElem:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "rat_scale":
        if isinstance(y, RingElem):
            raise TypeError("rat_scale expects a rational scalar")
        return x * Fraction(y)
    if op == "rat_div":
        if isinstance(y, RingElem):
            raise TypeError("rat_div expects a rational scalar")
        return x / Fraction(y)
    raise ValueError(f"unknown ring operation {op!r}")


def ring_is_zero(x: RingElem) -> bool:
    """True iff rep(cos(pi/n)) == 0."""
    if x.rep.is_zero():
        return True
    ring = x.ring
    g = poly_gcd(x.rep, ring.modulus)
    if g.degree == 0:
        return False
    # roots of g are roots of the modulus, so the isolating interval avoids them
    lo, hi = ring.interval
    return sturm_count(squarefree_part(g), lo, hi) > 0


def ring_eval_real(x: RingElem, precision: int) -> BigReal:
    """Ball containing rep(cos(pi/n)) at the given precision."""
    with working_precision(precision + 8):
        c = cos(pi() / x.ring.n)
        value = x.rep(c)
        if not isinstance(value, BigReal):
            value = BigReal.exact(value)
    return value


def ring_rational_value(x: RingElem, max_denominator: int = 10**6) -> Fraction | None:
    """The value of x if it is a rational with denominator <= max_denominator, else None."""
    direct = x.rational_value()
    if direct is not None:
        return direct
    ball = ring_eval_real(x, 128)
    candidate = ((ball.lower + ball.upper) / 2).limit_denominator(max_denominator)
    return candidate if ring_is_zero(x - candidate) else None


def format_elem(x: RingElem) -> str:
    """Representative as a polynomial in c = cos(pi/n)."""
    return str(x.rep).replace("X", "c")
