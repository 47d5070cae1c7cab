"""
Arbitrary-precision real balls.

A BigReal is a rigorous enclosure of one real number. It is stored as an
``mpmath.iv`` interval (outward-rounded endpoints) and exposed through the
midpoint/radius view used in reports. Every operation is inclusion-monotone:
if the inputs contain their exact values, the output contains the exact
result.

Working precision is the precision of ``mpmath.iv``; use ``working_precision``
to scope it. The interval context is process-global, so precision scopes are
not meant to interleave across threads.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, Iterator, Union

import mpmath
from mpmath import iv, libmp, mp

DEFAULT_PRECISION = 256
MIN_PRECISION = 16

Exact = Union[int, Fraction]


class DomainError(ValueError):
    """Argument ball leaves the domain of the operation (sqrt, log, division)."""


class PrecisionExhaustedError(ArithmeticError):
    """The enclosure is too wide to certify the requested property."""


@contextmanager
def working_precision(bits: int) -> Iterator[int]:
    if bits < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {bits}")
    saved = iv.prec
    iv.prec = bits
    try:
        yield bits
    finally:
        iv.prec = saved


def _exact_interval(value: Exact) -> Any:
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return iv.mpf(value)
    if isinstance(value, Rational):
        return iv.mpf(value.numerator) / iv.mpf(value.denominator)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def _raw_to_fraction(raw: tuple) -> Fraction:
    if raw in (libmp.finf, libmp.fninf, libmp.fnan):
        raise PrecisionExhaustedError("ball has an unbounded endpoint")
    p, q = libmp.to_rational(raw)
    return Fraction(p, q)


def _dyadic_mpf(value: Fraction) -> Any:
    """Exact ``mpmath.mpf`` for a rational whose denominator is a power of two."""
    shift = value.denominator.bit_length() - 1
    if value.denominator != 1 << shift:
        raise ValueError(f"{value} is not a dyadic rational")
    return mp.make_mpf(libmp.from_man_exp(value.numerator, -shift))


@dataclass(frozen=True, slots=True, eq=False)
class BigReal:
    interval: Any

    @classmethod
    def exact(cls, value: Exact) -> "BigReal":
        """Tightest ball around an exact rational at the working precision."""
        return cls(_exact_interval(value))

    @classmethod
    def from_bounds(cls, lo: Exact, hi: Exact) -> "BigReal":
        lo_iv, hi_iv = _exact_interval(lo), _exact_interval(hi)
        return cls(iv.make_mpf((lo_iv._mpi_[0], hi_iv._mpi_[1])))

    @classmethod
    def from_mid_rad(cls, mid: Exact, rad: Exact) -> "BigReal":
        r = _exact_interval(rad)
        return cls(_exact_interval(mid) + iv.make_mpf((libmp.mpf_neg(r._mpi_[1]), r._mpi_[1])))

    # --- endpoint views ---------------------------------------------------

    @property
    def lower(self) -> Fraction:
        return _raw_to_fraction(self.interval._mpi_[0])

    @property
    def upper(self) -> Fraction:
        return _raw_to_fraction(self.interval._mpi_[1])

    @property
    def centre(self) -> Fraction:
        """Exact midpoint of the endpoints (a dyadic rational)."""
        return (self.lower + self.upper) / 2

    @property
    def radius(self) -> Fraction:
        """Exact half-width; ``[centre - radius, centre + radius]`` is the ball."""
        return (self.upper - self.lower) / 2

    @property
    def mid(self) -> Any:
        """Midpoint as an exact ``mpmath.mpf``, independent of the working precision."""
        return _dyadic_mpf(self.centre)

    @property
    def rad(self) -> Any:
        """Radius as an exact ``mpmath.mpf``."""
        return _dyadic_mpf(self.radius)

    def is_finite(self) -> bool:
        a, b = self.interval._mpi_
        return a not in (libmp.fninf, libmp.fnan) and b not in (libmp.finf, libmp.fnan)

    def magnitude(self) -> Fraction:
        """Upper bound of |x| over the ball."""
        return max(abs(self.lower), abs(self.upper))

    def contains(self, value: Union[Exact, "BigReal"]) -> bool:
        if isinstance(value, BigReal):
            return self.lower <= value.lower and value.upper <= self.upper
        v = Fraction(value)
        return self.lower <= v <= self.upper

    def overlaps(self, other: "BigReal") -> bool:
        return not (self.upper < other.lower or other.upper < self.lower)

    def contains_zero(self) -> bool:
        return self.contains(0)

    def is_positive(self) -> bool:
        return libmp.mpf_gt(self.interval._mpi_[0], libmp.fzero)

    def is_negative(self) -> bool:
        return libmp.mpf_lt(self.interval._mpi_[1], libmp.fzero)

    def below(self, bound: Exact) -> bool:
        """True iff every point of the ball is < bound."""
        return self.upper < Fraction(bound)

    # --- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> Any:
        if isinstance(other, BigReal):
            return other.interval
        if isinstance(other, Rational):
            return _exact_interval(other)
        return None

    def __neg__(self) -> "BigReal":
        return BigReal(-self.interval)

    def __abs__(self) -> "BigReal":
        return BigReal(abs(self.interval))

    def __add__(self, other: Any) -> "BigReal":
        o = self._coerce(other)
        return NotImplemented if o is None else BigReal(self.interval + o)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "BigReal":
        o = self._coerce(other)
        return NotImplemented if o is None else BigReal(self.interval - o)

    def __rsub__(self, other: Any) -> "BigReal":
        o = self._coerce(other)
        return NotImplemented if o is None else BigReal(o - self.interval)

    def __mul__(self, other: Any) -> "BigReal":
        o = self._coerce(other)
        return NotImplemented if o is None else BigReal(self.interval * o)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "BigReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return div(self, BigReal(o))

    def __rtruediv__(self, other: Any) -> "BigReal":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return div(BigReal(o), self)

    def __pow__(self, exponent: int) -> "BigReal":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        if exponent == 0:
            return BigReal.exact(1)
        return BigReal(self.interval ** exponent)

    def __float__(self) -> float:
        return float(self.centre)

    def to_decimal(self, digits: int = 40) -> tuple[str, str]:
        """
        (midpoint, radius) as decimal strings. The printed radius covers the
        ball radius plus the decimal rounding of the printed midpoint, so the
        printed ball always contains the exact ball.
        """
        mid = mpmath.nstr(self.mid, digits, min_fixed=-4, max_fixed=6)
        slack = self.radius + abs(Fraction(mid) - self.centre)
        if slack == 0:
            return mid, "0"
        with mp.workprec(64):
            padded = mpmath.mpf(slack.numerator) / slack.denominator * mpmath.mpf("1.01")
        return mid, mpmath.nstr(padded, 3, min_fixed=0, max_fixed=0)

    def __repr__(self) -> str:
        mid, rad = self.to_decimal(20)
        return f"BigReal({mid} +/- {rad})"


def _check_finite(x: BigReal) -> BigReal:
    if not x.is_finite():
        raise PrecisionExhaustedError("operation produced an unbounded enclosure")
    return x


def div(x: BigReal, y: BigReal) -> BigReal:
    if y.contains_zero():
        raise DomainError("division by a ball containing 0")
    return _check_finite(BigReal(x.interval / y.interval))


def sqrt(x: BigReal) -> BigReal:
    if x.lower < 0:
        raise DomainError(f"sqrt of a ball reaching below 0 (lower={float(x.lower):.3g})")
    return BigReal(iv.sqrt(x.interval))


def exp(x: BigReal) -> BigReal:
    return _check_finite(BigReal(iv.exp(x.interval)))


def log(x: BigReal) -> BigReal:
    if x.lower <= 0:
        raise DomainError("log of a ball reaching 0 or below")
    return _check_finite(BigReal(iv.log(x.interval)))


def sin(x: BigReal) -> BigReal:
    return BigReal(iv.sin(x.interval))


def cos(x: BigReal) -> BigReal:
    return BigReal(iv.cos(x.interval))


def pi() -> BigReal:
    return BigReal(+iv.pi)


def clamp(x: BigReal, lo: Exact, hi: Exact) -> BigReal:
    """
    Intersect x with [lo, hi]. Only valid when the exact value is known to lie
    in [lo, hi]; an empty intersection means that knowledge was wrong.
    """
    a, b = x.interval._mpi_
    lo_raw = _exact_interval(lo)._mpi_[0]
    hi_raw = _exact_interval(hi)._mpi_[1]
    a = lo_raw if libmp.mpf_lt(a, lo_raw) else a
    b = hi_raw if libmp.mpf_gt(b, hi_raw) else b
    if libmp.mpf_gt(a, b):
        raise DomainError(f"ball lies outside [{lo}, {hi}]")
    return BigReal(iv.make_mpf((a, b)))


def hull(x: BigReal, y: BigReal) -> BigReal:
    a = x.interval._mpi_[0] if libmp.mpf_le(x.interval._mpi_[0], y.interval._mpi_[0]) else y.interval._mpi_[0]
    b = x.interval._mpi_[1] if libmp.mpf_ge(x.interval._mpi_[1], y.interval._mpi_[1]) else y.interval._mpi_[1]
    return BigReal(iv.make_mpf((a, b)))


def ball_sum(terms: Iterable[BigReal]) -> BigReal:
    """Sum in iteration order (fixed order keeps reports reproducible)."""
    total = iv.mpf(0)
    for t in terms:
        total = total + t.interval
    return BigReal(total)


def real_ops(op: str, *args: Any) -> BigReal:
    """Name-dispatched entry point for the elementary operations."""
    table = {
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "div": lambda a, b: div(a, b if isinstance(b, BigReal) else BigReal.exact(b)),
        "sqrt": sqrt,
        "exp": exp,
        "log": log,
        "sin": sin,
        "cos": cos,
        "abs": abs,
        "pi": pi,
    }
    try:
        fn = table[op]
    except KeyError:
        raise KeyError(f"unknown real operation {op!r}") from None
    balls = [a if isinstance(a, BigReal) else BigReal.exact(a) for a in args]
    return fn(*balls)


def mpf_to_fraction(x: Any) -> Fraction:
    """Exact rational value of a finite ``mpmath.mpf`` (sign included)."""
    if not mpmath.isfinite(x):
        raise PrecisionExhaustedError("cannot convert a non-finite mpf")
    return _raw_to_fraction(x._mpf_)
