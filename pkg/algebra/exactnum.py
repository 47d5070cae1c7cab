"""
Exact dense polynomials with rational coefficients.

Core API:
- RatPoly: immutable, canonically trimmed coefficient tuple (index = power)
- poly_arith / poly_compose / poly_definite_integral: exact arithmetic
- poly_gcd / squarefree_part: monic gcd machinery
- sturm_sequence / sturm_count: exact real-root counting on an open interval

BigInt is Python's ``int`` and BigRat is ``fractions.Fraction``; neither can
overflow or round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, Literal, Sequence, Union

Scalar = Union[int, Fraction]
ArithOp = Literal["add", "sub", "mul", "scale"]

# Degree of the zero polynomial: compares below every integer.
ZERO_DEGREE = float("-inf")


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"expected an exact rational coefficient, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class RatPoly:
    """Dense polynomial over Q; ``coeffs[i]`` multiplies X**i."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [_as_fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, value: Scalar) -> "RatPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "RatPoly":
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: Any) -> "RatPoly":
        if isinstance(other, Rational):
            other = RatPoly.constant(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(tuple(self[i] + other[i] for i in range(size)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "RatPoly":
        if isinstance(other, Rational):
            other = RatPoly.constant(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "RatPoly":
        if isinstance(other, Rational):
            s = _as_fraction(other)
            return RatPoly(tuple(c * s for c in self.coeffs))
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RatPoly":
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        result = RatPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __call__(self, x: Any) -> Any:
        """
        Horner evaluation. Works for any value supporting ``*`` and ``+`` with
        Fractions (Fraction, ring elements, real balls).
        """
        if not self.coeffs:
            return Fraction(0)
        acc: Any = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def antiderivative(self) -> "RatPoly":
        """Antiderivative F with F(0) = 0."""
        if not self.coeffs:
            return RatPoly()
        return RatPoly((Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs)))

    def monic(self) -> "RatPoly":
        if self.is_zero():
            raise ValueError("the zero polynomial has no monic form")
        return self * (1 / self.leading)

    def divmod(self, divisor: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        lead = divisor.leading
        if len(rem) - 1 < dd:
            return RatPoly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            q = rem[shift + dd] / lead
            quot[shift] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[shift + j] -= q * c
        return RatPoly(tuple(quot)), RatPoly(tuple(rem[:dd]))

    def __mod__(self, divisor: "RatPoly") -> "RatPoly":
        return self.divmod(divisor)[1]

    def __floordiv__(self, divisor: "RatPoly") -> "RatPoly":
        return self.divmod(divisor)[0]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mono = "" if power == 0 else ("X" if power == 1 else f"X^{power}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly(*coeffs: Scalar) -> RatPoly:
    """Shorthand constructor: ``poly(1, 0, 2)`` is 1 + 2X²."""
    return RatPoly(tuple(coeffs))


X = RatPoly.monomial(1)


def poly_arith(op: ArithOp, p: RatPoly, q: Union[RatPoly, Scalar]) -> RatPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        if not isinstance(q, RatPoly):
            raise TypeError("mul expects a polynomial operand; use 'scale' for scalars")
        return p * q
    if op == "scale":
        if isinstance(q, RatPoly):
            raise TypeError("scale expects a rational scalar")
        return p * _as_fraction(q)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_compose(outer: RatPoly, inner: RatPoly) -> RatPoly:
    """outer(inner(X)), by Horner's scheme over polynomials."""
    result = RatPoly()
    for c in reversed(outer.coeffs):
        result = result * inner + c
    return result


def poly_definite_integral(p: RatPoly, lo: Scalar, hi: Scalar) -> Fraction:
    antider = p.antiderivative()
    return _as_fraction(antider(_as_fraction(hi))) - _as_fraction(antider(_as_fraction(lo)))


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic greatest common divisor."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: RatPoly) -> RatPoly:
    if p.is_zero():
        raise ValueError("squarefree_part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def is_squarefree(p: RatPoly) -> bool:
    return not p.is_zero() and poly_gcd(p, p.derivative()).degree == 0


def sturm_sequence(p: RatPoly) -> list[RatPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def sign_variations(values: Iterable[Fraction]) -> int:
    """Number of sign changes, zeros skipped."""
    changes = 0
    last = 0
    for v in values:
        if v == 0:
            continue
        sign = 1 if v > 0 else -1
        if last and sign != last:
            changes += 1
        last = sign
    return changes


def sturm_count(p: RatPoly, lo: Scalar, hi: Scalar, *, sequence: Sequence[RatPoly] | None = None) -> int:
    """
    Exact number of distinct real roots of ``p`` in the open interval (lo, hi).

    Args:
        p: squarefree, nonzero polynomial.
        lo, hi: rational endpoints with lo < hi, neither a root of p.
        sequence: precomputed ``sturm_sequence(p)`` (skips recomputation).
    """
    lo_q, hi_q = _as_fraction(lo), _as_fraction(hi)
    if not lo_q < hi_q:
        raise ValueError(f"sturm_count needs lo < hi, got [{lo_q}, {hi_q}]")
    if not is_squarefree(p):
        raise ValueError("sturm_count requires a squarefree polynomial")
    if p(lo_q) == 0 or p(hi_q) == 0:
        raise ValueError("sturm_count endpoints must not be roots")
    seq = list(sequence) if sequence is not None else sturm_sequence(p)
    return sign_variations(s(lo_q) for s in seq) - sign_variations(s(hi_q) for s in seq)
