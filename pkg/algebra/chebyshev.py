"""
Chebyshev polynomials of the first kind and the even-part polynomial V_n.

T_0 = 1, T_1 = X, T_{n+2} = 2X T_{n+1} - T_n, so T_n(cos t) = cos(n t).
V_n is defined by V_n(X^2) = T_n(X)^2.
"""

from __future__ import annotations

from functools import lru_cache

from .exactnum import RatPoly, X


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> RatPoly:
    if n < 0:
        raise ValueError(f"Chebyshev degree must be >= 0, got {n}")
    prev, cur = RatPoly.constant(1), X
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * X * cur - prev
    return cur


@lru_cache(maxsize=None)
def build_V(n: int) -> RatPoly:
    """Even part of T_n^2 re-indexed by X^2 -> Y; degree n."""
    if n < 1:
        raise ValueError(f"V_n is built for n >= 1, got {n}")
    square = chebyshev_T(n) ** 2
    odd = [i for i, c in enumerate(square.coeffs) if i % 2 == 1 and c != 0]
    if odd:
        raise AssertionError(f"T_{n}^2 has nonzero odd coefficients at powers {odd}")
    return RatPoly(square.coeffs[0::2])
