"""
Exact checks of the two binomial-sum identities:

    eq2: sum_{j=0..n}  3^j C(3n-j, 2n)   = sum_{j=0..2n} (-3)^j C(3n-j, n)
    eq3: sum_{j=0..n}  2^j C(3n+1, n-j)  = sum_{j=0..2n} (-4)^j C(3n+1, n+1+j)

Pure integer arithmetic; C(m, k) = 0 outside 0 <= k <= m.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Literal

from utils.log_format import compact_for_log

logger = logging.getLogger(__name__)

BinomialIdentity = Literal["eq2", "eq3"]


@dataclass(frozen=True, slots=True)
class IdentitySides:
    identity: BinomialIdentity
    n: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def binom(m: int, k: int) -> int:
    if m < 0:
        raise ValueError(f"binom expects m >= 0, got {m}")
    if k < 0 or k > m:
        return 0
    return comb(m, k)


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def eq2_sides(n: int) -> IdentitySides:
    _check_n(n)
    lhs = sum(3**j * binom(3 * n - j, 2 * n) for j in range(n + 1))
    rhs = sum((-3) ** j * binom(3 * n - j, n) for j in range(2 * n + 1))
    return IdentitySides("eq2", n, lhs, rhs)


def eq3_sides(n: int) -> IdentitySides:
    _check_n(n)
    m = 3 * n + 1
    lhs = sum(2**j * binom(m, n - j) for j in range(n + 1))
    rhs = sum((-4) ** j * binom(m, n + 1 + j) for j in range(2 * n + 1))
    return IdentitySides("eq3", n, lhs, rhs)


def sweep(n_max: int) -> list[IdentitySides]:
    """Both identities for n = 0..n_max, ordered by (identity, n)."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    rows = [eq2_sides(n) for n in range(n_max + 1)] + [eq3_sides(n) for n in range(n_max + 1)]
    for row in rows:
        if not row.equal:
            logger.warning("binomial %s fails at n=%d: %s", row.identity, row.n, compact_for_log({"lhs": row.lhs, "rhs": row.rhs}))
    logger.info("binomial sweep n<=%d: %d rows, %d unequal", n_max, len(rows), sum(not r.equal for r in rows))
    return rows
