"""
Gauss-Legendre rules in ball arithmetic and adaptive composite integration.

Core API:
- gauss_legendre(m, precision): certified nodes/weights (cached per (m, precision))
- Integrand: evaluation contract plus smoothness and breakpoint hints
- integrate(f, lo, hi, tol, precision): composite Gauss-Legendre with bisection

Error control compares the order-m and order-2m rules on every panel and
folds ball radii into the estimate. The node/weight enclosures are rigorous;
the per-panel truncation estimate is not. Subdivision is capped by depth and
by total panel count, and a panel whose ball radii alone exceed its share of
the tolerance fails at once with PrecisionExhaustedError.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Literal, Sequence, Union

import mpmath
from mpmath import mp

from .realnum import (
    BigReal,
    DEFAULT_PRECISION,
    PrecisionExhaustedError,
    ball_sum,
    mpf_to_fraction,
    working_precision,
)

logger = logging.getLogger(__name__)

MAX_ORDER = 256
DEFAULT_ORDER = 24
DEFAULT_MAX_DEPTH = 40
MAX_PANELS = 1 << 14
BISECTION_STEPS = 8
KINK_PANEL_FACTOR = 4

Smoothness = Literal["smooth", "kink"]
Bound = Union[BigReal, int, Fraction]


@dataclass(frozen=True, slots=True, eq=False)
class QuadRule:
    order: int
    nodes: tuple[BigReal, ...]
    weights: tuple[BigReal, ...]
    precision: int


@dataclass(frozen=True, slots=True, eq=False)
class Integrand:
    """
    Inclusion-monotone evaluation contract for the integrator.

    - breakpoints: interior points where the integrand has a kink; panels
      never straddle them
    - singular_points: points with square-root type behaviour; segments that
      end there are integrated after a smooth grading substitution
    """

    evaluate: Callable[[BigReal], BigReal]
    smoothness: Smoothness = "smooth"
    breakpoints: tuple[BigReal, ...] = ()
    singular_points: tuple[BigReal, ...] = ()
    label: str = ""


class IntegrationError(ArithmeticError):
    def __init__(self, message: str, enclosure: BigReal) -> None:
        super().__init__(message)
        self.enclosure = enclosure


def _legendre_pair(m: int, x):
    """(P_m(x), P_{m-1}(x)) by the three-term recurrence; works on mpf and balls."""
    prev, cur = 1, x
    for k in range(1, m):
        prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
    return cur, prev


def _root_bracket(m: int, i: int):
    """
    (lo, hi) around the i-th largest root of P_m. Bruns' inequality places
    that root at cos(theta) with (i - 1/2) pi / (m + 1/2) < theta < i pi / (m + 1/2).
    """
    half = mpmath.mpf(m) + mpmath.mpf(1) / 2
    return mpmath.cos(mp.pi * i / half), mpmath.cos(mp.pi * (i - mpmath.mpf(1) / 2) / half)


def _bisect(m: int, lo, hi, steps: int = BISECTION_STEPS):
    p_lo, _ = _legendre_pair(m, lo)
    p_hi, _ = _legendre_pair(m, hi)
    if (p_lo < 0) == (p_hi < 0):
        raise PrecisionExhaustedError(f"no sign change of P_{m} on [{mpmath.nstr(lo, 8)}, {mpmath.nstr(hi, 8)}]")
    for _ in range(steps):
        mid = (lo + hi) / 2
        p_mid, _ = _legendre_pair(m, mid)
        if (p_mid < 0) == (p_lo < 0):
            lo, p_lo = mid, p_mid
        else:
            hi = mid
    return (lo + hi) / 2


def _newton_root(m: int, seed, guard: int):
    x = seed
    # quadratic convergence: once the step is below 2^-(guard/2) one more step reaches working accuracy
    small = mpmath.mpf(2) ** (-(guard // 2))
    for _ in range(100):
        p, q = _legendre_pair(m, x)
        step = p * (x * x - 1) / (m * (x * p - q))
        x -= step
        if abs(step) < small:
            p, q = _legendre_pair(m, x)
            return x - p * (x * x - 1) / (m * (x * p - q))
    raise PrecisionExhaustedError(f"Newton iteration for P_{m} did not settle near {mpmath.nstr(seed, 8)}")


def _certify(m: int, x_approx, offset: Fraction) -> BigReal:
    """Ball around a Legendre root, certified by a strict sign change of P_m."""
    centre = mpf_to_fraction(x_approx)
    lo, hi = centre - offset, centre + offset
    p_lo, _ = _legendre_pair(m, BigReal.exact(lo))
    p_hi, _ = _legendre_pair(m, BigReal.exact(hi))
    opposite = (p_lo.is_negative() and p_hi.is_positive()) or (p_lo.is_positive() and p_hi.is_negative())
    if not opposite:
        raise PrecisionExhaustedError(f"cannot certify a root of P_{m} near {float(centre):.6g}")
    return BigReal.from_bounds(lo, hi)


def _weight(m: int, node: BigReal) -> BigReal:
    """
    w = 2 (1 - x^2) / (m P_{m-1}(x))^2 at a root x of P_m.

    P_{m-1} is evaluated at the exact centre of the node ball and widened by
    |P_{m-1}'| <= m (m - 1) / 2 times the node radius, so the weight radius
    tracks the node radius instead of the interval recurrence's growth.
    """
    _, q = _legendre_pair(m, BigReal.exact(node.centre))
    q = q + BigReal.from_mid_rad(0, node.radius * m * (m - 1) / 2)
    return 2 * (1 - node * node) / (m * m * q * q)


@lru_cache(maxsize=128)
def gauss_legendre(m: int, precision: int = DEFAULT_PRECISION) -> QuadRule:
    """
    Order-m Gauss-Legendre rule on [-1, 1].

    Each positive root is bracketed by Bruns' inequality, narrowed by
    bisection, polished by Newton iteration at guard precision and enclosed in
    a ball of radius 2^-(precision + 16 + m) whose endpoints show a strict
    sign change of P_m. Distinct disjoint balls for all m roots prove every
    root was found exactly once. Raises PrecisionExhaustedError when
    certification fails; retry at a higher precision.
    """
    if not 1 <= m <= MAX_ORDER:
        raise ValueError(f"Gauss-Legendre order must be in [1, {MAX_ORDER}], got {m}")
    # interval recurrence for P_m widens balls by up to (1 + sqrt 2)^m
    guard = precision + 32 + 3 * m
    offset = Fraction(1, 1 << (precision + 16 + m))
    positive: list[BigReal] = []
    with working_precision(guard), mp.workprec(guard):
        for i in range(1, m // 2 + 1):
            seed = _bisect(m, *_root_bracket(m, i))
            positive.append(_certify(m, _newton_root(m, seed, guard), offset))
        for left, right in zip(positive[1:], positive[:-1]):
            if not left.upper < right.lower:
                raise PrecisionExhaustedError(f"node balls of P_{m} overlap at {precision} bits")
        if positive and not positive[-1].is_positive():
            raise PrecisionExhaustedError(f"smallest positive node of P_{m} not separated from 0")
        middle = [BigReal.exact(0)] if m % 2 else []
        nodes = tuple([-x for x in positive] + middle + list(reversed(positive)))
        weights = tuple(_weight(m, x) for x in nodes)
    return QuadRule(order=m, nodes=nodes, weights=weights, precision=precision)


def _apply_rule(rule: QuadRule, g: Callable[[BigReal], BigReal], a: BigReal, b: BigReal) -> BigReal:
    half = (b - a) * Fraction(1, 2)
    centre = (a + b) * Fraction(1, 2)
    return half * ball_sum(w * g(centre + half * x) for x, w in zip(rule.nodes, rule.weights))


def _graded(g: Callable[[BigReal], BigReal], p: BigReal, q: BigReal) -> Callable[[BigReal], BigReal]:
    """
    Integrand in s over [0, 1] for x = p + (q - p)(3s^2 - 2s^3).

    dx = 6 (q - p) s (1 - s) ds vanishes at both ends, which turns square-root
    endpoint behaviour of g into an analytic integrand in s.
    """
    width = q - p

    def h(s: BigReal) -> BigReal:
        s2 = s * s
        x = p + width * (3 * s2 - 2 * s2 * s)
        return g(x) * (6 * width * s * (1 - s))

    return h


def _as_ball(value: Bound) -> BigReal:
    return value if isinstance(value, BigReal) else BigReal.exact(value)


def _strictly_inside(point: BigReal, lo: BigReal, hi: BigReal) -> bool:
    return lo.upper < point.lower and point.upper < hi.lower


def _cut_points(f: Integrand, lo: BigReal, hi: BigReal) -> list[BigReal]:
    inside = [p for p in (*f.breakpoints, *f.singular_points) if _strictly_inside(p, lo, hi)]
    inside.sort(key=lambda p: p.lower)
    cuts: list[BigReal] = []
    for p in inside:
        if cuts and cuts[-1].overlaps(p):
            continue
        cuts.append(p)
    return cuts


def _is_singular(point: BigReal, f: Integrand) -> bool:
    return any(point.overlaps(s) for s in f.singular_points)


class _Accumulator:
    def __init__(self, budget: Fraction, max_depth: int, max_panels: int, label: str) -> None:
        self.budget = budget
        self.max_depth = max_depth
        self.max_panels = max_panels
        self.label = label or "<integrand>"
        self.parts: list[BigReal] = []
        self.panels = 0
        self.failed = False

    def run(self, coarse: QuadRule, fine: QuadRule, g, a: BigReal, b: BigReal, share: Fraction, depth: int) -> None:
        self.panels += 1
        q_coarse = _apply_rule(coarse, g, a, b)
        q_fine = _apply_rule(fine, g, a, b)
        slack = abs(q_coarse.centre - q_fine.centre) * Fraction(1025, 1024)
        spread = q_fine.radius + q_coarse.radius
        allowed = self.budget * share
        if slack + spread <= allowed:
            self.parts.append(q_fine + BigReal.from_mid_rad(0, slack))
            return
        # halving the panel halves both sides, so bisection cannot fix a radius-dominated panel
        if spread > allowed:
            raise PrecisionExhaustedError(
                f"ball radius {float(spread):.3g} exceeds the panel allowance {float(allowed):.3g} "
                f"integrating {self.label}; retry at a higher precision"
            )
        if depth >= self.max_depth or self.panels >= self.max_panels:
            self.failed = True
            self.parts.append(q_fine + BigReal.from_mid_rad(0, slack))
            return
        middle = (a + b) * Fraction(1, 2)
        self.run(coarse, fine, g, a, middle, share / 2, depth + 1)
        self.run(coarse, fine, g, middle, b, share / 2, depth + 1)


def integrate(
    f: Integrand,
    lo: Bound,
    hi: Bound,
    tol: Union[Fraction, BigReal],
    precision: int = DEFAULT_PRECISION,
    *,
    order: int = DEFAULT_ORDER,
    initial_panels: int = 1,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_panels: int = MAX_PANELS,
) -> BigReal:
    """
    Ball of width <= tol containing the integral of f over [lo, hi].

    Args:
        f: integrand with optional breakpoint / singular-point hints.
        lo, hi: bounds (balls or exact rationals), lo <= hi.
        tol: target width of the returned ball (> 0).
        precision: working precision in bits.
        order: base Gauss-Legendre order m (2m is used for the estimate).
        initial_panels: panels per segment before adaptation; multiplied by
            KINK_PANEL_FACTOR for kink-hinted integrands.
        max_depth: bisection depth cap.
        max_panels: cap on the total number of panels evaluated.

    Raises:
        IntegrationError: a subdivision cap was reached; carries the enclosure
            accumulated over all panels.
        PrecisionExhaustedError: ball radii alone exceed the allowance, so no
            subdivision can meet tol at this precision.
    """
    tol_q = tol.upper if isinstance(tol, BigReal) else Fraction(tol)
    if tol_q <= 0:
        raise ValueError("tolerance must be > 0")
    if initial_panels < 1:
        raise ValueError("initial_panels must be >= 1")
    with working_precision(precision), mp.workprec(precision):
        lo_b, hi_b = _as_ball(lo), _as_ball(hi)
        if hi_b.upper < lo_b.lower:
            raise ValueError("integration bounds must satisfy lo <= hi")
        coarse = gauss_legendre(order, precision)
        fine = gauss_legendre(2 * order, precision)
        points = [lo_b, *_cut_points(f, lo_b, hi_b), hi_b]
        segments = list(zip(points[:-1], points[1:]))
        panels = initial_panels * (KINK_PANEL_FACTOR if f.smoothness == "kink" else 1)
        # just under half the width per side leaves room for rounding in the final sum
        acc = _Accumulator(tol_q * Fraction(31, 64), max_depth, max_panels, f.label)
        share = Fraction(1, len(segments) * panels)
        for p, q in segments:
            if _is_singular(p, f) or _is_singular(q, f):
                g, a, b = _graded(f.evaluate, p, q), BigReal.exact(0), BigReal.exact(1)
            else:
                g, a, b = f.evaluate, p, q
            step = (b - a) * Fraction(1, panels)
            for i in range(panels):
                left = a + step * i if i else a
                right = a + step * (i + 1) if i + 1 < panels else b
                acc.run(coarse, fine, g, left, right, share, 0)
        total = ball_sum(acc.parts)
    logger.debug("integrated %s over %d segments with %d panels", acc.label, len(segments), acc.panels)
    if acc.failed:
        raise IntegrationError(
            f"subdivision cap (depth {max_depth}, {max_panels} panels) reached integrating {acc.label}",
            total,
        )
    if total.upper - total.lower > tol_q:
        raise PrecisionExhaustedError(
            f"enclosure width {float(total.upper - total.lower):.3g} exceeds tol {float(tol_q):.3g} "
            f"integrating {acc.label}; retry at a higher precision"
        )
    return total


def rule_moment(rule: QuadRule, degree: int) -> BigReal:
    """Rule applied to x**degree on [-1, 1]; used for degree-exactness checks."""
    with working_precision(rule.precision):
        return ball_sum(w * x ** degree for x, w in zip(rule.nodes, rule.weights))


def exact_monomial_integral(degree: int) -> Fraction:
    """Integral of x**degree over [-1, 1]."""
    return Fraction(0) if degree % 2 else Fraction(2, degree + 1)
