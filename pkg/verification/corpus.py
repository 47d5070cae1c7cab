"""
Test-function corpus: continuous functions on [0, 1] used as f in the identities.

Members:
- monomial:k   x^k
- expunit      e^x
- sinpi        sin(pi x)
- sqrtx        sqrt(x)       (square-root behaviour where W_n touches 0)
- abshalf      |x - 1/2|     (kink where W_n crosses 1/2)
- log1p        log(1 + x)

Arguments are balls already clamped to [0, 1].
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal, Sequence

from numerics.realnum import BigReal, exp, log, pi, sin, sqrt

Smoothness = Literal["smooth", "kink"]

NAMED_TAGS = ("expunit", "sinpi", "sqrtx", "abshalf", "log1p")
DEFAULT_K_MAX = 10


@dataclass(frozen=True, slots=True)
class TestFunction:
    """
    - tag: stable identifier used in reports (``monomial:3``, ``sqrtx``, ...)
    - kink_levels: angle fractions t such that f is not smooth at the value
      cos^2(t pi); the integrator splits there
    - sqrt_at_zero: f(w) behaves like sqrt(w) near w = 0
    """

    __test__ = False  # not a pytest class

    tag: str
    evaluate: Callable[[BigReal], BigReal]
    smoothness: Smoothness = "smooth"
    kink_levels: tuple[Fraction, ...] = ()
    sqrt_at_zero: bool = False
    k: int | None = None

    def __call__(self, w: BigReal) -> BigReal:
        return self.evaluate(w)


def monomial(k: int) -> TestFunction:
    if k < 0:
        raise ValueError(f"monomial degree must be >= 0, got {k}")
    if k == 0:
        return TestFunction(tag="monomial:0", evaluate=lambda w: BigReal.exact(1), k=0)
    return TestFunction(tag=f"monomial:{k}", evaluate=lambda w: w ** k, k=k)


def _expunit(w: BigReal) -> BigReal:
    return exp(w)


def _sinpi(w: BigReal) -> BigReal:
    return sin(pi() * w)


def _sqrtx(w: BigReal) -> BigReal:
    return sqrt(w)


def _abshalf(w: BigReal) -> BigReal:
    return abs(w - Fraction(1, 2))


def _log1p(w: BigReal) -> BigReal:
    return log(1 + w)


NAMED: dict[str, TestFunction] = {
    "expunit": TestFunction(tag="expunit", evaluate=_expunit),
    "sinpi": TestFunction(tag="sinpi", evaluate=_sinpi),
    # sqrt(W) = |T_n(cos theta)| has kinks where T_n vanishes: cos^2 level at angle 1/2
    "sqrtx": TestFunction(tag="sqrtx", evaluate=_sqrtx, kink_levels=(Fraction(1, 2),), sqrt_at_zero=True),
    # W = 1/2 at angles 1/4 and 3/4
    "abshalf": TestFunction(
        tag="abshalf",
        evaluate=_abshalf,
        smoothness="kink",
        kink_levels=(Fraction(1, 4), Fraction(3, 4)),
    ),
    "log1p": TestFunction(tag="log1p", evaluate=_log1p),
}


def corpus(k_max: int = DEFAULT_K_MAX) -> list[TestFunction]:
    """Full corpus in report order: monomials by degree, then the named members."""
    return [monomial(k) for k in range(k_max + 1)] + [NAMED[t] for t in NAMED_TAGS]


def function_from_tag(tag: str) -> TestFunction:
    if tag in NAMED:
        return NAMED[tag]
    m = re.fullmatch(r"monomial:(\d+)", tag)
    if m:
        return monomial(int(m.group(1)))
    raise KeyError(f"unknown test function tag {tag!r}")


def function_rank(tag: str) -> tuple[int, int]:
    """Sort key placing '-' first, monomials by k, then named members in corpus order."""
    if tag == "-":
        return (-1, 0)
    if tag in NAMED:
        return (1, NAMED_TAGS.index(tag))
    m = re.fullmatch(r"monomial:(\d+)", tag)
    if m:
        return (0, int(m.group(1)))
    return (2, 0)


def parse_function_selector(selector: str | Sequence[str], k_max: int = DEFAULT_K_MAX) -> list[str]:
    """
    Expand a selector into tags, deduplicated, in corpus order.

    Accepts ``all``, a named tag, ``monomial:K``, ``monomial:LO..HI`` or a
    comma-separated list of those (a string or a sequence of strings).
    ``all`` means monomials 0..k_max plus every named member.
    """
    parts: list[str] = []
    items = selector.split(",") if isinstance(selector, str) else list(selector)
    for raw in items:
        parts.extend(p.strip() for p in raw.split(",") if p.strip())

    tags: list[str] = []
    for part in parts:
        if part == "all":
            tags.extend(f.tag for f in corpus(k_max))
            continue
        m = re.fullmatch(r"monomial:(\d+)\.\.(\d+)", part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise ValueError(f"empty monomial range {part!r}")
            tags.extend(f"monomial:{k}" for k in range(lo, hi + 1))
            continue
        tags.append(function_from_tag(part).tag)

    return sorted(set(tags), key=function_rank)
