"""Tests for exact rational polynomial arithmetic and root counting."""

import random
from fractions import Fraction

import pytest

from algebra.chebyshev import chebyshev_T
from algebra.exactnum import (
    X,
    RatPoly,
    is_squarefree,
    poly,
    poly_arith,
    poly_compose,
    poly_definite_integral,
    poly_gcd,
    squarefree_part,
    sturm_count,
)


def _random_poly(rng: random.Random, max_degree: int = 5) -> RatPoly:
    return RatPoly(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(0, max_degree + 1))))


def test_canonical_trimming_and_zero_degree():
    assert poly(1, 2, 0, 0).coeffs == (Fraction(1), Fraction(2))
    zero = poly(0, 0)
    assert zero.is_zero()
    assert zero.degree < -1000
    assert poly(5).degree == 0


def test_poly_arith_examples():
    assert poly_arith("add", poly(1), poly(0, 1)) == poly(1, 1)
    assert poly_arith("mul", poly(0, 1), poly(0, 1)) == poly(0, 0, 1)
    p = poly(3, -1, 2)
    assert poly_arith("sub", p, p).is_zero()
    assert poly_arith("scale", p, Fraction(1, 2)) == poly(Fraction(3, 2), Fraction(-1, 2), 1)


def test_poly_arith_rejects_unknown_op():
    with pytest.raises(ValueError):
        poly_arith("div", X, X)


def test_mul_degree_adds():
    p, q = poly(1, 2, 3), poly(-1, 0, 0, 4)
    assert (p * q).degree == p.degree + q.degree


def test_poly_compose_examples():
    assert poly_compose(poly(0, 0, 1), poly(1, 1)) == poly(1, 2, 1)
    p = poly(3, -1, 7)
    assert poly_compose(poly(0, 1), p) == p
    assert poly_compose(poly(-1, 0, 2), poly(-1, 0, 2)) == poly(1, 0, -8, 0, 8)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_compose_chebyshev_nesting(m, n):
    assert poly_compose(chebyshev_T(m), chebyshev_T(n)) == chebyshev_T(m * n)


def test_poly_definite_integral_examples():
    assert poly_definite_integral(X, 0, 1) == Fraction(1, 2)
    assert poly_definite_integral(poly(0, 0, 3, -2), 0, 1) == Fraction(1, 2)
    assert poly_definite_integral(poly(4, 1, 9), Fraction(7, 3), Fraction(7, 3)) == 0


def test_definite_integral_additivity():
    rng = random.Random(1234)
    for _ in range(25):
        p = _random_poly(rng)
        a, b, c = (Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(3))
        assert poly_definite_integral(p, a, b) + poly_definite_integral(p, b, c) == poly_definite_integral(p, a, c)


def test_ring_axioms_randomized():
    rng = random.Random(42)
    for _ in range(30):
        p, q, r = (_random_poly(rng) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p


def test_antiderivative_vanishes_at_zero():
    F = poly(2, 3, 4).antiderivative()
    assert F(Fraction(0)) == 0
    assert F.derivative() == poly(2, 3, 4)


def test_divmod_reconstructs():
    rng = random.Random(7)
    for _ in range(20):
        p = _random_poly(rng, 7)
        d = _random_poly(rng, 3)
        if d.is_zero():
            continue
        q, r = p.divmod(d)
        assert q * d + r == p
        assert r.degree < d.degree


def test_poly_gcd_examples():
    assert poly_gcd(poly(-1, 0, 1), poly(-1, 1)) == poly(-1, 1)
    assert poly_gcd(poly(2, 0, -8, 0, 8), poly(0, -16, 0, 32)) == poly(Fraction(-1, 2), 0, 1)
    assert poly_gcd(poly(5, 1, 1), poly(1)) == poly(1)


def test_poly_gcd_rejects_both_zero():
    with pytest.raises(ValueError):
        poly_gcd(RatPoly(), RatPoly())


def test_squarefree_part_examples():
    assert squarefree_part(poly(-1, 1) ** 2) == poly(-1, 1)
    assert squarefree_part(poly(2, 0, -8, 0, 8)) == poly(Fraction(-1, 2), 0, 1)
    p = poly(-2, 0, 1)
    assert squarefree_part(p) == p
    assert is_squarefree(p)
    assert not is_squarefree(p * p)


def test_squarefree_part_rejects_zero():
    with pytest.raises(ValueError):
        squarefree_part(RatPoly())


def test_sturm_count_examples():
    half = poly(Fraction(-1, 2), 0, 1)
    assert sturm_count(half, Fraction(7, 10), Fraction(8, 10)) == 1
    assert sturm_count(half, 0, Fraction(1, 2)) == 0
    assert sturm_count(poly(Fraction(-1, 2), 1), 0, 1) == 1
    assert sturm_count(half, -1, 1) == 2


def test_sturm_count_rejects_bad_input():
    with pytest.raises(ValueError):
        sturm_count(poly(-1, 1), 1, 2)  # endpoint is a root
    with pytest.raises(ValueError):
        sturm_count(poly(-1, 1) ** 2, 0, 2)
    with pytest.raises(ValueError):
        sturm_count(poly(-1, 1), 2, 0)


def test_squarefree_preserves_root_set():
    rng = random.Random(99)
    for _ in range(15):
        roots_p = [Fraction(rng.randint(-8, 8), 2) for _ in range(2)]
        roots_q = [Fraction(rng.randint(-8, 8), 3) for _ in range(2)]
        p = poly(1)
        for r in roots_p:
            p = p * poly(-r, 1)
        q = poly(1)
        for r in roots_q:
            q = q * poly(-r, 1)
        lo, hi = Fraction(-41, 7), Fraction(43, 11)
        assert sturm_count(squarefree_part(p * p * q), lo, hi) == sturm_count(squarefree_part(p * q), lo, hi)


def test_str_rendering():
    assert str(chebyshev_T(4)) == "8*X^4 - 8*X^2 + 1"
    assert str(RatPoly()) == "0"
    assert str(poly(0, -1)) == "-X"
