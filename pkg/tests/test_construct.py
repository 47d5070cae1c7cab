from fractions import Fraction

import mpmath
import pytest

from algebra.construct import (
    WEvaluator,
    build_W_exact,
    build_W_numeric,
    build_W_real,
    chebyshev_T,
    constants_exact,
    constants_numeric,
    endpoints_real,
    kink_abscissae,
)
from algebra.cosring import ring_eval_real, ring_new
from algebra.exactnum import poly
from numerics.realnum import BigReal, working_precision


def test_constants_n3_are_rational():
    consts = constants_exact(ring_new(3))
    assert consts.a == Fraction(-1, 2)
    assert consts.b == Fraction(3, 4)
    assert consts.a_real.contains(Fraction(-1, 2))


def test_constants_n2():
    consts = constants_exact(ring_new(2))
    assert consts.a == Fraction(-1, 2)
    assert consts.b == Fraction(1, 2)


def test_constants_n4_match_closed_forms():
    consts = constants_exact(ring_new(4), 200)
    # a_4 = -sqrt(2)/4 and b_4 = (2 + sqrt(2))/4
    assert consts.a * consts.a == Fraction(1, 8)
    assert (4 * consts.b - 2) * (4 * consts.b - 2) == 2
    assert consts.a_real.is_negative()
    with mpmath.workdps(60):
        assert abs(consts.a_real.mid + mpmath.sqrt(2) / 4) < mpmath.mpf("1e-40")
        assert abs(consts.b_real.mid - (2 + mpmath.sqrt(2)) / 4) < mpmath.mpf("1e-40")
        assert consts.a_real.rad < mpmath.mpf("1e-40")
        assert consts.b_real.rad < mpmath.mpf("1e-40")


def test_endpoints_examples():
    u3, v3 = endpoints_real(constants_exact(ring_new(3)), 128)
    assert u3.contains(Fraction(-1, 2)) and v3.contains(Fraction(3, 2))
    u2, v2 = endpoints_real(constants_exact(ring_new(2)), 128)
    assert u2.contains(-1) and v2.contains(1)
    u4, v4 = endpoints_real(constants_exact(ring_new(4)), 200)
    with working_precision(200):
        assert ((u4 - 1) * (u4 - 1)).contains(2)
        assert ((v4 - 1) * (v4 - 1)).contains(2)
    assert u4.is_negative() and v4.lower > 2


@pytest.mark.parametrize("n", [2, 3, 5, 17, 60, 200])
def test_structural_signs(n):
    consts = constants_numeric(n, 256)
    assert consts.a_real.is_negative()
    if n >= 3:
        assert consts.u_real.is_negative()
        assert consts.v_real.lower > 1


def test_numeric_and_exact_constants_agree():
    exact = constants_exact(ring_new(7), 128)
    numeric = constants_numeric(7, 128)
    assert exact.a_real.overlaps(numeric.a_real)
    assert exact.v_real.overlaps(numeric.v_real)
    u, v = endpoints_real(numeric, 64)
    assert u.overlaps(exact.u_real) and v.overlaps(exact.v_real)


def test_constants_numeric_rejects_n1():
    with pytest.raises(ValueError):
        constants_numeric(1)


def test_build_W_exact_examples():
    assert build_W_exact(ring_new(3)).equals_rational(poly(0, 0, 3, -2))
    assert build_W_exact(ring_new(4)).equals_rational(poly(0, 0, 4, -4, 1))
    assert build_W_exact(ring_new(2)).equals_rational(poly(0, 0, 1))
    assert not build_W_exact(ring_new(3)).equals_rational(poly(0, 0, 3, 2))


@pytest.mark.parametrize("n", [2, 3, 5, 6])
def test_build_W_exact_degree_and_leading_coefficient(n):
    ring = ring_new(n)
    w = build_W_exact(ring)
    assert w.degree == n
    a = constants_exact(ring).a
    assert w[n] == 2 ** (2 * n - 2) * a**n


def test_build_W_real_examples():
    for n, expected in ((3, (0, 0, 3, -2)), (4, (0, 0, 4, -4, 1))):
        balls = build_W_real(ring_new(n), 128)
        assert len(balls) == len(expected)
        for ball, value in zip(balls, expected):
            assert ball.contains(value)


def test_build_W_real_leading_coefficient_n7():
    ring = ring_new(7)
    balls = build_W_real(ring, 128)
    a = constants_exact(ring).a
    assert balls[7].overlaps(ring_eval_real(2**12 * a**7, 128))


def test_build_W_numeric_beyond_exact_cap():
    balls = build_W_numeric(30, 128)
    assert len(balls) == 31
    assert balls[0].contains(0) and balls[1].contains(0)


def test_W_point_values_numeric():
    for n in (3, 4, 9, 10, 41, 120):
        ev = WEvaluator(n, 128)
        u, v = ev.consts.u_real, ev.consts.v_real
        parity = 0 if n % 2 else 1
        for x, target in ((u, 1), (BigReal.exact(0), 0), (BigReal.exact(1), 1), (v, parity)):
            with working_precision(ev.guard):
                residual = ev(x) - target
            assert residual.magnitude() < Fraction(1, 10**30), (n, target)


def test_W_evaluator_matches_polynomial():
    ev = WEvaluator(3, 128)
    assert ev(BigReal.exact(Fraction(1, 4))).contains(Fraction(5, 32))
    ring = ring_new(5)
    w5 = build_W_exact(ring)
    ev5 = WEvaluator(5, 128)
    for x in (Fraction(-3, 10), 0, Fraction(1, 2), 1, 2, 3, Fraction(18, 5)):
        exact_ball = ring_eval_real(w5(x), 128)
        assert ev5(BigReal.exact(x)).overlaps(exact_ball)
        assert exact_ball.lower > -Fraction(1, 10**20) and exact_ball.upper < 1 + Fraction(1, 10**20)


def test_W_evaluator_rejects_n1():
    with pytest.raises(ValueError):
        WEvaluator(1)


def test_kink_abscissae_zero_level_n3():
    points = kink_abscissae(3, Fraction(1, 2), 128)
    assert len(points) == 2
    assert points[0].contains(0)
    assert points[1].contains(Fraction(3, 2))


def test_kink_abscissae_half_level():
    ev = WEvaluator(6, 128)
    points = kink_abscissae(6, Fraction(1, 4), 128) + kink_abscissae(6, Fraction(3, 4), 128)
    assert points
    for x in points:
        assert ev(x).contains(Fraction(1, 2))


def test_chebyshev_reexport():
    assert chebyshev_T(3) == poly(0, -3, 0, 4)


def test_W3_at_three_quarters():
    # W_3(3/4) = 27/16 - 27/32
    ball = WEvaluator(3, 128)(BigReal.exact(Fraction(3, 4)))
    assert ball.contains(Fraction(27, 32))
    assert ball.radius < Fraction(1, 10**30)
    assert ring_eval_real(build_W_exact(ring_new(3))(Fraction(3, 4)), 128).contains(Fraction(27, 32))


def _horner(coeffs, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


@pytest.mark.parametrize("n", [3, 4, 7, 12, 25, 40])
def test_W_stays_in_unit_range_on_domain(n):
    precision = 128
    coeffs = build_W_numeric(n, precision)
    ev = WEvaluator(n, precision)
    lo, hi = ev.consts.u_real.centre, ev.consts.v_real.centre
    slack = Fraction(1, 10**20)
    with working_precision(precision + 4 * n + 32):
        for i in range(1000):
            x = BigReal.exact(lo + (hi - lo) * Fraction(i, 999))
            value = _horner(coeffs, x)
            assert value.radius < slack, (n, i)
            assert value.lower >= -slack and value.upper <= 1 + slack, (n, i)
            if i % 50 == 0:
                assert value.overlaps(ev(x)), (n, i)
