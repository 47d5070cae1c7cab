from fractions import Fraction

import mpmath
import pytest
from mpmath import iv

from numerics.realnum import (
    BigReal,
    DomainError,
    ball_sum,
    clamp,
    cos,
    div,
    hull,
    log,
    mpf_to_fraction,
    pi,
    real_ops,
    sin,
    sqrt,
    working_precision,
)


def test_exact_ball_contains_value():
    with working_precision(128):
        x = BigReal.exact(Fraction(1, 3))
        assert x.contains(Fraction(1, 3))
        assert not x.contains(Fraction(1, 3) + Fraction(1, 2**100))


def test_from_bounds_and_mid_rad():
    b = BigReal.from_bounds(Fraction(1, 4), Fraction(3, 4))
    assert b.lower == Fraction(1, 4) and b.upper == Fraction(3, 4)
    m = BigReal.from_mid_rad(1, Fraction(1, 8))
    assert m.contains(Fraction(7, 8)) and m.contains(Fraction(9, 8))


def test_trig_examples_contain_half():
    with working_precision(256):
        assert sin(pi() / 6).contains(Fraction(1, 2))
        assert cos(pi() / 3).contains(Fraction(1, 2))


def test_sqrt2_over_4():
    with working_precision(256):
        value = sqrt(BigReal.exact(2)) / 4
        assert (value * value).contains(Fraction(1, 8))
        assert abs(float(value) - 0.3535533905932738) < 1e-15


def test_real_ops_dispatch():
    with working_precision(128):
        assert real_ops("add", 1, 2).contains(3)
        assert real_ops("div", 1, 4).contains(Fraction(1, 4))
        assert real_ops("pi").overlaps(pi())
    with pytest.raises(KeyError):
        real_ops("tan", 1)


def test_domain_errors():
    with working_precision(64):
        with pytest.raises(DomainError):
            sqrt(BigReal.exact(-1))
        with pytest.raises(DomainError):
            log(BigReal.exact(0))
        with pytest.raises(DomainError):
            div(BigReal.exact(1), BigReal.from_bounds(-1, 1))
        with pytest.raises(DomainError):
            BigReal.exact(1) / 0


def test_domain_error_is_value_error():
    assert issubclass(DomainError, ValueError)


def test_working_precision_restores():
    before = iv.prec
    with working_precision(300):
        assert iv.prec == 300
    assert iv.prec == before
    with pytest.raises(ValueError):
        with working_precision(4):
            pass


def test_sign_predicates():
    assert BigReal.exact(-2).is_negative()
    assert BigReal.exact(3).is_positive()
    straddle = BigReal.from_bounds(-1, 1)
    assert straddle.contains_zero()
    assert not straddle.is_positive() and not straddle.is_negative()
    assert BigReal.exact(1).below(2)
    assert straddle.magnitude() == 1


def test_clamp_and_hull():
    x = BigReal.from_bounds(Fraction(-1, 10), Fraction(1, 2))
    c = clamp(x, 0, 1)
    assert c.lower == 0 and c.upper == Fraction(1, 2)
    with pytest.raises(DomainError):
        clamp(BigReal.exact(2), 0, 1)
    h = hull(BigReal.exact(1), BigReal.exact(3))
    assert h.lower == 1 and h.upper == 3


def test_ball_sum_fixed_order():
    with working_precision(128):
        terms = [BigReal.exact(Fraction(1, k)) for k in range(1, 6)]
        assert ball_sum(terms).contains(Fraction(137, 60))


def test_to_decimal_never_understates_radius():
    with working_precision(128):
        x = pi()
        mid, rad = x.to_decimal(30)
        assert mid.startswith("3.14159265358979323846")
        assert Fraction(rad) >= mpf_to_fraction(x.rad)
    assert BigReal.exact(Fraction(1, 2)).to_decimal(10) == ("0.5", "0")


def test_mpf_to_fraction_exact():
    assert mpf_to_fraction(mpmath.mpf("0.75")) == Fraction(3, 4)
    assert mpf_to_fraction(mpmath.mpf(12)) == 12
    assert mpf_to_fraction(mpmath.mpf("-0.25")) == Fraction(-1, 4)
    assert mpf_to_fraction(mpmath.mpf(-12)) == -12
    assert mpf_to_fraction(-mpmath.mpf(2) ** -70) == -Fraction(1, 2**70)
    with pytest.raises(ArithmeticError):
        mpf_to_fraction(mpmath.inf)


def test_pow_and_abs():
    assert (BigReal.exact(-3) ** 2).contains(9)
    assert (BigReal.exact(5) ** 0).contains(1)
    assert abs(BigReal.exact(-2)).contains(2)
    with pytest.raises(ValueError):
        BigReal.exact(2) ** -1


def test_centre_and_radius_keep_sign():
    ball = BigReal.from_bounds(-3, -1)
    assert ball.centre == -2
    assert ball.radius == 1
    assert mpf_to_fraction(ball.mid) == -2


def test_mid_is_exact_outside_precision_scope():
    with working_precision(200):
        x = -sqrt(BigReal.exact(2)) / 4
    # read at the ambient precision, mid must still be the exact centre
    assert mpf_to_fraction(x.mid) == x.centre
    assert mpf_to_fraction(x.rad) == x.radius
    assert x.rad < mpmath.mpf(2) ** -190


@pytest.mark.parametrize("digits", [10, 20, 40, 70])
def test_printed_ball_contains_true_ball(digits):
    with working_precision(200):
        x = -sqrt(BigReal.exact(2)) / 4
    mid, rad = x.to_decimal(digits)
    assert mid.startswith("-0.35355339")
    centre, spread = Fraction(mid), Fraction(rad)
    assert centre - spread <= x.lower
    assert x.upper <= centre + spread
