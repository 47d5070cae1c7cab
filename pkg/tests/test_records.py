from fractions import Fraction

import pytest

from numerics.realnum import BigReal
from verification.records import (
    CheckRecord,
    error_record,
    numeric_record,
    numeric_verdict,
    record_sort_key,
)

TOL = Fraction(1, 10**20)


def test_verdict_pass_when_whole_ball_is_below_tolerance():
    assert numeric_verdict(BigReal.from_mid_rad(0, Fraction(1, 10**30)), TOL) == ("pass", "")


def test_verdict_fail_when_ball_is_above_tolerance():
    verdict, detail = numeric_verdict(BigReal.exact(Fraction(1, 10)), TOL)
    assert verdict == "fail" and detail == ""


def test_verdict_straddling_ball_fails_with_retry_hint():
    verdict, detail = numeric_verdict(BigReal.from_bounds(0, Fraction(1, 10**10)), TOL)
    assert verdict == "fail"
    assert "retry" in detail


def test_numeric_record_uses_absolute_residual():
    record = numeric_record("lemma2", 3, "monomial:1", BigReal.exact(1), BigReal.exact(2), TOL, 128)
    assert record.residual.contains(1)
    assert record.verdict == "fail"


def test_unknown_identity_rejected():
    with pytest.raises(ValueError):
        CheckRecord("lemma4", 3, "-", None, TOL, "pass", 128)


def test_error_record_detail():
    record = error_record("theorem", 5, "sqrtx", TOL, 128, ZeroDivisionError("boom"))
    assert record.verdict == "error"
    assert record.detail == "ZeroDivisionError: boom"


def test_sort_key():
    a = CheckRecord("theorem", 4, "monomial:1", None, TOL, "pass", 128)
    b = CheckRecord("lemma1", 5, "sqrtx", None, TOL, "pass", 128)
    c = CheckRecord("lemma1", 5, "monomial:3", None, TOL, "pass", 128)
    d = CheckRecord("lemma1", 5, "monomial:3", None, TOL, "fail", 128, diagnostic=True)
    assert sorted([a, d, b, c], key=record_sort_key) == [c, d, b, a]
