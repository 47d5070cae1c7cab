from fractions import Fraction

import pytest

from numerics.realnum import BigReal, working_precision
from verification.corpus import (
    NAMED_TAGS,
    corpus,
    function_from_tag,
    function_rank,
    monomial,
    parse_function_selector,
)


def test_corpus_order():
    tags = [f.tag for f in corpus(3)]
    assert tags == ["monomial:0", "monomial:1", "monomial:2", "monomial:3", *NAMED_TAGS]


def test_monomial_values():
    half = BigReal.exact(Fraction(1, 2))
    assert monomial(0)(half).contains(1)
    assert monomial(3)(half).contains(Fraction(1, 8))
    with pytest.raises(ValueError):
        monomial(-1)


def test_named_members():
    with working_precision(128):
        quarter = BigReal.exact(Fraction(1, 4))
        assert function_from_tag("sqrtx")(quarter).contains(Fraction(1, 2))
        assert function_from_tag("abshalf")(quarter).contains(Fraction(1, 4))
        assert function_from_tag("sinpi")(BigReal.exact(Fraction(1, 2))).contains(1)
        assert function_from_tag("log1p")(BigReal.exact(0)).contains(0)
        assert function_from_tag("expunit")(BigReal.exact(0)).contains(1)


def test_smoothness_hints():
    assert function_from_tag("abshalf").smoothness == "kink"
    assert function_from_tag("sqrtx").sqrt_at_zero
    assert function_from_tag("monomial:4").k == 4


def test_unknown_tag():
    with pytest.raises(KeyError):
        function_from_tag("cosh")


def test_parse_function_selector():
    assert parse_function_selector("monomial:0..2,sqrtx") == ["monomial:0", "monomial:1", "monomial:2", "sqrtx"]
    assert parse_function_selector(["sqrtx", "monomial:1", "sqrtx"]) == ["monomial:1", "sqrtx"]
    assert len(parse_function_selector("all", k_max=10)) == 11 + len(NAMED_TAGS)
    with pytest.raises(ValueError):
        parse_function_selector("monomial:4..2")


def test_function_rank_orders_report_rows():
    tags = ["sqrtx", "-", "monomial:10", "monomial:2", "expunit"]
    assert sorted(tags, key=function_rank) == ["-", "monomial:2", "monomial:10", "expunit", "sqrtx"]
