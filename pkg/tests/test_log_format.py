"""Tests for log-safe compaction of exact values."""

import logging
from fractions import Fraction

import pytest

from algebra.exactnum import poly
from utils.log_format import LOG_FORMAT, compact_for_log, configure_logging


def test_compact_small_values_unchanged():
    assert compact_for_log(42) == 42
    assert compact_for_log(Fraction(3, 7)) == Fraction(3, 7)
    assert compact_for_log("lemma1") == "lemma1"
    assert compact_for_log(None) is None
    assert compact_for_log(True) is True


def test_compact_huge_int():
    assert compact_for_log(10**40) == "<int 41 digits>"
    assert compact_for_log(-(10**40)) == "<int 41 digits>"


def test_compact_fraction_with_huge_denominator():
    assert compact_for_log(Fraction(1, 10**40)) == "<fraction 1 / <int 41 digits>>"
    assert compact_for_log(Fraction(10**50, 1)) == "<int 51 digits>"


def test_compact_polynomial():
    assert compact_for_log(poly(0, 0, 3, -2)) == "<poly degree 3>"


def test_compact_nested_does_not_mutate_original():
    d = {"lhs": 10**40, "rows": [1, (2, 10**35)]}
    out = compact_for_log(d)
    assert out == {"lhs": "<int 41 digits>", "rows": [1, (2, "<int 36 digits>")]}
    assert d["lhs"] == 10**40


def test_configure_logging_installs_one_stderr_handler():
    configure_logging("info")
    configure_logging("DEBUG")
    root = logging.getLogger()
    assert len(root.handlers) == 1
    assert root.handlers[0].formatter._fmt == LOG_FORMAT
    assert root.level == logging.DEBUG


def test_configure_logging_rejects_unknown_level():
    with pytest.raises(ValueError):
        configure_logging("chatty")
