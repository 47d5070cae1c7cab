import csv
import io
import json
from fractions import Fraction

import pytest

from numerics.realnum import BigReal
from verification.records import CheckRecord
from verification.report import (
    RECORD_COLUMNS,
    SCHEMA_VERSION,
    record_to_dict,
    render_report,
    render_table,
    report_to_dict,
)
from verification.suite import DEFAULT_CONFIG, SuiteReport


def _report() -> SuiteReport:
    records = (
        CheckRecord("lemma1", 3, "monomial:1", BigReal.from_mid_rad(0, Fraction(1, 10**50)), Fraction(1, 10**40), "pass", 256),
        CheckRecord("lemma1", 3, "monomial:1", BigReal.exact(Fraction(45, 64)), Fraction(1, 10**40), "fail", 256, diagnostic=True),
        CheckRecord("moment_exact", 2, "monomial:3", None, Fraction(0), "trivial", 0, detail="value-level zero", exact=True),
    )
    return SuiteReport(config=DEFAULT_CONFIG, records=records)


def test_record_to_dict_shows_mid_and_radius():
    row = record_to_dict(_report().records[0])
    assert list(row) == RECORD_COLUMNS
    assert float(row["residual_mid"]) == 0
    assert row["residual_rad"] != "0"
    assert row["tolerance"] == "1e-40"


def test_record_to_dict_without_residual():
    row = record_to_dict(_report().records[2])
    assert row["residual_mid"] is None and row["residual_rad"] is None
    assert row["exact"] is True


def test_report_to_dict_layout():
    d = report_to_dict(_report())
    assert d["schema_version"] == SCHEMA_VERSION == 1
    assert set(d) == {"schema_version", "config", "records", "summary"}
    assert d["summary"] == {"pass": 1, "fail": 0, "trivial": 1, "error": 0, "diagnostic": 1}
    assert d["config"]["n_min"] == 3


def test_render_report_json_round_trips():
    text = render_report(_report(), "json")
    assert json.loads(text) == report_to_dict(_report())
    assert text.endswith("\n")


def test_render_report_csv_columns_match_json_keys():
    text = render_report(_report(), "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == RECORD_COLUMNS
    assert len(rows) == 3
    assert rows[1]["diagnostic"] == "True"
    assert "\r" not in text


def test_render_report_markdown_has_summary():
    text = render_report(_report(), "md")
    assert text.splitlines()[0].startswith("|")
    assert "Summary: pass: 1, fail: 0, trivial: 1, error: 0, diagnostic: 1" in text


def test_render_table_formats():
    rows = [{"n": 3, "a": "-0.5"}, {"n": 4, "a": "-0.35"}]
    assert json.loads(render_table(rows, "json")) == rows
    assert render_table(rows, "csv").splitlines() == ["n,a", "3,-0.5", "4,-0.35"]
    with pytest.raises(ValueError):
        render_table(rows, "xml")


def test_render_is_deterministic():
    assert render_report(_report(), "csv") == render_report(_report(), "csv")
