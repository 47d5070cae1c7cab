"""
Report rendering: JSON (schema_version 1), CSV and Markdown.

CSV columns mirror the JSON record keys one-to-one. Balls are always shown as
a midpoint and an explicit radius.
"""

from __future__ import annotations

import json
from typing import Any, Literal, Mapping, Optional, Sequence, TypedDict

import pandas as pd

from .records import CheckRecord
from .suite import SuiteReport, config_to_dict, fraction_text

OutputFormat = Literal["json", "csv", "md"]

SCHEMA_VERSION = 1
RESIDUAL_DIGITS = 40


class RecordDict(TypedDict):
    identity: str
    n: int
    function: str
    residual_mid: Optional[str]
    residual_rad: Optional[str]
    tolerance: str
    verdict: str
    precision_bits: int
    detail: str
    diagnostic: bool
    exact: bool


RECORD_COLUMNS = list(RecordDict.__annotations__)


def record_to_dict(record: CheckRecord) -> RecordDict:
    mid: Optional[str] = None
    rad: Optional[str] = None
    if record.residual is not None:
        mid, rad = record.residual.to_decimal(RESIDUAL_DIGITS)
    return RecordDict(
        identity=record.identity,
        n=record.n,
        function=record.function,
        residual_mid=mid,
        residual_rad=rad,
        tolerance=fraction_text(record.tolerance),
        verdict=record.verdict,
        precision_bits=record.precision_bits,
        detail=record.detail,
        diagnostic=record.diagnostic,
        exact=record.exact,
    )


def report_to_dict(report: SuiteReport) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config_to_dict(report.config),
        "records": [record_to_dict(r) for r in report.records],
        "summary": report.summary,
    }


def render_table(rows: Sequence[Mapping[str, Any]], fmt: OutputFormat, columns: Sequence[str] | None = None) -> str:
    """Rows of plain values as JSON, CSV or a Markdown table."""
    if fmt == "json":
        return json.dumps(list(rows), indent=2) + "\n"
    df = pd.DataFrame(list(rows), columns=list(columns) if columns is not None else None)
    if fmt == "csv":
        return df.to_csv(index=False, lineterminator="\n")
    if fmt == "md":
        return df.to_markdown(index=False) + "\n"
    raise ValueError(f"unknown output format {fmt!r}")


def render_report(report: SuiteReport, fmt: OutputFormat = "json") -> str:
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    rows = [record_to_dict(r) for r in report.records]
    body = render_table(rows, fmt, RECORD_COLUMNS)
    if fmt == "md":
        counts = ", ".join(f"{k}: {v}" for k, v in report.summary.items())
        body += f"\nSummary: {counts}\n"
    return body
