"""
Log-safe rendering of verification data.

Exact values in this project get very large (binomial sums with hundreds of
digits, rationals with huge denominators, high-degree polynomials). Logging
them verbatim floods the log, so structures are compacted to short digests
before they are logged.
"""

from __future__ import annotations

import logging
import sys
from fractions import Fraction
from typing import Any, Mapping

from algebra.exactnum import RatPoly

# Integers with more digits than this are replaced by a digest.
MAX_INLINE_DIGITS = 32

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _digest_int(value: int) -> str | int:
    digits = len(str(abs(value)))
    if digits <= MAX_INLINE_DIGITS:
        return value
    return f"<int {digits} digits>"


def compact_for_log(obj: Any) -> Any:
    """
    Return a copy of obj that is safe to log: huge ints, Fractions and
    polynomials become short digests. Nested dicts, lists and tuples are
    processed recursively.
    """
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return _digest_int(obj)
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return _digest_int(obj.numerator)
        num, den = _digest_int(obj.numerator), _digest_int(obj.denominator)
        if isinstance(num, int) and isinstance(den, int):
            return obj
        return f"<fraction {num} / {den}>"
    if isinstance(obj, RatPoly):
        return f"<poly degree {obj.degree}>"
    if isinstance(obj, Mapping) and not isinstance(obj, type):
        return {k: compact_for_log(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [compact_for_log(item) for item in obj]
    if isinstance(obj, tuple):
        return tuple(compact_for_log(item) for item in obj)
    return obj


def configure_logging(level: str = "WARNING") -> None:
    """Single stderr handler; logs never share the report stream."""
    name = level.upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"log level must be one of {LOG_LEVELS}, got {level!r}")
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(name)
