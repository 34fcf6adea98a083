"""Locale-independent number formatting for CSV output."""

from __future__ import annotations

import math


def format_float(value: float | None) -> str:
    """Shortest round-trip repr with a dot decimal separator; empty for None."""
    if value is None:
        return ""
    if math.isnan(value):
        return "nan"
    return repr(float(value))
