"""Environment readers behind ``RuntimeSettings.from_env()``.

A bad value never aborts start-up: it is logged once and the default wins.
"""

from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

_FLAG_WORDS = {
    "1": True,
    "true": True,
    "yes": True,
    "on": True,
    "0": False,
    "false": False,
    "no": False,
    "off": False,
}


def _fallback(name: str, raw: str, problem: str, default: object) -> None:
    logger.warning("%s=%r %s; using default %r", name, raw, problem, default)


def env_int(name: str, default: int, *, low: int = 1, high: int | None = None) -> int:
    """Integer in [low, high] from ``name``; unset or empty means ``default``."""
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        _fallback(name, raw, "is not an integer", default)
        return default
    if value < low or (high is not None and value > high):
        bounds = f"[{low}, {high}]" if high is not None else f">= {low}"
        _fallback(name, raw, f"is outside {bounds}", default)
        return default
    return value


def env_flag(name: str, default: bool) -> bool:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    flag = _FLAG_WORDS.get(raw.lower())
    if flag is None:
        _fallback(name, raw, "is not a boolean", default)
        return default
    return flag
