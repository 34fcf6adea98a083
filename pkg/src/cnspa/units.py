"""Conversions between logarithmic and linear power quantities.

All optimizer math runs in linear SI units (watts, Hz, bit/s); dB values
appear only at the configuration and report boundaries.
"""

from __future__ import annotations

import math

from cnspa.exceptions import InvalidArgumentError

__all__ = [
    "db_to_linear",
    "dbm_to_watt",
    "linear_to_db",
    "noise_power",
    "watt_to_dbm",
]


def dbm_to_watt(x: float) -> float:
    """Return ``x`` dBm in watts: 10^((x - 30) / 10)."""
    if not math.isfinite(x):
        msg = f"power in dBm must be finite, got {x!r}"
        raise InvalidArgumentError(msg, details={"value": x})
    return 10.0 ** ((x - 30.0) / 10.0)


def watt_to_dbm(x: float) -> float:
    """Inverse of :func:`dbm_to_watt`; ``x`` must be strictly positive."""
    if not (x > 0.0) or not math.isfinite(x):
        msg = f"power in watts must be positive and finite, got {x!r}"
        raise InvalidArgumentError(msg, details={"value": x})
    return 10.0 * math.log10(x) + 30.0


def db_to_linear(x_db: float) -> float:
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    if not (x > 0.0):
        msg = f"linear ratio must be positive, got {x!r}"
        raise InvalidArgumentError(msg, details={"value": x})
    return 10.0 * math.log10(x)


def noise_power(n0_dbm_per_hz: float, w_hz: float) -> float:
    """Thermal noise power N0 * W in watts.

    Args:
        n0_dbm_per_hz: noise power spectral density in dBm/Hz
        w_hz: bandwidth in Hz, strictly positive
    """
    if not (w_hz > 0.0) or not math.isfinite(w_hz):
        msg = f"bandwidth must be positive, got {w_hz!r}"
        raise InvalidArgumentError(msg, details={"value": w_hz})
    return dbm_to_watt(n0_dbm_per_hz + 10.0 * math.log10(w_hz))
