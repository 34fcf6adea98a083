"""Coherent joint-transmission rate and the per-cluster feasibility check."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from cnspa.config.models import ScenarioConfig
from cnspa.exceptions import InvalidArgumentError
from cnspa.models.channel import NodeChannel
from cnspa.radio.power import PaModel, uniform_pa

FEASIBILITY_RTOL = 1e-12


@dataclass(frozen=True)
class RateContext:
    bandwidth_w: float
    interference_plus_noise: float

    def __post_init__(self) -> None:
        if not (self.bandwidth_w > 0.0 and self.interference_plus_noise > 0.0):
            msg = "bandwidth and interference-plus-noise must both be > 0"
            raise InvalidArgumentError(
                msg,
                details={
                    "bandwidth_w": self.bandwidth_w,
                    "interference_plus_noise": self.interference_plus_noise,
                },
            )

    @classmethod
    def from_scenario(cls, cfg: ScenarioConfig) -> RateContext:
        return cls(
            bandwidth_w=cfg.bandwidth_w,
            interference_plus_noise=cfg.interference_plus_noise,
        )

    def snr_target(self, r_dl: float) -> float:
        """2^(R/W) - 1, the SNR a demand of ``r_dl`` bit/s needs."""
        return math.expm1(r_dl / self.bandwidth_w * math.log(2.0))


def received_amplitude(powers: Sequence[float], amps: Sequence[float]) -> float:
    """sum_m sqrt(P_m) * |h_m| (phase-aligned amplitudes add)."""
    p = np.asarray(powers, dtype=float)
    h = np.asarray(amps, dtype=float)
    if p.shape != h.shape:
        msg = f"powers and amplitudes differ in length ({p.size} vs {h.size})"
        raise InvalidArgumentError(msg)
    if np.any(p < 0) or np.any(h < 0):
        msg = "powers and amplitudes must be non-negative"
        raise InvalidArgumentError(msg)
    return float(np.dot(np.sqrt(p), h))


def coherent_rate(
    powers: Sequence[float], amps: Sequence[float], ctx: RateContext
) -> float:
    """W * log2(1 + (sum_m sqrt(P_m)|h_m|)^2 / (I_out + P_N)) in bit/s."""
    snr = received_amplitude(powers, amps) ** 2 / ctx.interference_plus_noise
    return ctx.bandwidth_w * math.log1p(snr) / math.log(2.0)


def _cap_amplitude(
    prefix: Sequence[NodeChannel], pa: PaModel | Sequence[PaModel]
) -> float:
    pas = uniform_pa(pa, len(prefix))
    return sum(
        math.sqrt(model.tx_cap) * node.amp
        for node, model in zip(prefix, pas, strict=True)
    )


def max_rate(
    prefix: Sequence[NodeChannel],
    pa: PaModel | Sequence[PaModel],
    ctx: RateContext,
) -> float:
    """Rate with every node of ``prefix`` at its transmit cap."""
    if not prefix:
        msg = "max_rate needs a non-empty prefix"
        raise InvalidArgumentError(msg)
    pas = uniform_pa(pa, len(prefix))
    return coherent_rate([m.tx_cap for m in pas], [n.amp for n in prefix], ctx)


def is_feasible(
    r_dl: float,
    prefix: Sequence[NodeChannel],
    pa: PaModel | Sequence[PaModel],
    ctx: RateContext,
) -> bool:
    """True iff 2^(R/W) - 1 <= (sum sqrt(cap_m)|h_m|)^2 / (I_out + P_N)."""
    if r_dl < 0:
        msg = f"rate demand must be >= 0, got {r_dl!r}"
        raise InvalidArgumentError(msg)
    if r_dl == 0:
        return True
    if not prefix:
        return False
    needed = ctx.snr_target(r_dl)
    available = _cap_amplitude(prefix, pa) ** 2 / ctx.interference_plus_noise
    return needed <= available * (1.0 + FEASIBILITY_RTOL)
