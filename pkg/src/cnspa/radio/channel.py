"""One Monte Carlo drop: PPP placement, path loss, Rayleigh fading and the
cooperative cluster around the receiver at the origin."""

from __future__ import annotations

import logging
import math

import numpy as np

from cnspa.config.models import ScenarioConfig
from cnspa.config.runtime import SETTINGS
from cnspa.exceptions import InvalidArgumentError, SimulationError
from cnspa.models.channel import Cluster, NodeChannel
from cnspa.radio.streams import RandomStream, StreamPurpose

logger = logging.getLogger(__name__)

RAYLEIGH_SCALE = 1.0 / math.sqrt(2.0)


def draw_ppp(cfg: ScenarioConfig, stream: RandomStream) -> np.ndarray:
    """Homogeneous PPP on the D1 x D2 rectangle centered at the origin.

    Returns an (n, 2) array of positions in km with n ~ Poisson(zeta*D1*D2).
    """
    rng = stream.generator
    mean_count = cfg.node_density * cfg.region_d1_km * cfg.region_d2_km
    count = int(rng.poisson(mean_count))
    half = np.array([cfg.region_d1_km / 2.0, cfg.region_d2_km / 2.0])
    return rng.uniform(-half, half, size=(count, 2))


def path_loss_db(d_km: float | np.ndarray, cfg: ScenarioConfig) -> float | np.ndarray:
    d = np.maximum(d_km, cfg.min_distance_km)
    return cfg.pathloss_intercept_db + cfg.pathloss_slope * np.log10(d)


def path_loss_linear(d_km: float, cfg: ScenarioConfig) -> float:
    """Linear path gain 10^(-L(d)/10), with d clamped to the distance floor."""
    if not (d_km > 0.0):
        msg = f"distance must be positive, got {d_km!r}"
        raise InvalidArgumentError(msg, details={"distance_km": d_km})
    return float(10.0 ** (-path_loss_db(d_km, cfg) / 10.0))


def draw_fading(stream: RandomStream, size: int | None = None) -> float | np.ndarray:
    """Rayleigh magnitude(s) with E[|g|^2] = 1 (scale 1/sqrt(2))."""
    mags = stream.generator.rayleigh(scale=RAYLEIGH_SCALE, size=size)
    return float(mags) if size is None else mags


def realize_drop(
    cfg: ScenarioConfig,
    stream: RandomStream,
    *,
    max_attempts: int | None = None,
) -> Cluster:
    """Draw nodes until at least M fall in the region, then keep the M
    strongest by amplitude |h_m| = sqrt(gain) * |g_m|.
    """
    attempts = max_attempts or SETTINGS.max_drop_attempts
    placement = stream.substream(StreamPurpose.PLACEMENT)
    fading = stream.substream(StreamPurpose.FADING)
    m = cfg.num_nodes_m

    for attempt in range(1, attempts + 1):
        positions = draw_ppp(cfg, placement)
        if len(positions) < m:
            logger.debug(
                "drop redrawn",
                extra={"attempt": attempt, "nodes": len(positions), "needed": m},
            )
            continue
        mags = draw_fading(fading, size=len(positions))
        return _build_cluster(cfg, positions, mags)

    msg = f"no drop with at least {m} nodes after {attempts} attempts"
    raise SimulationError(msg, details={"num_nodes_m": m, "attempts": attempts})


def _build_cluster(
    cfg: ScenarioConfig, positions: np.ndarray, mags: np.ndarray
) -> Cluster:
    radial = np.hypot(positions[:, 0], positions[:, 1])
    distances = np.maximum(radial, cfg.min_distance_km)
    gains = 10.0 ** (-path_loss_db(distances, cfg) / 10.0)
    amps = np.sqrt(gains) * mags

    # lexsort sorts by the last key first: amplitude descending, then node id
    ids = np.arange(len(amps))
    order = np.lexsort((ids, -amps))
    nodes = [
        NodeChannel(
            node_id=int(i),
            x_km=float(positions[i, 0]),
            y_km=float(positions[i, 1]),
            distance_km=float(distances[i]),
            pathgain_linear=float(gains[i]),
            fading_mag=float(mags[i]),
            amp=float(amps[i]),
        )
        for i in order
    ]
    m = cfg.num_nodes_m
    return Cluster(nodes=tuple(nodes[:m]), excluded=tuple(nodes[m:]))
