"""Independent reference solvers for the optimizer.

Nothing here calls into ``cnspa.optim.optimizer``; the subset search and the
multiplier search carry their own arithmetic.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence

import numpy as np
from scipy import optimize

from cnspa.config.models import ScenarioConfig
from cnspa.config.runtime import SETTINGS
from cnspa.exceptions import InvalidArgumentError, OracleFailure
from cnspa.models.channel import Cluster, NodeChannel, priority_key
from cnspa.models.solution import CooperationSolution, Scheme, SolutionStatus
from cnspa.radio.power import PaModel, uniform_pa

logger = logging.getLogger(__name__)

MAX_BISECTION_STEPS = 200
TIE_RTOL = 1e-12

_Pair = tuple[NodeChannel, PaModel]


def _snr_target(r_dl: float, cfg: ScenarioConfig) -> float:
    return math.expm1(r_dl / cfg.bandwidth_w * math.log(2.0))


def subset_total_power(
    subset: Sequence[NodeChannel],
    subset_pas: Sequence[PaModel],
    r_dl: float,
    cfg: ScenarioConfig,
) -> tuple[float, list[float]] | None:
    """Total power of the stationary allocation over ``subset``; None when a
    cap is exceeded."""
    noise = cfg.interference_plus_noise
    snr = _snr_target(r_dl, cfg)
    gamma = [
        pa.eta_max * n.amp**2 / noise
        for n, pa in zip(subset, subset_pas, strict=True)
    ]
    gamma_sum = sum(gamma)
    powers = [
        snr * pa.eta_max * g / gamma_sum**2
        for pa, g in zip(subset_pas, gamma, strict=True)
    ]

    consumed = 0.0
    for p, pa in zip(powers, subset_pas, strict=True):
        if p > (1.0 + pa.a) * pa.eta_max * pa.p_max - pa.a * pa.p_max:
            return None
        consumed += (p + pa.a * pa.p_max) / ((1.0 + pa.a) * pa.eta_max)

    active = len(subset)
    static = (
        active * cfg.p_base_tx
        + (cfg.num_nodes_m - active) * cfg.p_idle
        + 2.0 * cfg.dynamic_circuit_eps * r_dl
        + cfg.p_base_rx
    )
    return consumed + static, powers


def brute_force_best_subset(
    cluster: Cluster,
    r_dl: float,
    cfg: ScenarioConfig,
    max_m: int | None = None,
    pas: Sequence[PaModel] | None = None,
) -> CooperationSolution:
    """Exhaustive search over every non-empty subset of the cluster.

    Ties go to the smaller subset, then to the lexicographically smaller
    sorted node-id tuple.
    """
    limit = SETTINGS.brute_force_limit if max_m is None else max_m
    if cluster.size > limit:
        msg = f"refusing to enumerate 2^{cluster.size} subsets (limit {limit})"
        raise OracleFailure(msg, details={"size": cluster.size, "max_m": limit})
    if not (r_dl > 0.0):
        msg = f"rate demand must be > 0, got {r_dl!r}"
        raise InvalidArgumentError(msg, details={"r_dl": r_dl})

    base = pas if pas is not None else PaModel.from_scenario(cfg)
    pa_list = uniform_pa(base, cluster.size)
    paired = sorted(
        zip(cluster.nodes, pa_list, strict=True), key=lambda item: item[0].node_id
    )

    best: tuple[float, tuple[_Pair, ...], list[float]] | None = None
    for size in range(1, len(paired) + 1):
        for combo in itertools.combinations(paired, size):
            evaluated = subset_total_power(
                [n for n, _ in combo], [pa for _, pa in combo], r_dl, cfg
            )
            if evaluated is None:
                continue
            value, powers = evaluated
            if best is None or value < best[0] * (1.0 - TIE_RTOL):
                best = (value, combo, powers)

    if best is None:
        return CooperationSolution.infeasible(Scheme.CNS_PA, r_dl)

    value, combo, powers = best
    ordered = sorted(
        zip(combo, powers, strict=True), key=lambda item: priority_key(item[0][0])
    )
    nodes = [n for (n, _), _ in ordered]
    return CooperationSolution(
        scheme=Scheme.CNS_PA,
        status=SolutionStatus.OPTIMAL,
        rate_demand=r_dl,
        active_count=len(nodes),
        active_node_ids=tuple(n.node_id for n in nodes),
        powers=tuple(p for _, p in ordered),
        total_power=value,
        energy_efficiency=r_dl / value,
    )


def numeric_allocate(
    subset: Sequence[NodeChannel],
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel] | None = None,
) -> list[float]:
    """Minimize sum_m P_m / ((1+a) eta_m) subject to the rate equality by
    bisecting on the Lagrange multiplier.

    With amplitudes u_m = sqrt(P_m), stationarity gives
    u_m(nu) = nu (1+a) eta_m |h_m| / 2, and the residual
    sum_m u_m(nu) |h_m| - sqrt((2^(R/W) - 1)(I_out + P_N)) is increasing in nu.
    """
    if not subset:
        msg = "numeric_allocate needs a non-empty subset"
        raise InvalidArgumentError(msg)
    if r_dl < 0.0:
        msg = f"rate demand must be >= 0, got {r_dl!r}"
        raise InvalidArgumentError(msg, details={"r_dl": r_dl})
    if r_dl == 0.0:
        return [0.0] * len(subset)

    base = pas if pas is not None else PaModel.from_scenario(cfg)
    pa_list = uniform_pa(base, len(subset))
    amps = np.array([n.amp for n in subset], dtype=float)
    scale = np.array([(1.0 + pa.a) * pa.eta_max for pa in pa_list], dtype=float)
    weight = scale * amps / 2.0
    target = math.sqrt(_snr_target(r_dl, cfg) * cfg.interference_plus_noise)

    def residual(nu: float) -> float:
        return float(np.dot(nu * weight, amps)) - target

    upper = 1.0
    for _ in range(MAX_BISECTION_STEPS):
        if residual(upper) > 0.0:
            break
        upper *= 2.0
    else:
        msg = "could not bracket the multiplier"
        raise OracleFailure(msg, details={"upper": upper})

    try:
        nu, info = optimize.bisect(
            residual,
            0.0,
            upper,
            xtol=1e-300,
            rtol=4.0 * np.finfo(float).eps,
            maxiter=MAX_BISECTION_STEPS,
            full_output=True,
            disp=False,
        )
    except (RuntimeError, ValueError) as exc:
        raise OracleFailure(str(exc), details={"upper": upper}) from exc
    if not info.converged:
        msg = f"bisection did not converge in {MAX_BISECTION_STEPS} steps"
        details = {"iterations": info.iterations, "flag": info.flag}
        raise OracleFailure(msg, details=details)

    logger.debug("multiplier found", extra={"nu": nu, "iterations": info.iterations})
    return [float(u) ** 2 for u in nu * weight]
