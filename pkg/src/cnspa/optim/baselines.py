"""Comparison schemes evaluated alongside CNS-PA on the same cluster.

Every scheme applies the same full-cluster feasibility pre-check and reports
infeasible instead of clamping when a node would exceed its transmit cap.
"""

from __future__ import annotations

from collections.abc import Sequence

from cnspa.config.models import ScenarioConfig
from cnspa.models.channel import Cluster, NodeChannel
from cnspa.models.solution import CooperationSolution, Scheme
from cnspa.optim.optimizer import (
    allocate_power,
    build_solution,
    cap_violations,
    idle_solution,
    prepare,
)
from cnspa.radio.power import PaModel, total_power
from cnspa.radio.rate import RateContext

__all__ = [
    "BASELINES",
    "all_nodes_pa",
    "all_nodes_uniform",
    "cns_uniform",
    "single_node",
    "uniform_power",
]


def uniform_power(
    prefix: Sequence[NodeChannel], r_dl: float, ctx: RateContext
) -> float:
    """Equal per-node power meeting ``r_dl`` at equality over ``prefix``:
    (2^(R/W) - 1)(I_out + P_N) / (sum |h_m|)^2."""
    amp_sum = sum(n.amp for n in prefix)
    return ctx.snr_target(r_dl) * ctx.interference_plus_noise / amp_sum**2


def all_nodes_uniform(
    cluster: Cluster,
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel] | None = None,
) -> CooperationSolution:
    problem = prepare(cluster, r_dl, cfg, pas)
    if r_dl == 0.0:
        return idle_solution(Scheme.ALL_UNIFORM, cfg)
    if not problem.feasible:
        return CooperationSolution.infeasible(Scheme.ALL_UNIFORM, r_dl)
    nodes = problem.cluster.nodes
    powers = [uniform_power(nodes, r_dl, problem.ctx)] * len(nodes)
    if cap_violations(powers, problem.pas):
        return CooperationSolution.infeasible(Scheme.ALL_UNIFORM, r_dl)
    return build_solution(Scheme.ALL_UNIFORM, nodes, powers, r_dl, cfg, problem.pas)


def all_nodes_pa(
    cluster: Cluster,
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel] | None = None,
) -> CooperationSolution:
    problem = prepare(cluster, r_dl, cfg, pas)
    if r_dl == 0.0:
        return idle_solution(Scheme.ALL_PA, cfg)
    if not problem.feasible:
        return CooperationSolution.infeasible(Scheme.ALL_PA, r_dl)
    nodes = problem.cluster.nodes
    powers = allocate_power(nodes, r_dl, problem.pas, problem.ctx)
    if cap_violations(powers, problem.pas):
        return CooperationSolution.infeasible(Scheme.ALL_PA, r_dl)
    return build_solution(Scheme.ALL_PA, nodes, powers, r_dl, cfg, problem.pas)


def single_node(
    cluster: Cluster,
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel] | None = None,
) -> CooperationSolution:
    """Only the strongest node transmits; P = (2^(R/W) - 1)(I_out + P_N) / |h_1|^2."""
    problem = prepare(cluster, r_dl, cfg, pas)
    if r_dl == 0.0:
        return idle_solution(Scheme.SINGLE, cfg)
    if not problem.feasible:
        return CooperationSolution.infeasible(Scheme.SINGLE, r_dl)
    best = problem.cluster.nodes[:1]
    powers = [uniform_power(best, r_dl, problem.ctx)]
    if cap_violations(powers, problem.pas[:1]):
        return CooperationSolution.infeasible(Scheme.SINGLE, r_dl)
    return build_solution(Scheme.SINGLE, best, powers, r_dl, cfg, problem.pas)


def cns_uniform(
    cluster: Cluster,
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel] | None = None,
) -> CooperationSolution:
    """Best sorted prefix under uniform power, chosen by total power."""
    problem = prepare(cluster, r_dl, cfg, pas)
    if r_dl == 0.0:
        return idle_solution(Scheme.CNS_UNIFORM, cfg)
    if not problem.feasible:
        return CooperationSolution.infeasible(Scheme.CNS_UNIFORM, r_dl)

    nodes = problem.cluster.nodes
    best: tuple[float, int, list[float]] | None = None
    for m_bar in range(1, len(nodes) + 1):
        prefix = nodes[:m_bar]
        powers = [uniform_power(prefix, r_dl, problem.ctx)] * m_bar
        if cap_violations(powers, problem.pas[:m_bar]):
            continue
        value = total_power(powers, m_bar, cfg, r_dl, problem.pas[:m_bar])
        if best is None or value < best[0]:
            best = (value, m_bar, powers)

    if best is None:
        return CooperationSolution.infeasible(Scheme.CNS_UNIFORM, r_dl)
    _, m_star, powers = best
    return build_solution(
        Scheme.CNS_UNIFORM, nodes[:m_star], powers, r_dl, cfg, problem.pas
    )


BASELINES = {
    Scheme.ALL_UNIFORM: all_nodes_uniform,
    Scheme.ALL_PA: all_nodes_pa,
    Scheme.SINGLE: single_node,
    Scheme.CNS_UNIFORM: cns_uniform,
}
