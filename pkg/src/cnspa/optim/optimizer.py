"""Cooperative node selection and power allocation.

The sorted-prefix structure does the heavy lifting: the active set is always
the strongest prefix of the cluster, the powers for a given prefix have a
closed form, and the prefix length is grown one node at a time while the
activation criterion says the extra node lowers total power.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from cnspa.config.models import ScenarioConfig
from cnspa.exceptions import CapViolationError, InvalidArgumentError
from cnspa.models.channel import Cluster, NodeChannel
from cnspa.models.solution import CooperationSolution, Scheme, SolutionStatus
from cnspa.radio.power import CircuitModel, PaModel, total_power, uniform_pa
from cnspa.radio.rate import RateContext, coherent_rate, is_feasible

logger = logging.getLogger(__name__)

__all__ = [
    "GammaTable",
    "allocate_power",
    "build_solution",
    "cap_violations",
    "cns_pa",
    "criterion_lhs",
    "exhaustive_prefix_scan",
    "idle_solution",
    "join_criterion",
    "p2_objective",
    "prepare",
    "sort_by_priority",
]


@dataclass(frozen=True)
class GammaTable:
    """Per-node effective channel-to-noise coefficients of a sorted cluster.

    gamma[m-1] = eta_m |h_m|^2 / (I_out + P_N); prefix_sums[k-1] is the sum of
    the first k entries. floors[m-1] is node m's ETPA floor
    a*P_max,m / ((1+a)*eta_m), with running sums in floor_sums.
    """

    gamma: np.ndarray
    prefix_sums: np.ndarray
    floors: np.ndarray
    floor_sums: np.ndarray
    a: float

    @classmethod
    def build(
        cls, nodes: Sequence[NodeChannel], pas: Sequence[PaModel], ctx: RateContext
    ) -> GammaTable:
        amps = np.array([n.amp for n in nodes], dtype=float)
        eta = np.array([p.eta_max for p in pas], dtype=float)
        floors = np.array([p.floor for p in pas], dtype=float)
        gamma = eta * amps**2 / ctx.interference_plus_noise
        a = pas[0].a if pas else 0.0
        return cls(
            gamma=gamma,
            prefix_sums=np.cumsum(gamma),
            floors=floors,
            floor_sums=np.cumsum(floors),
            a=a,
        )

    @property
    def size(self) -> int:
        return int(self.gamma.size)

    def sum_to(self, m_bar: int) -> float:
        return float(self.prefix_sums[m_bar - 1])

    def theta(self, node: int, circuit: CircuitModel) -> float:
        """Marginal static cost of activating (1-based) ``node``."""
        return float(self.floors[node - 1]) + circuit.p_base_tx - circuit.p_idle


def sort_by_priority(cluster: Cluster) -> Cluster:
    """Re-sort by amplitude descending, ties by node id. Idempotent."""
    if cluster.is_sorted:
        return cluster
    return Cluster.from_nodes(cluster.nodes, excluded=cluster.excluded)


def _sorted_with_pas(
    cluster: Cluster, pas: Sequence[PaModel] | None, cfg: ScenarioConfig
) -> tuple[Cluster, list[PaModel]]:
    if pas is None:
        return sort_by_priority(cluster), uniform_pa(
            PaModel.from_scenario(cfg), cluster.size
        )
    aligned = uniform_pa(pas, cluster.size)
    pairs = zip(cluster.nodes, aligned, strict=True)
    by_id = {node.node_id: model for node, model in pairs}
    ordered = sort_by_priority(cluster)
    return ordered, [by_id[n.node_id] for n in ordered.nodes]


def allocate_power(
    prefix: Sequence[NodeChannel],
    r_dl: float,
    pa: PaModel | Sequence[PaModel],
    ctx: RateContext,
    *,
    check_caps: bool = False,
) -> list[float]:
    """Closed-form EE-optimal powers for a fixed active prefix.

    P_m = (2^(R/W) - 1) * eta_m^2 |h_m|^2 / N  /  (sum_k eta_k |h_k|^2 / N)^2,
    with N = I_out + P_N. The coherent rate of the result equals ``r_dl``.
    """
    if not prefix:
        msg = "allocate_power needs at least one active node"
        raise InvalidArgumentError(msg)
    if not (r_dl > 0.0):
        msg = f"rate demand must be > 0, got {r_dl!r}"
        raise InvalidArgumentError(msg, details={"r_dl": r_dl})

    pas = uniform_pa(pa, len(prefix))
    amps = np.array([n.amp for n in prefix], dtype=float)
    eta = np.array([p.eta_max for p in pas], dtype=float)
    gamma = eta * amps**2 / ctx.interference_plus_noise
    powers = ctx.snr_target(r_dl) * eta * gamma / gamma.sum() ** 2

    result = [float(p) for p in powers]
    if check_caps:
        violated = cap_violations(result, pas)
        if violated:
            msg = f"closed-form powers exceed the transmit cap at nodes {violated}"
            raise CapViolationError(
                msg,
                details={
                    "positions": violated,
                    "node_ids": [prefix[i].node_id for i in violated],
                },
            )
    return result


def cap_violations(powers: Sequence[float], pas: Sequence[PaModel]) -> list[int]:
    """Prefix positions whose power exceeds Psi^-1(P_max,m)."""
    return [
        i
        for i, (p, model) in enumerate(zip(powers, pas, strict=False))
        if p > model.tx_cap
    ]


def p2_objective(
    m_bar: int, gamma: GammaTable, r_dl: float, cfg: ScenarioConfig
) -> float:
    """Total power of the best allocation over the first ``m_bar`` nodes.

    alpha * (2^(R/W) - 1) + sum of ETPA floors + beta, where
    alpha = 1 / ((1+a) * sum_{m<=m_bar} Gamma(m)).
    """
    if not (1 <= m_bar <= gamma.size):
        msg = f"m_bar must lie in [1, {gamma.size}], got {m_bar}"
        raise InvalidArgumentError(msg)
    ctx = RateContext.from_scenario(cfg)
    circuit = CircuitModel.from_scenario(cfg)
    alpha = 1.0 / ((1.0 + gamma.a) * gamma.sum_to(m_bar))
    floors = float(gamma.floor_sums[m_bar - 1])
    beta = circuit.static_power(m_bar, cfg.num_nodes_m, r_dl)
    return alpha * ctx.snr_target(r_dl) + floors + beta


def criterion_lhs(m_bar: int, gamma: GammaTable) -> float:
    """Gamma(m_bar+1) / (S(m_bar) * S(m_bar+1)); strictly decreasing in m_bar
    when Gamma is non-increasing."""
    return float(
        gamma.gamma[m_bar] / (gamma.prefix_sums[m_bar - 1] * gamma.prefix_sums[m_bar])
    )


def join_criterion(
    m_bar: int, gamma: GammaTable, r_dl: float, cfg: ScenarioConfig
) -> bool:
    """True iff activating node ``m_bar + 1`` strictly lowers total power.

    Gamma(m+1) / (S(m) S(m+1)) > theta_{m+1} (1+a) / (2^(R/W) - 1), evaluated
    with both sides multiplied by the (positive) SNR target.
    """
    if not (1 <= m_bar <= gamma.size - 1):
        msg = f"m_bar must lie in [1, {gamma.size - 1}], got {m_bar}"
        raise InvalidArgumentError(msg)
    snr = RateContext.from_scenario(cfg).snr_target(r_dl)
    theta = gamma.theta(m_bar + 1, CircuitModel.from_scenario(cfg))
    return criterion_lhs(m_bar, gamma) * snr > theta * (1.0 + gamma.a)


def idle_solution(scheme: Scheme, cfg: ScenarioConfig) -> CooperationSolution:
    """Zero demand: every node idles, EE is defined as 0."""
    circuit = CircuitModel.from_scenario(cfg)
    return CooperationSolution(
        scheme=scheme,
        status=SolutionStatus.OPTIMAL,
        rate_demand=0.0,
        active_count=0,
        total_power=circuit.static_power(0, cfg.num_nodes_m, 0.0),
        energy_efficiency=0.0,
    )


def build_solution(
    scheme: Scheme,
    prefix: Sequence[NodeChannel],
    powers: Sequence[float],
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel],
    *,
    status: SolutionStatus = SolutionStatus.OPTIMAL,
    criterion_evaluations: int = 0,
) -> CooperationSolution:
    m_bar = len(prefix)
    ptotal = total_power(list(powers), m_bar, cfg, r_dl, list(pas)[:m_bar])
    achieved = coherent_rate(
        list(powers), [n.amp for n in prefix], RateContext.from_scenario(cfg)
    )
    return CooperationSolution(
        scheme=scheme,
        status=status,
        rate_demand=r_dl,
        active_count=m_bar,
        active_node_ids=tuple(n.node_id for n in prefix),
        powers=tuple(float(p) for p in powers),
        total_power=ptotal,
        energy_efficiency=r_dl / ptotal,
        rate_achieved=achieved,
        criterion_evaluations=criterion_evaluations,
    )


@dataclass(frozen=True)
class PreparedProblem:
    """A sorted cluster with its PA list, rate context and Gamma table."""

    cluster: Cluster
    pas: list[PaModel]
    ctx: RateContext
    table: GammaTable
    r_dl: float
    feasible: bool


def prepare(
    cluster: Cluster,
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel] | None = None,
) -> PreparedProblem:
    if not (r_dl >= 0.0):
        msg = f"rate demand must be >= 0, got {r_dl!r}"
        raise InvalidArgumentError(msg, details={"r_dl": r_dl})
    ordered, pa_list = _sorted_with_pas(cluster, pas, cfg)
    ctx = RateContext.from_scenario(cfg)
    return PreparedProblem(
        cluster=ordered,
        pas=pa_list,
        ctx=ctx,
        table=GammaTable.build(ordered.nodes, pa_list, ctx),
        r_dl=r_dl,
        feasible=is_feasible(r_dl, ordered.nodes, pa_list, ctx),
    )


def _first_cap_feasible(
    problem: PreparedProblem, start: int
) -> tuple[int, list[float]] | None:
    """Smallest prefix length >= start whose closed-form powers respect caps."""
    nodes = problem.cluster.nodes
    for m_bar in range(start, len(nodes) + 1):
        powers = allocate_power(
            nodes[:m_bar], problem.r_dl, problem.pas[:m_bar], problem.ctx
        )
        if not cap_violations(powers, problem.pas[:m_bar]):
            return m_bar, powers
    return None


def cns_pa(
    cluster: Cluster,
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel] | None = None,
) -> CooperationSolution:
    """Greedy cooperative node selection with closed-form power allocation.

    Sort, start from one node, and keep activating the next strongest node
    while the activation criterion holds; then allocate the closed-form
    powers. If they break a cap, grow the prefix until they fit.
    """
    problem = prepare(cluster, r_dl, cfg, pas)
    if r_dl == 0.0:
        return idle_solution(Scheme.CNS_PA, cfg)
    if not problem.feasible:
        return CooperationSolution.infeasible(Scheme.CNS_PA, r_dl)

    size = problem.cluster.size
    evaluations = 0
    m_bar = 1
    while m_bar < size:
        evaluations += 1
        if not join_criterion(m_bar, problem.table, r_dl, cfg):
            break
        m_bar += 1

    fitted = _first_cap_feasible(problem, m_bar)
    if fitted is None:
        logger.debug(
            "caps violated for every prefix",
            extra={"r_dl": r_dl, "greedy_m_bar": m_bar},
        )
        return CooperationSolution.infeasible(
            Scheme.CNS_PA, r_dl, criterion_evaluations=evaluations
        )
    m_star, powers = fitted
    status = SolutionStatus.OPTIMAL if m_star == m_bar else SolutionStatus.CAP_ADJUSTED
    return build_solution(
        Scheme.CNS_PA,
        problem.cluster.nodes[:m_star],
        powers,
        r_dl,
        cfg,
        problem.pas,
        status=status,
        criterion_evaluations=evaluations,
    )


def exhaustive_prefix_scan(
    cluster: Cluster,
    r_dl: float,
    cfg: ScenarioConfig,
    pas: Sequence[PaModel] | None = None,
) -> CooperationSolution:
    """Evaluate the reformulated objective for every prefix length and keep
    the minimizer among cap-respecting prefixes (ties toward fewer nodes)."""
    problem = prepare(cluster, r_dl, cfg, pas)
    if r_dl == 0.0:
        return idle_solution(Scheme.CNS_PA, cfg)
    if not problem.feasible:
        return CooperationSolution.infeasible(Scheme.CNS_PA, r_dl)

    nodes = problem.cluster.nodes
    objective = [
        p2_objective(m_bar, problem.table, r_dl, cfg)
        for m_bar in range(1, len(nodes) + 1)
    ]
    unconstrained = int(np.argmin(objective)) + 1

    best: tuple[float, int, list[float]] | None = None
    for m_bar in range(1, len(nodes) + 1):
        powers = allocate_power(nodes[:m_bar], r_dl, problem.pas[:m_bar], problem.ctx)
        if cap_violations(powers, problem.pas[:m_bar]):
            continue
        value = objective[m_bar - 1]
        if best is None or value < best[0]:
            best = (value, m_bar, powers)

    if best is None:
        return CooperationSolution.infeasible(Scheme.CNS_PA, r_dl)
    _, m_star, powers = best
    status = SolutionStatus.OPTIMAL
    if m_star != unconstrained:
        status = SolutionStatus.CAP_ADJUSTED
    return build_solution(
        Scheme.CNS_PA, nodes[:m_star], powers, r_dl, cfg, problem.pas, status=status
    )
