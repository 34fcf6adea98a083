"""Property suite cross-checking the optimizer against the oracles.

Each check takes one problem instance and returns a failure message, or None
when the property holds (or does not apply, e.g. an infeasible demand).
``run_property_suite`` tallies the results and keeps the first failing
instance of every property as a counterexample.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from cnspa.config.models import ScenarioConfig
from cnspa.models.channel import Cluster
from cnspa.models.solution import CooperationSolution
from cnspa.optim import optimizer
from cnspa.optim.baselines import BASELINES
from cnspa.optim.oracle import (
    brute_force_best_subset,
    numeric_allocate,
    subset_total_power,
)
from cnspa.radio.channel import realize_drop
from cnspa.radio.power import PaModel
from cnspa.radio.rate import RateContext
from cnspa.radio.streams import RandomStream, StreamPurpose

logger = logging.getLogger(__name__)

RATE_RTOL = 1e-9
POWER_RTOL = 1e-6
TOTAL_RTOL = 1e-9
TIE_RTOL = 1e-12
DOMINANCE_ATOL = 1e-12
PERTURBATION_STEP = 1e-3
NUMERIC_SUBSET_MAX = 8


@dataclass(frozen=True)
class ProblemInstance:
    instance_id: int
    cluster: Cluster
    se_bps_hz: float
    r_dl: float


@dataclass
class PropertyOutcome:
    name: str
    description: str
    checked: int = 0
    failures: int = 0
    first_failure: str | None = None
    counterexample: ProblemInstance | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, instance: ProblemInstance, failure: str | None) -> None:
        self.checked += 1
        if failure is None:
            return
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = instance
            self.first_failure = failure


@dataclass
class PropertyReport:
    outcomes: list[PropertyOutcome] = field(default_factory=list)
    instances: int = 0

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def first_counterexample(self) -> PropertyOutcome | None:
        return next((o for o in self.outcomes if not o.passed), None)


Check = Callable[[ProblemInstance, ScenarioConfig], str | None]


def _rel_err(value: float, reference: float) -> float:
    return abs(value - reference) / max(abs(reference), np.finfo(float).tiny)


def check_rate_tightness(inst: ProblemInstance, cfg: ScenarioConfig) -> str | None:
    solution = optimizer.cns_pa(inst.cluster, inst.r_dl, cfg)
    if not solution.feasible or solution.active_count == 0:
        return None
    err = _rel_err(solution.rate_achieved, inst.r_dl)
    if err > RATE_RTOL:
        return f"achieved rate off by {err:.3e} relative"
    return None


def _numeric_subset(inst: ProblemInstance) -> list:
    """A random subset of 1..8 nodes, fixed by the instance id."""
    rng = RandomStream(inst.instance_id, (StreamPurpose.INSTANCE,)).generator
    upper = min(NUMERIC_SUBSET_MAX, inst.cluster.size)
    size = int(rng.integers(1, upper + 1))
    picks = sorted(rng.choice(inst.cluster.size, size=size, replace=False).tolist())
    return [inst.cluster.nodes[i] for i in picks]


def check_numeric_allocation(inst: ProblemInstance, cfg: ScenarioConfig) -> str | None:
    if inst.r_dl == 0.0:
        return None
    subset = _numeric_subset(inst)
    ctx = RateContext.from_scenario(cfg)
    pa = PaModel.from_scenario(cfg)
    closed = optimizer.allocate_power(subset, inst.r_dl, pa, ctx)
    numeric = numeric_allocate(subset, inst.r_dl, cfg)
    worst = max(_rel_err(c, n) for c, n in zip(closed, numeric, strict=True))
    if worst > POWER_RTOL:
        return f"closed-form and numeric powers differ by {worst:.3e} relative"
    closed_total = sum(closed) / ((1.0 + pa.a) * pa.eta_max)
    numeric_total = sum(numeric) / ((1.0 + pa.a) * pa.eta_max)
    if _rel_err(closed_total, numeric_total) > TOTAL_RTOL:
        return "closed-form and numeric amplifier power differ"
    return None


def check_subset_optimality(inst: ProblemInstance, cfg: ScenarioConfig) -> str | None:
    if inst.r_dl == 0.0:
        return None
    greedy = optimizer.cns_pa(inst.cluster, inst.r_dl, cfg)
    best = brute_force_best_subset(
        inst.cluster, inst.r_dl, cfg, max_m=inst.cluster.size
    )
    if greedy.feasible != best.feasible:
        return (
            f"feasibility differs: cns_pa={greedy.status.value}, "
            f"subsets={best.status.value}"
        )
    if not greedy.feasible:
        return None
    if _rel_err(greedy.total_power, best.total_power) > TOTAL_RTOL:
        return (
            f"cns_pa total {greedy.total_power!r} W "
            f"vs subset optimum {best.total_power!r} W"
        )

    # the winner must be a sorted prefix, allowing permutations among equal amplitudes
    by_id = {n.node_id: n.amp for n in inst.cluster.nodes}
    winner = sorted((by_id[i] for i in best.active_node_ids), reverse=True)
    prefix = sorted(inst.cluster.amps, reverse=True)[: len(winner)]
    if winner != prefix:
        return f"subset optimum {best.active_node_ids} is not a sorted prefix"
    return None


def check_criterion_equivalence(
    inst: ProblemInstance, cfg: ScenarioConfig
) -> str | None:
    problem = optimizer.prepare(inst.cluster, inst.r_dl, cfg)
    table = problem.table
    for m_bar in range(1, table.size):
        here = optimizer.p2_objective(m_bar, table, inst.r_dl, cfg)
        there = optimizer.p2_objective(m_bar + 1, table, inst.r_dl, cfg)
        if abs(there - here) <= TIE_RTOL * abs(here):
            continue
        expected = there < here
        if optimizer.join_criterion(m_bar, table, inst.r_dl, cfg) != expected:
            return f"criterion disagrees with the objective at m_bar={m_bar}"
    return None


def check_greedy_matches_scan(inst: ProblemInstance, cfg: ScenarioConfig) -> str | None:
    greedy = optimizer.cns_pa(inst.cluster, inst.r_dl, cfg)
    scan = optimizer.exhaustive_prefix_scan(inst.cluster, inst.r_dl, cfg)
    if greedy.active_count != scan.active_count:
        return (
            f"greedy stops at {greedy.active_count}, "
            f"prefix scan picks {scan.active_count}"
        )

    table = optimizer.prepare(inst.cluster, inst.r_dl, cfg).table
    lhs = [optimizer.criterion_lhs(m, table) for m in range(1, table.size)]
    if any(b >= a for a, b in zip(lhs, lhs[1:], strict=False)):
        return "criterion left-hand side is not strictly decreasing"
    return None


def check_dominance(inst: ProblemInstance, cfg: ScenarioConfig) -> str | None:
    reference = optimizer.cns_pa(inst.cluster, inst.r_dl, cfg)
    if not reference.feasible:
        return None
    for scheme, solve in BASELINES.items():
        other: CooperationSolution = solve(inst.cluster, inst.r_dl, cfg)
        if not other.feasible:
            continue
        if reference.total_power > other.total_power + DOMINANCE_ATOL:
            return f"{scheme.value} uses less power than cns_pa"
    return None


def check_complexity(inst: ProblemInstance, cfg: ScenarioConfig) -> str | None:
    solution = optimizer.cns_pa(inst.cluster, inst.r_dl, cfg)
    if solution.criterion_evaluations > inst.cluster.size:
        count = solution.criterion_evaluations
        return f"{count} criterion evaluations for M={inst.cluster.size}"
    return None


def check_perturbation(inst: ProblemInstance, cfg: ScenarioConfig) -> str | None:
    """Moving amplitude between two active nodes along the rate constraint
    never lowers amplifier power."""
    solution = optimizer.cns_pa(inst.cluster, inst.r_dl, cfg)
    if not solution.feasible or solution.active_count < 2:
        return None
    pa = PaModel.from_scenario(cfg)
    slope = 1.0 / ((1.0 + pa.a) * pa.eta_max)
    amps = {n.node_id: n.amp for n in inst.cluster.nodes}
    h = np.array([amps[i] for i in solution.active_node_ids])
    u = np.sqrt(np.array(solution.powers))
    base = slope * float(np.sum(u**2))

    i, j = 0, len(u) - 1
    for sign in (1.0, -1.0):
        delta = sign * PERTURBATION_STEP * u[i]
        moved = u.copy()
        moved[i] += delta
        moved[j] -= delta * h[i] / h[j]
        if moved[i] < 0.0 or moved[j] < 0.0:
            continue
        if slope * float(np.sum(moved**2)) < base - DOMINANCE_ATOL:
            return f"perturbation by {delta:.3e} lowers power"
    return None


def check_exchange(inst: ProblemInstance, cfg: ScenarioConfig) -> str | None:
    """Swapping the weakest active node for the strongest idle one never
    lowers total power."""
    solution = optimizer.cns_pa(inst.cluster, inst.r_dl, cfg)
    m_star = solution.active_count
    if not solution.feasible or not (0 < m_star < inst.cluster.size):
        return None
    ordered = optimizer.sort_by_priority(inst.cluster).nodes
    pa = PaModel.from_scenario(cfg)
    swapped = [*ordered[: m_star - 1], ordered[m_star]]
    evaluated = subset_total_power(swapped, [pa] * m_star, inst.r_dl, cfg)
    if evaluated is None:
        return None
    if evaluated[0] < solution.total_power - DOMINANCE_ATOL:
        return "exchanging an active node for a weaker one lowers power"
    return None


PROPERTIES: dict[str, tuple[str, Check]] = {
    "rate_tightness": (
        "closed-form powers meet the demand exactly",
        check_rate_tightness,
    ),
    "numeric_allocation": (
        "closed form matches multiplier bisection",
        check_numeric_allocation,
    ),
    "subset_optimality": (
        "cns_pa matches exhaustive subset search",
        check_subset_optimality,
    ),
    "criterion_equivalence": (
        "criterion agrees with objective differences",
        check_criterion_equivalence,
    ),
    "greedy_vs_exhaustive": (
        "greedy stop equals best prefix length",
        check_greedy_matches_scan,
    ),
    "dominance": ("no baseline uses less power than cns_pa", check_dominance),
    "complexity": ("at most M criterion evaluations", check_complexity),
    "perturbation": ("rate-preserving perturbations never help", check_perturbation),
    "exchange": ("swapping in a weaker node never helps", check_exchange),
}


def generate_instances(
    cfg: ScenarioConfig, count: int, *, cluster_size: int | None = None
) -> Iterator[ProblemInstance]:
    """Random feasible-or-not drops cycling through the scenario's SE grid."""
    if cluster_size is not None:
        cfg = cfg.model_copy(update={"num_nodes_m": cluster_size})
    grid = cfg.se_grid
    for instance_id in range(count):
        cluster = realize_drop(cfg, RandomStream.for_trial(cfg.seed, instance_id))
        se = grid[instance_id % len(grid)]
        yield ProblemInstance(
            instance_id=instance_id,
            cluster=cluster,
            se_bps_hz=se,
            r_dl=cfg.rate_for_se(se),
        )


def run_property_suite(
    cfg: ScenarioConfig,
    instances: Iterable[ProblemInstance],
    *,
    names: Iterable[str] | None = None,
    on_instance: Callable[[ProblemInstance], None] | None = None,
) -> PropertyReport:
    selected = list(names) if names is not None else list(PROPERTIES)
    report = PropertyReport(
        outcomes=[
            PropertyOutcome(name=n, description=PROPERTIES[n][0]) for n in selected
        ]
    )
    for inst in instances:
        # instances share the scenario but carry their own cluster size
        local = cfg.model_copy(update={"num_nodes_m": inst.cluster.size})
        for outcome in report.outcomes:
            outcome.record(inst, PROPERTIES[outcome.name][1](inst, local))
        report.instances += 1
        if on_instance is not None:
            on_instance(inst)

    for outcome in report.outcomes:
        level = logging.INFO if outcome.passed else logging.WARNING
        logger.log(
            level,
            "property %s: %d/%d passed",
            outcome.name,
            outcome.checked - outcome.failures,
            outcome.checked,
        )
    return report

