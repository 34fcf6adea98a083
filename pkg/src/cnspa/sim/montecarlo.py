"""Monte Carlo trial orchestration and aggregation.

One trial is one drop. The drop depends only on (seed, trial_id), so every
SE point of a sweep, and every PA variant run with the same seed, sees the
same clusters. Trials run on a thread pool and are merged in trial-id order
before anything is aggregated.
"""

from __future__ import annotations

import concurrent.futures
import logging
from collections import defaultdict
from collections.abc import Callable, Iterable, Sequence

import numpy as np

from cnspa.config.models import ScenarioConfig
from cnspa.config.runtime import SETTINGS
from cnspa.exceptions import InvalidArgumentError
from cnspa.models.channel import Cluster
from cnspa.models.solution import SCHEME_ORDER, Scheme, SolutionStatus
from cnspa.models.sweep import SweepPoint, SweepResult, TrialRecord
from cnspa.optim.baselines import BASELINES
from cnspa.optim.optimizer import cns_pa
from cnspa.radio.channel import realize_drop
from cnspa.radio.streams import RandomStream

LOGGER = logging.getLogger(__name__)

Grouping = Callable[[TrialRecord], float]


def draw_trial_cluster(cfg: ScenarioConfig, trial_id: int) -> Cluster:
    return realize_drop(cfg, RandomStream.for_trial(cfg.seed, trial_id))


def evaluate_cluster(
    cluster: Cluster, trial_id: int, r_dl: float, cfg: ScenarioConfig
) -> TrialRecord:
    """Run CNS-PA and every baseline on one cluster at one demand."""
    solutions = {Scheme.CNS_PA: cns_pa(cluster, r_dl, cfg)}
    for scheme, solve in BASELINES.items():
        solutions[scheme] = solve(cluster, r_dl, cfg)
    amps = cluster.amps
    return TrialRecord(
        trial_id=trial_id,
        rate_demand=r_dl,
        solutions=solutions,
        min_amp=min(amps),
        max_amp=max(amps),
    )


def run_trial(
    cfg: ScenarioConfig, trial_id: int, r_dl: float | None = None
) -> TrialRecord:
    """One drop, all five schemes. ``r_dl`` defaults to the scenario demand."""
    cluster = draw_trial_cluster(cfg, trial_id)
    demand = cfg.rate_demand if r_dl is None else r_dl
    return evaluate_cluster(cluster, trial_id, demand, cfg)


def _trial_over_grid(
    cfg: ScenarioConfig, trial_id: int, rates: Sequence[float]
) -> list[TrialRecord]:
    cluster = draw_trial_cluster(cfg, trial_id)
    return [evaluate_cluster(cluster, trial_id, r, cfg) for r in rates]


def sweep(
    cfg: ScenarioConfig,
    se_grid: Sequence[float] | None = None,
    *,
    workers: int | None = None,
    on_trial: Callable[[int], None] | None = None,
) -> SweepResult:
    """Run ``cfg.trials`` drops and evaluate each one at every SE point."""
    grid = tuple(cfg.se_grid if se_grid is None else se_grid)
    if not grid:
        msg = "se_grid must contain at least one point"
        raise InvalidArgumentError(msg)
    if cfg.trials < 1:
        msg = f"trials must be >= 1, got {cfg.trials}"
        raise InvalidArgumentError(msg)

    rates = [cfg.rate_for_se(se) for se in grid]
    if len(set(rates)) != len(rates):
        msg = f"se_grid points must be distinct, got {list(grid)}"
        raise InvalidArgumentError(msg, details={"se_grid": list(grid)})
    se_by_rate = dict(zip(rates, grid, strict=True))
    max_workers = workers or SETTINGS.workers
    LOGGER.info(
        "sweep started",
        extra={"trials": cfg.trials, "points": len(grid), "workers": max_workers},
    )

    per_trial: dict[int, list[TrialRecord]] = {}
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_trial = {
            executor.submit(_trial_over_grid, cfg, t, rates): t
            for t in range(cfg.trials)
        }
        for fut in concurrent.futures.as_completed(future_to_trial):
            trial_id = future_to_trial[fut]
            per_trial[trial_id] = fut.result()
            if on_trial is not None:
                on_trial(trial_id)

    records = [rec for t in sorted(per_trial) for rec in per_trial[t]]
    return aggregate(records, lambda rec: se_by_rate[rec.rate_demand])


def _mean_and_stderr(values: Sequence[float]) -> tuple[float, float]:
    arr = np.asarray(values, dtype=float)
    mean = float(arr.mean())
    if arr.size < 2:
        return mean, 0.0
    return mean, float(arr.std(ddof=1) / np.sqrt(arr.size))


def aggregate(
    records: Iterable[TrialRecord],
    grouping: Grouping,
    *,
    schemes: Sequence[Scheme] = SCHEME_ORDER,
) -> SweepResult:
    """Per (group, scheme) means over trials where both CNS-PA and the scheme
    are feasible; the feasibility fraction counts every trial in the group."""
    groups: dict[float, list[TrialRecord]] = defaultdict(list)
    for rec in records:
        groups[grouping(rec)].append(rec)
    if not groups:
        msg = "aggregate needs at least one record"
        raise InvalidArgumentError(msg)

    points: list[SweepPoint] = []
    warnings: list[str] = []
    for key in sorted(groups):
        group = sorted(groups[key], key=lambda r: r.trial_id)
        for scheme in schemes:
            solutions = [r.solution(scheme) for r in group]
            feasible = sum(s.feasible for s in solutions)
            used = [
                r.solution(scheme)
                for r in group
                if r.reference_feasible and r.solution(scheme).feasible
            ]
            if not used:
                warnings.append(f"se={key:g} scheme={scheme.value}: no feasible trials")
                continue
            mean_ee, stderr = _mean_and_stderr([s.energy_efficiency for s in used])
            points.append(
                SweepPoint(
                    se_bps_hz=key,
                    scheme=scheme,
                    mean_ee=mean_ee,
                    stderr_ee=stderr,
                    mean_active_nodes=float(np.mean([s.active_count for s in used])),
                    mean_total_power=float(np.mean([s.total_power for s in used])),
                    feasible_fraction=feasible / len(group),
                    cap_adjusted_fraction=sum(
                        s.status is SolutionStatus.CAP_ADJUSTED for s in used
                    )
                    / len(used),
                    trials=len(group),
                )
            )

    for message in warnings:
        LOGGER.warning(message)
    return SweepResult(points=tuple(points), warnings=tuple(warnings))
