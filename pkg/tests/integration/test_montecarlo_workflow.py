import pytest

from cnspa.config.models import PaKind
from cnspa.models.solution import SCHEME_ORDER, Scheme
from cnspa.sim.montecarlo import draw_trial_cluster, run_trial, sweep

pytestmark = pytest.mark.integration


def test_run_trial_is_deterministic(small_cfg):
    assert run_trial(small_cfg, 3) == run_trial(small_cfg, 3)


def test_run_trial_covers_every_scheme_on_one_drop(small_cfg):
    record = run_trial(small_cfg, 0)
    assert set(record.solutions) == set(SCHEME_ORDER)
    cluster = draw_trial_cluster(small_cfg, 0)
    assert record.min_amp == min(cluster.amps)
    assert record.max_amp == max(cluster.amps)


def test_cns_pa_dominates_every_feasible_baseline(small_cfg):
    for trial in range(small_cfg.trials):
        for se in small_cfg.se_grid:
            record = run_trial(small_cfg, trial, small_cfg.rate_for_se(se))
            reference = record.solution(Scheme.CNS_PA)
            if not reference.feasible:
                continue
            for scheme in SCHEME_ORDER[1:]:
                other = record.solution(scheme)
                if other.feasible:
                    assert reference.total_power <= other.total_power + 1e-12


def test_degenerate_sweep_matches_run_trial(small_cfg):
    cfg = small_cfg.model_copy(update={"trials": 1})
    result = sweep(cfg, [4.0])
    record = run_trial(cfg, 0, cfg.rate_for_se(4.0))
    point = result.point(4.0, Scheme.CNS_PA)
    assert point.mean_ee == record.solution(Scheme.CNS_PA).energy_efficiency
    assert point.stderr_ee == 0.0
    assert point.trials == 1


def test_sweep_is_independent_of_worker_count(small_cfg):
    assert sweep(small_cfg, workers=1) == sweep(small_cfg, workers=3)


def test_sweep_uses_common_drops_across_se_points(small_cfg):
    seen = []
    sweep(small_cfg, [1.0, 2.0], on_trial=seen.append)
    assert sorted(seen) == list(range(small_cfg.trials))


def test_etpa_costs_energy_efficiency_at_every_point(small_cfg):
    etpa = sweep(small_cfg.with_pa(PaKind.ETPA))
    ipa = sweep(small_cfg.with_pa(PaKind.IPA))
    for se in small_cfg.se_grid:
        assert etpa.point(se, Scheme.CNS_PA).mean_ee < ipa.point(se, Scheme.CNS_PA).mean_ee
        assert (
            etpa.point(se, Scheme.CNS_PA).mean_active_nodes
            <= ipa.point(se, Scheme.CNS_PA).mean_active_nodes
        )


def test_sweep_rejects_empty_grid(small_cfg):
    from cnspa.exceptions import InvalidArgumentError

    with pytest.raises(InvalidArgumentError):
        sweep(small_cfg, [])


def test_sweep_rejects_repeated_points(small_cfg):
    from cnspa.exceptions import InvalidArgumentError

    with pytest.raises(InvalidArgumentError):
        sweep(small_cfg.model_copy(update={"trials": 3}), [2.0, 2.0])


def test_each_point_counts_every_trial_once(small_cfg):
    cfg = small_cfg.model_copy(update={"trials": 3})
    result = sweep(cfg, [2.0, 3.0])
    series = result.series(Scheme.CNS_PA)
    assert [p.se_bps_hz for p in series] == [2.0, 3.0]
    assert all(p.trials <= cfg.trials for p in series)
