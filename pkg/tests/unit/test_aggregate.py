import pytest

from cnspa.exceptions import InvalidArgumentError
from cnspa.models.solution import SCHEME_ORDER, CooperationSolution, Scheme, SolutionStatus
from cnspa.models.sweep import TrialRecord
from cnspa.sim.montecarlo import aggregate

pytestmark = pytest.mark.unit


def _solution(scheme, ee, *, active=1, status=SolutionStatus.OPTIMAL):
    if status is SolutionStatus.INFEASIBLE:
        return CooperationSolution.infeasible(scheme, 1e6)
    return CooperationSolution(
        scheme=scheme,
        status=status,
        rate_demand=1e6,
        active_count=active,
        total_power=1e6 / ee,
        energy_efficiency=ee,
    )


def _record(trial_id, ee, **kwargs):
    return TrialRecord(
        trial_id=trial_id,
        rate_demand=1e6,
        solutions={s: _solution(s, ee, **kwargs) for s in SCHEME_ORDER},
        min_amp=0.1,
        max_amp=1.0,
    )


def _by_rate(record):
    return record.rate_demand / 1e6


def test_mean_over_three_records():
    records = [_record(0, 1e6, active=1), _record(1, 2e6, active=2), _record(2, 3e6, active=3)]
    result = aggregate(records, _by_rate)
    point = result.point(1.0, Scheme.CNS_PA)
    assert point.mean_ee == pytest.approx(2e6)
    assert point.mean_active_nodes == pytest.approx(2.0)
    # sample std of (1, 2, 3) MW/J is 1, over sqrt(3)
    assert point.stderr_ee == pytest.approx(1e6 / 3**0.5)
    assert point.trials == 3
    assert point.feasible_fraction == 1.0


def test_identical_values_have_zero_stderr():
    result = aggregate([_record(i, 5e6) for i in range(4)], _by_rate)
    assert result.point(1.0, Scheme.SINGLE).stderr_ee == 0.0


def test_single_record_has_zero_stderr():
    result = aggregate([_record(0, 5e6)], _by_rate)
    assert result.point(1.0, Scheme.CNS_PA).stderr_ee == 0.0


def test_infeasible_trial_counts_in_fraction_only():
    records = [_record(i, 4e6) for i in range(3)]
    records.append(_record(3, 4e6, status=SolutionStatus.INFEASIBLE))
    point = aggregate(records, _by_rate).point(1.0, Scheme.CNS_PA)
    assert point.feasible_fraction == pytest.approx(3 / 4)
    assert point.mean_ee == pytest.approx(4e6)
    assert point.trials == 4


def test_baseline_means_exclude_trials_where_cns_pa_is_infeasible():
    good = _record(0, 4e6)
    bad_solutions = dict(_record(1, 1e6).solutions)
    bad_solutions[Scheme.CNS_PA] = CooperationSolution.infeasible(Scheme.CNS_PA, 1e6)
    bad = TrialRecord(trial_id=1, rate_demand=1e6, solutions=bad_solutions, min_amp=0.1, max_amp=1.0)
    point = aggregate([good, bad], _by_rate).point(1.0, Scheme.ALL_PA)
    assert point.mean_ee == pytest.approx(4e6)
    assert point.feasible_fraction == 1.0


def test_empty_group_is_omitted_with_warning():
    records = [_record(i, 1e6, status=SolutionStatus.INFEASIBLE) for i in range(2)]
    result = aggregate(records, _by_rate)
    assert result.points == ()
    assert len(result.warnings) == len(SCHEME_ORDER)


def test_cap_adjusted_fraction():
    records = [_record(0, 1e6, status=SolutionStatus.CAP_ADJUSTED), _record(1, 1e6)]
    assert aggregate(records, _by_rate).point(1.0, Scheme.CNS_PA).cap_adjusted_fraction == 0.5


def test_aggregate_requires_records():
    with pytest.raises(InvalidArgumentError):
        aggregate([], _by_rate)
