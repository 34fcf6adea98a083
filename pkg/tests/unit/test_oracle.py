import pytest

from cnspa.exceptions import OracleFailure
from cnspa.models.channel import Cluster
from cnspa.optim.optimizer import allocate_power, cns_pa
from cnspa.optim.oracle import brute_force_best_subset, numeric_allocate, subset_total_power
from cnspa.radio.channel import realize_drop
from cnspa.radio.streams import RandomStream

pytestmark = pytest.mark.unit


def test_brute_force_agrees_with_cns_pa_on_toy(toy_cluster, toy_cfg):
    best = brute_force_best_subset(toy_cluster, 2e6, toy_cfg)
    assert best.total_power == pytest.approx(1.95)
    assert set(best.active_node_ids) == {0, 1}


def test_brute_force_single_node(toy_cfg):
    cfg = toy_cfg.model_copy(update={"num_nodes_m": 1})
    best = brute_force_best_subset(Cluster.from_amps([2.0]), 2e6, cfg)
    assert best.active_node_ids == (0,)
    assert list(best.powers) == pytest.approx([0.75])


def test_brute_force_breaks_ties_towards_lower_ids(toy_cfg):
    cfg = toy_cfg.model_copy(update={"p_base_tx": 5.0})
    best = brute_force_best_subset(Cluster.from_amps([1.0, 1.0, 1.0]), 2e6, cfg)
    assert best.active_node_ids == (0,)


def test_brute_force_refuses_large_clusters(toy_cfg):
    cluster = Cluster.from_amps([1.0] * 5)
    with pytest.raises(OracleFailure):
        brute_force_best_subset(cluster, 2e6, toy_cfg, max_m=4)


def test_subset_total_power_flags_cap_violations(toy_cfg, toy_pa):
    nodes = Cluster.from_amps([0.1]).nodes
    # 3 / 0.01 = 300 W against a 50 W cap
    assert subset_total_power(nodes, [toy_pa], 2e6, toy_cfg) is None


def test_numeric_allocate_single_node(toy_cfg):
    nodes = Cluster.from_amps([2.0]).nodes
    assert numeric_allocate(nodes, 2e6, toy_cfg) == pytest.approx([0.75], rel=1e-9)


def test_numeric_allocate_symmetric_pair(toy_cfg):
    p1, p2 = numeric_allocate(Cluster.from_amps([1.0, 1.0]).nodes, 2e6, toy_cfg)
    assert p1 == pytest.approx(p2, rel=1e-12)


def test_numeric_allocate_zero_demand(toy_cfg):
    assert numeric_allocate(Cluster.from_amps([1.0, 1.0]).nodes, 0.0, toy_cfg) == [0.0, 0.0]


def test_numeric_matches_closed_form_on_random_drops(small_cfg):
    from cnspa.radio.power import PaModel
    from cnspa.radio.rate import RateContext

    pa = PaModel.from_scenario(small_cfg)
    ctx = RateContext.from_scenario(small_cfg)
    for trial in range(10):
        cluster = realize_drop(small_cfg, RandomStream.for_trial(small_cfg.seed, trial))
        r_dl = small_cfg.rate_for_se(1.0 + trial % 10)
        closed = allocate_power(cluster.nodes, r_dl, pa, ctx)
        numeric = numeric_allocate(cluster.nodes, r_dl, small_cfg)
        assert numeric == pytest.approx(closed, rel=1e-6)


def test_brute_force_matches_cns_pa_on_random_drops(small_cfg):
    for trial in range(10):
        cluster = realize_drop(small_cfg, RandomStream.for_trial(small_cfg.seed, trial))
        r_dl = small_cfg.rate_for_se(2.0 + trial % 9)
        greedy = cns_pa(cluster, r_dl, small_cfg)
        best = brute_force_best_subset(cluster, r_dl, small_cfg)
        assert best.total_power == pytest.approx(greedy.total_power, rel=1e-9)
        assert set(best.active_node_ids) == set(greedy.active_node_ids)
