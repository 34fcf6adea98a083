import pytest

from cnspa.models.channel import Cluster
from cnspa.models.solution import Scheme, SolutionStatus
from cnspa.optim.baselines import (
    BASELINES,
    all_nodes_pa,
    all_nodes_uniform,
    cns_uniform,
    single_node,
)
from cnspa.optim.optimizer import allocate_power, cns_pa, p2_objective, prepare
from cnspa.radio.power import PaModel

pytestmark = pytest.mark.unit


def test_all_nodes_uniform(toy_cluster, toy_cfg):
    solution = all_nodes_uniform(toy_cluster, 2e6, toy_cfg)
    # P = 3 / (2 + 1 + 1)^2 on every node
    assert list(solution.powers) == pytest.approx([0.1875] * 3)
    assert solution.total_power == pytest.approx(2.125)
    assert solution.rate_achieved == pytest.approx(2e6, rel=1e-9)


def test_all_nodes_uniform_is_optimal_for_identical_channels(toy_cfg, toy_pa, toy_ctx):
    cluster = Cluster.from_amps([1.0, 1.0, 1.0])
    uniform = all_nodes_uniform(cluster, 2e6, toy_cfg)
    assert list(uniform.powers) == pytest.approx(allocate_power(cluster.nodes, 2e6, toy_pa, toy_ctx))


def test_all_nodes_pa_equals_full_prefix_objective(toy_cluster, toy_cfg):
    solution = all_nodes_pa(toy_cluster, 2e6, toy_cfg)
    table = prepare(toy_cluster, 2e6, toy_cfg).table
    assert solution.active_count == 3
    assert solution.total_power == pytest.approx(p2_objective(3, table, 2e6, toy_cfg))
    assert solution.total_power == pytest.approx(2.0)


def test_single_node(toy_cluster, toy_cfg):
    solution = single_node(toy_cluster, 2e6, toy_cfg)
    assert solution.active_node_ids == (1,)
    assert list(solution.powers) == pytest.approx([0.75])
    assert solution.total_power == pytest.approx(2.0)


def test_single_node_infeasible_beyond_its_cap(toy_cluster, toy_cfg):
    # one node at its 50 W cap reaches log2(1 + 200) ~ 7.65 bit/s/Hz,
    # the cluster reaches ~9.6
    solution = single_node(toy_cluster, 8.5e6, toy_cfg)
    assert solution.status is SolutionStatus.INFEASIBLE
    assert cns_pa(toy_cluster, 8.5e6, toy_cfg).feasible


def test_cns_uniform_scans_prefixes(toy_cluster, toy_cfg):
    solution = cns_uniform(toy_cluster, 2e6, toy_cfg)
    # prefix totals: 2.0, 2.0833, 2.125
    assert solution.active_count == 1
    assert solution.total_power == pytest.approx(2.0)


def test_cns_uniform_single_node_cluster_matches_single(toy_cfg):
    cfg = toy_cfg.model_copy(update={"num_nodes_m": 1})
    cluster = Cluster.from_amps([2.0])
    assert cns_uniform(cluster, 2e6, cfg).total_power == pytest.approx(
        single_node(cluster, 2e6, cfg).total_power
    )


def test_dominance_on_toy_cluster(toy_cluster, toy_cfg):
    reference = cns_pa(toy_cluster, 2e6, toy_cfg)
    for solve in BASELINES.values():
        other = solve(toy_cluster, 2e6, toy_cfg)
        assert reference.total_power <= other.total_power + 1e-12
        assert reference.energy_efficiency >= other.energy_efficiency


def test_every_baseline_reports_infeasible_demand(toy_cluster, toy_cfg):
    for scheme, solve in BASELINES.items():
        solution = solve(toy_cluster, 20e6, toy_cfg)
        assert solution.scheme is scheme
        assert solution.status is SolutionStatus.INFEASIBLE


def test_all_uniform_refuses_to_clamp(toy_cfg):
    # node 1 has a 0.1 W cap; equal sharing needs 3 / (1 + 1)^2 = 0.75 W each
    cfg = toy_cfg.model_copy(update={"num_nodes_m": 2, "p_base_tx": 5.0})
    pas = [PaModel(a=0.0, eta_max=0.5, p_max=100.0), PaModel(a=0.0, eta_max=0.5, p_max=0.2)]
    cluster = Cluster.from_amps([1.0, 1.0])
    solution = all_nodes_uniform(cluster, 2e6, cfg, pas)
    assert solution.status is SolutionStatus.INFEASIBLE
    assert solution.scheme is Scheme.ALL_UNIFORM
    assert cns_pa(cluster, 2e6, cfg, pas).feasible
