import pytest

from cnspa.optim import optimizer
from cnspa.optim.properties import (
    PROPERTIES,
    ProblemInstance,
    generate_instances,
    run_property_suite,
)

pytestmark = pytest.mark.unit


def test_generate_instances_cycles_the_grid(small_cfg):
    instances = list(generate_instances(small_cfg, 4, cluster_size=5))
    assert [i.se_bps_hz for i in instances] == [1.0, 4.0, 8.0, 1.0]
    assert all(i.cluster.size == 5 for i in instances)
    assert instances[1].r_dl == pytest.approx(4.0 * small_cfg.bandwidth_w)


def test_generate_instances_is_deterministic(small_cfg):
    first = [i.cluster for i in generate_instances(small_cfg, 3)]
    again = [i.cluster for i in generate_instances(small_cfg, 3)]
    assert first == again


def test_suite_passes_on_toy_instance(toy_cluster, toy_cfg):
    inst = ProblemInstance(instance_id=0, cluster=toy_cluster, se_bps_hz=2.0, r_dl=2e6)
    report = run_property_suite(toy_cfg, [inst])
    assert report.passed, [(o.name, o.first_failure) for o in report.outcomes]
    assert {o.name for o in report.outcomes} == set(PROPERTIES)


def test_suite_passes_on_random_drops(small_cfg):
    report = run_property_suite(small_cfg, generate_instances(small_cfg, 12))
    assert report.instances == 12
    assert report.passed, [(o.name, o.first_failure) for o in report.outcomes]


def test_flipped_criterion_is_caught(monkeypatch, toy_cluster, toy_cfg):
    original = optimizer.join_criterion

    def flipped(m_bar, gamma, r_dl, cfg):
        return not original(m_bar, gamma, r_dl, cfg)

    monkeypatch.setattr(optimizer, "join_criterion", flipped)
    inst = ProblemInstance(instance_id=0, cluster=toy_cluster, se_bps_hz=2.0, r_dl=2e6)
    report = run_property_suite(toy_cfg, [inst])
    assert not report.passed
    failing = report.first_counterexample()
    assert failing.counterexample is inst
    names = {o.name for o in report.outcomes if not o.passed}
    assert "criterion_equivalence" in names


def test_selected_properties_only(toy_cluster, toy_cfg):
    inst = ProblemInstance(instance_id=0, cluster=toy_cluster, se_bps_hz=2.0, r_dl=2e6)
    report = run_property_suite(toy_cfg, [inst], names=["dominance", "complexity"])
    assert [o.name for o in report.outcomes] == ["dominance", "complexity"]
    assert all(o.checked == 1 for o in report.outcomes)
