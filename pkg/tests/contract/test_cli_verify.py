import pytest
from typer.testing import CliRunner

from cnspa.cli.main import app
from cnspa.optim import optimizer

pytestmark = pytest.mark.contract

runner = CliRunner()


def test_verify_passes_on_defaults(tmp_path):
    dump = tmp_path / "cx.yaml"
    result = runner.invoke(
        app, ["verify", "--instances", "10", "--max-m", "6", "--counterexample", str(dump)]
    )
    assert result.exit_code == 0, result.output
    assert "All properties hold" in result.output
    assert not dump.exists()


def test_verify_rejects_clusters_beyond_subset_limit():
    result = runner.invoke(app, ["verify", "--instances", "1", "--max-m", "13"])
    assert result.exit_code == 1


def test_broken_criterion_exits_3_and_dump_replays(monkeypatch, tmp_path):
    original = optimizer.join_criterion
    monkeypatch.setattr(
        optimizer,
        "join_criterion",
        lambda m_bar, gamma, r_dl, cfg: not original(m_bar, gamma, r_dl, cfg),
    )
    dump = tmp_path / "cx.yaml"
    result = runner.invoke(
        app, ["verify", "--instances", "3", "--max-m", "5", "--counterexample", str(dump)]
    )
    assert result.exit_code == 3, result.output
    assert dump.exists()

    monkeypatch.setattr(optimizer, "join_criterion", original)
    replay = runner.invoke(app, ["run", "--instance", str(dump)])
    assert replay.exit_code == 0, replay.output
    assert "cns_pa" in replay.output
