import pytest
from typer.testing import CliRunner

from cnspa.cli.main import app

pytestmark = pytest.mark.contract

runner = CliRunner()


def test_run_defaults_lists_every_scheme():
    result = runner.invoke(app, ["run", "--seed", "7", "--se", "4"])
    assert result.exit_code == 0, result.output
    for scheme in ("cns_pa", "all_uniform", "all_pa", "single", "cns_uniform"):
        assert scheme in result.output


def test_run_logs_resolved_scenario():
    result = runner.invoke(app, ["run", "--seed", "7"])
    assert result.exit_code == 0
    assert "num_nodes_m = 16" in result.output


def test_run_missing_config_exits_1(tmp_path):
    result = runner.invoke(app, ["run", "--config", str(tmp_path / "missing.cfg")])
    assert result.exit_code == 1


def test_run_bad_config_lists_line_numbers(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("num_nodes_m = 8\nfoo = 1\neta_max = 2\n", encoding="utf-8")
    result = runner.invoke(app, ["run", "--config", str(cfg)])
    assert result.exit_code == 1
    assert "line 2" in result.output


def test_run_infeasible_demand_exits_2():
    result = runner.invoke(app, ["run", "--seed", "7", "--se", "60"])
    assert result.exit_code == 2


def test_run_writes_results_and_drop_csv(tmp_path):
    out = tmp_path / "run.csv"
    drop = tmp_path / "drop.csv"
    result = runner.invoke(
        app, ["run", "--seed", "7", "--out", str(out), "--drop-csv", str(drop)]
    )
    assert result.exit_code == 0, result.output
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("scheme,status,active_nodes")
    assert len(lines) == 6
    drop_lines = drop.read_text(encoding="utf-8").splitlines()
    assert drop_lines[0] == "node_id,x_km,y_km,distance_km,pathloss_db,fading_mag,amp,in_cluster"
    assert sum(line.endswith(",1") for line in drop_lines[1:]) == 16


def test_run_ipa_flag(tmp_path):
    etpa = tmp_path / "etpa.csv"
    ipa = tmp_path / "ipa.csv"
    assert runner.invoke(app, ["run", "--seed", "3", "--out", str(etpa)]).exit_code == 0
    assert runner.invoke(app, ["run", "--seed", "3", "--pa", "ipa", "--out", str(ipa)]).exit_code == 0
    assert etpa.read_text(encoding="utf-8") != ipa.read_text(encoding="utf-8")


def test_run_rejects_path_gain_above_one(tmp_path):
    cfg = tmp_path / "gain.cfg"
    cfg.write_text("num_nodes_m = 4\npathloss_intercept_db = 0\n", encoding="utf-8")
    result = runner.invoke(app, ["run", "--config", str(cfg)])
    assert result.exit_code == 1
    assert "pathloss_intercept_db" in result.output
    assert "Traceback" not in result.output
