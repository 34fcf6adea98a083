import pytest
from typer.testing import CliRunner

from cnspa.cli.main import app
from cnspa.cli.renderers import SWEEP_HEADER

pytestmark = pytest.mark.contract

runner = CliRunner()


def _sweep(out, *extra):
    args = ["sweep", "--seed", "11", "--trials", "4", "--se", "1,4,8", "--out", str(out), *extra]
    return runner.invoke(app, args)


def test_sweep_writes_one_row_per_point_and_scheme(tmp_path):
    out = tmp_path / "sweep.csv"
    result = _sweep(out)
    assert result.exit_code == 0, result.output
    lines = out.read_text(encoding="utf-8").split("\n")
    assert lines[0] == ",".join(SWEEP_HEADER)
    assert lines[-1] == ""
    assert len(lines) - 2 == 3 * 5


def test_sweep_is_byte_identical_across_worker_counts(tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert _sweep(first, "--workers", "1").exit_code == 0
    assert _sweep(second, "--workers", "4").exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    assert b"\r" not in first.read_bytes()


def test_sweep_to_stdout_without_out():
    result = runner.invoke(app, ["sweep", "--seed", "11", "--trials", "2", "--se", "2"])
    assert result.exit_code == 0
    assert ",".join(SWEEP_HEADER) in result.output


def test_sweep_rejects_bad_grid(tmp_path):
    result = runner.invoke(app, ["sweep", "--se", "1,x", "--out", str(tmp_path / "s.csv")])
    assert result.exit_code == 1


def test_sweep_unwritable_output_exits_1(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    result = runner.invoke(
        app, ["sweep", "--trials", "1", "--se", "1", "--out", str(blocker / "sub" / "s.csv")]
    )
    assert result.exit_code == 1


def test_sweep_rejects_repeated_se_points(tmp_path):
    out = tmp_path / "s.csv"
    result = runner.invoke(app, ["sweep", "--trials", "2", "--se", "2,2.0", "--out", str(out)])
    assert result.exit_code == 1
    assert "distinct" in result.output
    assert not out.exists()
