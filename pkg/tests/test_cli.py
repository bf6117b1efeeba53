"""Tests for CLI interface."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from src.cli import app
from src.consts import CSV_HEADER
from src.models.model_acceptance import AcceptanceReport, CriterionResult
from src.models.model_config import ExperimentConfig, SweepSpec, TopologyKind, TopologySpec

runner = CliRunner()


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep results-root and thread overrides out of the tests."""
    monkeypatch.delenv("CQS_DATA_DIR", raising=False)
    monkeypatch.delenv("CQS_THREADS", raising=False)


@pytest.fixture
def config_file(tmp_path: Path, small_config: ExperimentConfig) -> Path:
    path = tmp_path / "small.json"
    path.write_text(small_config.model_dump_json(), encoding="utf-8")
    return path


@pytest.fixture
def sweep_file(tmp_path: Path, small_config: ExperimentConfig) -> Path:
    config = small_config.model_copy(
        update={"name": "eps", "trials": 3, "sweep": SweepSpec(parameter="epsilon", grid=[0.3, 0.6])}
    )
    path = tmp_path / "eps.json"
    path.write_text(config.model_dump_json(), encoding="utf-8")
    return path


class TestRunCommand:
    """Tests for the run command."""

    def test_run_writes_csv(self, tmp_path: Path, config_file: Path) -> None:
        out = tmp_path / "out"
        result = runner.invoke(app, ["run", "--config", str(config_file), "--out", str(out)])
        assert result.exit_code == 0, result.output
        csv_path = out / "runs" / "small.csv"
        assert csv_path.exists()
        assert csv_path.read_text(encoding="utf-8").splitlines()[0] == ",".join(CSV_HEADER)
        assert "Success" in result.output

    def test_env_data_dir(
        self, tmp_path: Path, config_file: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("CQS_DATA_DIR", str(tmp_path / "env"))
        result = runner.invoke(app, ["run", "-c", str(config_file), "--seed", "7"])
        assert result.exit_code == 0, result.output
        assert (tmp_path / "env" / "runs" / "small.csv").exists()

    def test_missing_config(self) -> None:
        result = runner.invoke(app, ["run"])
        assert result.exit_code == 1
        assert "Must specify --config" in result.output

    def test_invalid_config(self, tmp_path: Path, small_config: ExperimentConfig) -> None:
        data = json.loads(small_config.model_dump_json())
        data["trials"] = 0
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        result = runner.invoke(app, ["run", "--config", str(path)])
        assert result.exit_code == 1
        assert "Invalid config" in result.output

    def test_unreadable_config(self, tmp_path: Path) -> None:
        result = runner.invoke(app, ["run", "--config", str(tmp_path / "nope.json")])
        assert result.exit_code == 1

    def test_bad_thread_env(
        self, tmp_path: Path, config_file: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("CQS_THREADS", "many")
        result = runner.invoke(app, ["run", "-c", str(config_file), "-o", str(tmp_path)])
        assert result.exit_code == 1
        assert "CQS_THREADS" in result.output


class TestSweepCommand:
    """Tests for the sweep command."""

    def test_sweep_writes_outputs(self, tmp_path: Path, sweep_file: Path) -> None:
        out = tmp_path / "out"
        result = runner.invoke(
            app, ["sweep", "-c", str(sweep_file), "-o", str(out), "--gnuplot", "-t", "2"]
        )
        assert result.exit_code == 0, result.output
        sweeps = out / "sweeps"
        assert (sweeps / "eps.csv").exists()
        assert (sweeps / "eps.gp").exists()
        metadata = json.loads((sweeps / "eps.meta.json").read_text(encoding="utf-8"))
        assert metadata["grid"] == [0.3, 0.6]
        assert metadata["config"]["threads"] == 2

    def test_requires_sweep_section(self, tmp_path: Path, config_file: Path) -> None:
        result = runner.invoke(app, ["sweep", "-c", str(config_file), "-o", str(tmp_path)])
        assert result.exit_code == 1


class TestAcceptCommand:
    """Tests for the accept command."""

    def test_passing_suite(self, tmp_path: Path) -> None:
        result = runner.invoke(app, ["accept", "pinsker", "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "acceptance" / "pinsker.json").read_text(encoding="utf-8"))
        assert report["passed"] is True

    def test_unknown_suite(self, tmp_path: Path) -> None:
        result = runner.invoke(app, ["accept", "nonsense", "--out", str(tmp_path)])
        assert result.exit_code == 1
        assert "Unknown suite" in result.output

    def test_failing_suite_exits_2(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        def failing(suite: str, **kwargs: int | None) -> AcceptanceReport:
            report = AcceptanceReport(suite=suite, seed=1)
            report.add(CriterionResult(name="always_fails", passed=False, measured={"x": 1.0}))
            return report

        monkeypatch.setattr("src.cli.run_acceptance", failing)
        result = runner.invoke(app, ["accept", "kl", "--out", str(tmp_path)])
        assert result.exit_code == 2
        assert "failed" in result.output

    def test_edge_list_reaches_suites(
        self, tmp_path: Path, edge_list_file: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        seen: dict[str, object] = {}

        def capture(suite: str, **kwargs: object) -> AcceptanceReport:
            seen.update(kwargs)
            report = AcceptanceReport(suite=suite, seed=1)
            report.add(CriterionResult(name="ok", passed=True, measured={"x": 1.0}))
            return report

        monkeypatch.setattr("src.cli.run_acceptance", capture)
        args = ["accept", "risk_gap", "--edge-list", str(edge_list_file), "--max-nodes", "3"]
        result = runner.invoke(app, [*args, "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        topology = seen["topology"]
        assert isinstance(topology, TopologySpec)
        assert topology.kind == TopologyKind.EDGE_LIST
        assert topology.path == edge_list_file
        assert topology.max_nodes == 3


class TestGraphStatsCommand:
    """Tests for the graph-stats command."""

    def test_stats(self, edge_list_file: Path) -> None:
        result = runner.invoke(app, ["graph-stats", str(edge_list_file)])
        assert result.exit_code == 0, result.output
        assert "Median degree" in result.output

    def test_subsample(self, edge_list_file: Path) -> None:
        result = runner.invoke(app, ["graph-stats", str(edge_list_file), "--max-nodes", "3", "--root", "40"])
        assert result.exit_code == 0, result.output

    def test_missing_file(self, tmp_path: Path) -> None:
        result = runner.invoke(app, ["graph-stats", str(tmp_path / "none.txt")])
        assert result.exit_code == 1

    def test_non_utf8_file(self, tmp_path: Path) -> None:
        path = tmp_path / "latin.txt"
        path.write_bytes(b"1 2\n3 \xe9\n")
        result = runner.invoke(app, ["graph-stats", str(path)])
        assert result.exit_code == 1
        assert "Traceback" not in result.output
