"""One-parameter sweeps and their CSV and gnuplot renderings.

Rendering is a pure function of the results, so two runs with the same
config and seed produce byte-identical files.
"""

import csv
import io
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass

from src.consts import CSV_FLOAT_FORMAT, CSV_HEADER
from src.errors import InvalidParameterError
from src.harness.network import build_network
from src.harness.runner import ExperimentResult, ExperimentRunner
from src.models.model_analysis import Estimate, RiskReport
from src.models.model_config import ExperimentConfig
from src.models.model_network import DegreeStats, Network
from src.models.model_population import Regime
from src.population.roles import regime as regime_of

logger = logging.getLogger(__name__)

NO_POLICE = "none"


@dataclass
class SweepPoint:
    value: float
    result: ExperimentResult


@dataclass
class SweepResult:
    config: ExperimentConfig
    network: Network
    points: list[SweepPoint]
    duration_seconds: float

    @property
    def stats(self) -> DegreeStats:
        return self.points[0].result.stats


def _fmt(value: float | None) -> str:
    return "" if value is None else CSV_FLOAT_FORMAT.format(value)


def _point_config(config: ExperimentConfig, value: float) -> tuple[ExperimentConfig, tuple[Regime, ...]]:
    parameter = config.sweep.parameter
    if parameter != "rho":
        return config.with_parameter(parameter, value), (Regime.MANY, Regime.FEW)

    regime = regime_of(value)
    if regime == Regime.NEITHER:
        raise InvalidParameterError(f"rho sweep value {value} is in neither regime")
    data = config.model_dump()
    data["population"]["rho"] = value
    data["population"][f"{regime.value}_rho"] = value
    return ExperimentConfig.model_validate(data), (regime,)


def run_sweep(
    config: ExperimentConfig,
    runner: ExperimentRunner | None = None,
    network: Network | None = None,
    progress_callback: Callable[[int, int], None] | None = None,
) -> SweepResult:
    """Run the experiment at every grid value, in grid order, on one network.

    Args:
        config: Configuration with a sweep section
        runner: Trial runner (single-threaded when omitted)
        network: Prebuilt network
        progress_callback: Optional callback(completed_points, total_points)

    Raises:
        InvalidParameterError: If the config has no sweep
    """
    if config.sweep is None:
        raise InvalidParameterError("Config has no sweep section")
    runner = runner or ExperimentRunner(config.threads)
    network = network if network is not None else build_network(config.topology, config.seed)
    start = time.time()
    grid = sorted(config.sweep.grid)

    points: list[SweepPoint] = []
    for i, value in enumerate(grid, start=1):
        point_config, regimes = _point_config(config, value)
        logger.info(f"Sweep {config.sweep.parameter}={value} ({i}/{len(grid)})")
        points.append(SweepPoint(value, runner.run_experiment(point_config, network, regimes)))
        if progress_callback:
            progress_callback(i, len(grid))

    return SweepResult(config=config, network=network, points=points, duration_seconds=time.time() - start)


def _estimate_cells(estimate: Estimate | None) -> list[str]:
    if estimate is None:
        return ["", "", ""]
    return [_fmt(estimate.value), _fmt(estimate.lo), _fmt(estimate.hi)]


def report_rows(
    report: RiskReport,
    config: ExperimentConfig,
    stats: DegreeStats,
    param: float | None,
    police_labels: list[str],
) -> list[list[str]]:
    """CSV rows of one report: one per regime run and police.

    Many-regime rows carry success; few-regime rows carry output and total risk.
    """
    rows = []
    regimes = [
        regime
        for regime, rho in ((Regime.MANY, report.regime_many_rho), (Regime.FEW, report.regime_few_rho))
        if rho is not None
    ]
    for regime in regimes:
        many = regime == Regime.MANY
        for label in police_labels or [NO_POLICE]:
            risk = report.message_risk_empirical.get(regime, {}).get(label)
            rows.append(
                [
                    _fmt(param),
                    regime.value,
                    config.mode.value,
                    config.protocol.kind.value,
                    label,
                    str(stats.n),
                    str(stats.median_degree),
                    str(report.trials),
                    *_estimate_cells(report.success if many else None),
                    *_estimate_cells(None if many else report.output_risk),
                    _fmt(report.message_risk_analytic),
                    *(["", "", ""] if risk is None else [_fmt(risk.value), _fmt(risk.lo), _fmt(risk.hi)]),
                    "" if many else _fmt(report.total_risk),
                ]
            )
    return rows


def sweep_rows(result: SweepResult) -> list[list[str]]:
    labels = [spec.label for spec in result.config.police]
    rows: list[list[str]] = []
    for point in result.points:
        res = point.result
        rows.extend(report_rows(res.report, res.config, res.stats, point.value, labels))
    return rows


def render_csv(rows: list[list[str]]) -> str:
    """CSV text with the fixed header and LF line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buffer.getvalue()


def gnuplot_script(csv_name: str, parameter: str, police: str = NO_POLICE) -> str:
    """Gnuplot script drawing success, output, message and total risk against the swept parameter."""
    columns = {name: i + 1 for i, name in enumerate(CSV_HEADER)}

    def series(regime: str, column: str, title: str) -> str:
        return (
            f'"{csv_name}" every ::1 using 1:(strcol(2) eq "{regime}" && strcol(5) eq "{police}" '
            f'? ${columns[column]} : 1/0) with linespoints title "{title}"'
        )

    stem = csv_name.rsplit(".", 1)[0]
    lines = [
        "set datafile separator \",\"",
        "set terminal pngcairo size 900,600",
        f'set output "{stem}.png"',
        f'set xlabel "{parameter}"',
        'set ylabel "probability"',
        "set yrange [0:1]",
        "set key outside right",
        "plot " + ", \\\n     ".join(
            [
                series("many", "success", "success"),
                series("few", "output_risk", "output risk"),
                series("few", "msg_risk_analytic", "message risk (analytic)"),
                series("few", "total_risk", "total risk"),
            ]
        ),
        "",
    ]
    return "\n".join(lines)
