"""Trial execution, sweeps, result storage and acceptance suites."""

from src.harness.acceptance import SUITES, run_acceptance
from src.harness.network import build_network
from src.harness.results import ResultStore
from src.harness.runner import ExperimentResult, ExperimentRunner
from src.harness.sweep import (
    SweepPoint,
    SweepResult,
    gnuplot_script,
    render_csv,
    report_rows,
    run_sweep,
    sweep_rows,
)
from src.harness.trial import TrialContext, run_trial

__all__ = [
    "SUITES",
    "ExperimentResult",
    "ExperimentRunner",
    "ResultStore",
    "SweepPoint",
    "SweepResult",
    "TrialContext",
    "build_network",
    "gnuplot_script",
    "render_csv",
    "report_rows",
    "run_acceptance",
    "run_sweep",
    "run_trial",
    "sweep_rows",
]
