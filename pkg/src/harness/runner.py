"""Runs batches of trials, optionally across worker threads, with progress tracking."""

import logging
import threading
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from src.analysis.estimators import build_risk_report
from src.harness.trial import TrialContext
from src.models.model_analysis import RiskReport, TrialRecord
from src.models.model_config import ExperimentConfig
from src.models.model_network import DegreeStats, Network
from src.models.model_population import Regime

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, int], None]


@dataclass
class ExperimentResult:
    """Records of both regimes of one configuration, and the report built from them."""

    config: ExperimentConfig
    stats: DegreeStats
    report: RiskReport
    many: list[TrialRecord] = field(default_factory=list)
    few: list[TrialRecord] = field(default_factory=list)
    duration_seconds: float = 0.0


class ExperimentRunner:
    """Runs trials in index order or on a thread pool.

    Results are returned in trial-index order whatever the thread count, and
    every trial draws from its own streams, so output does not depend on
    parallelism.
    """

    def __init__(self, threads: int = 1):
        """Initialize ExperimentRunner.

        Args:
            threads: Worker threads (1 runs inline)
        """
        self.threads = max(1, threads)

    def run_trials(
        self,
        context: TrialContext,
        trials: int,
        progress_callback: ProgressCallback | None = None,
    ) -> list[TrialRecord]:
        """Run trials 0..trials-1 of a prepared context.

        Args:
            context: Shared trial context
            trials: Number of trials
            progress_callback: Optional callback(completed, total)

        Returns:
            Records ordered by trial index
        """
        completed = 0
        lock = threading.Lock()

        def run_one(index: int) -> TrialRecord:
            nonlocal completed
            record = context.run(index)
            if progress_callback:
                with lock:
                    completed += 1
                    progress_callback(completed, trials)
            return record

        if self.threads == 1:
            return [run_one(i) for i in range(trials)]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(run_one, range(trials)))

    def run_experiment(
        self,
        config: ExperimentConfig,
        network: Network | None = None,
        regimes: tuple[Regime, ...] = (Regime.MANY, Regime.FEW),
        progress_callback: ProgressCallback | None = None,
    ) -> ExperimentResult:
        """Run ``config.trials`` trials in each requested regime and build the risk report.

        Args:
            config: Experiment configuration
            network: Prebuilt network (built from the config when omitted)
            regimes: Regimes to run, each at its configured rho
            progress_callback: Optional callback(completed, total) over all regimes

        Returns:
            ExperimentResult with records and report
        """
        start = time.time()
        total = config.trials * len(regimes)
        records: dict[Regime, list[TrialRecord]] = {}
        context: TrialContext | None = None

        for offset, regime in enumerate(regimes):
            regime_config = config.at_regime(regime)
            context = TrialContext.prepare(regime_config, network, regime=regime)
            network = context.network

            def report_progress(done: int, _: int, base: int = offset * config.trials) -> None:
                if progress_callback:
                    progress_callback(base + done, total)

            rho = regime_config.population.rho
            logger.info(f"Running {config.trials} {regime.value}-regime trials (rho={rho})")
            records[regime] = self.run_trials(context, config.trials, report_progress)

        if context is None:
            context = TrialContext.prepare(config, network)

        report = build_risk_report(
            records.get(Regime.MANY, []),
            records.get(Regime.FEW, []),
            message_risk_analytic=context.analytic_message_risk(),
            police=context.police_labels,
            many_rho=config.population.many_rho if Regime.MANY in records else None,
            few_rho=config.population.few_rho if Regime.FEW in records else None,
        )
        duration = time.time() - start
        logger.info(f"Experiment {config.name!r} finished {total} trials in {duration:.1f}s")
        return ExperimentResult(
            config=config,
            stats=context.stats,
            report=report,
            many=records.get(Regime.MANY, []),
            few=records.get(Regime.FEW, []),
            duration_seconds=duration,
        )
