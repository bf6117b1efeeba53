"""Success, output-risk and message-risk estimators over trial records.

Every estimator is a fold of sums over TrialRecords, so results do not depend
on trial order or on how trials were split across workers.
"""

import logging
import math
from collections.abc import Sequence

from src.analysis.intervals import clustered_wilson_interval, newcombe_difference, wilson_interval
from src.consts import CONFIDENCE_LEVEL
from src.errors import InsufficientSampleError, InvalidInputError
from src.models.model_analysis import (
    ArrestCounts,
    DifferenceEstimate,
    Estimate,
    RiskReport,
    TrialRecord,
)
from src.models.model_population import Regime

logger = logging.getLogger(__name__)

MIN_RECOMMENDED_TRIALS = 100


def _require_regime(trials: Sequence[TrialRecord], expected: Regime) -> None:
    if not trials:
        raise InsufficientSampleError("No trials to estimate from")
    wrong = [t.trial_index for t in trials if t.regime != expected]
    if wrong:
        raise InvalidInputError(
            f"{len(wrong)} trial(s) not in the {expected.value} regime (first index {wrong[0]})"
        )
    if len(trials) < MIN_RECOMMENDED_TRIALS:
        logger.warning(f"Only {len(trials)} trials; intervals will be wide")


def _estimate(successes: int, total: int, confidence: float) -> Estimate:
    lo, hi = wilson_interval(successes, total, confidence)
    p = successes / total
    return Estimate(
        value=p, lo=lo, hi=hi, successes=successes, trials=total, std_error=math.sqrt(p * (1 - p) / total)
    )


def estimate_success(trials: Sequence[TrialRecord], confidence: float = CONFIDENCE_LEVEL) -> Estimate:
    """Fraction of many-regime trials in which at least a third of the rebels output many.

    Raises:
        InvalidInputError: If any trial is not in the many regime
    """
    _require_regime(trials, Regime.MANY)
    return _estimate(sum(t.succeeded for t in trials), len(trials), confidence)


def estimate_output_risk(
    trials: Sequence[TrialRecord], restricted: bool = True, confidence: float = CONFIDENCE_LEVEL
) -> Estimate:
    """Pooled per-rebel frequency of many in the few regime.

    Args:
        trials: Few-regime trial records
        restricted: Pool only rebels whose degree passes the median gate
        confidence: Interval level

    Returns:
        Estimate whose interval is widened by the between-trial design effect

    Raises:
        InvalidInputError: If any trial is not in the few regime
        InsufficientSampleError: If no rebel was pooled
    """
    _require_regime(trials, Regime.FEW)
    return estimate_many_rate(trials, restricted, confidence)


def estimate_many_rate(
    trials: Sequence[TrialRecord], restricted: bool = True, confidence: float = CONFIDENCE_LEVEL
) -> Estimate:
    """Pooled per-rebel frequency of many in any regime.

    Raises:
        InsufficientSampleError: If no rebel was pooled
    """
    if restricted:
        hits = [t.eligible_many_count for t in trials]
        sizes = [t.eligible_rebel_count for t in trials]
    else:
        hits = [t.many_count for t in trials]
        sizes = [t.rebel_count for t in trials]
    total = sum(sizes)
    if total == 0:
        raise InsufficientSampleError("No rebels pooled in any trial")

    lo, hi, effective = clustered_wilson_interval(hits, sizes, confidence)
    p = sum(hits) / total
    return Estimate(
        value=p, lo=lo, hi=hi, successes=sum(hits), trials=total, std_error=math.sqrt(p * (1 - p) / effective)
    )


def pooled_arrests(trials: Sequence[TrialRecord], police: str) -> ArrestCounts:
    """Sum one police's arrest tallies over trials."""
    pooled = ArrestCounts()
    for t in trials:
        counts = t.arrests.get(police)
        if counts is None:
            raise InvalidInputError(f"Trial {t.trial_index} has no arrests for police '{police}'")
        pooled.rebels += counts.rebels
        pooled.rebel_arrests += counts.rebel_arrests
        pooled.obedient += counts.obedient
        pooled.obedient_arrests += counts.obedient_arrests
    return pooled


def estimate_message_risk(
    trials: Sequence[TrialRecord], police: str, confidence: float = CONFIDENCE_LEVEL
) -> DifferenceEstimate:
    """Rebel arrest rate minus obedient arrest rate against one police.

    Undercover agents are in neither pool.

    Raises:
        InsufficientSampleError: If no rebel or no obedient agent was observed
    """
    pooled = pooled_arrests(trials, police)
    if pooled.rebels == 0 or pooled.obedient == 0:
        raise InsufficientSampleError(
            f"Need rebels and obedient agents; got {pooled.rebels} and {pooled.obedient}"
        )
    rebel = _estimate(pooled.rebel_arrests, pooled.rebels, confidence)
    obedient = _estimate(pooled.obedient_arrests, pooled.obedient, confidence)
    lo, hi = newcombe_difference(
        rebel.value, (rebel.lo, rebel.hi), obedient.value, (obedient.lo, obedient.hi)
    )
    return DifferenceEstimate(
        value=rebel.value - obedient.value,
        lo=lo,
        hi=hi,
        std_error=math.hypot(rebel.std_error, obedient.std_error),
        rebel_rate=rebel,
        obedient_rate=obedient,
    )


def _message_risks(trials: Sequence[TrialRecord], police: Sequence[str]) -> dict[str, DifferenceEstimate]:
    risks: dict[str, DifferenceEstimate] = {}
    for label in police:
        try:
            risks[label] = estimate_message_risk(trials, label)
        except InsufficientSampleError as e:
            logger.debug(f"Skipping empirical message risk for {label}: {e}")
    return risks


def build_risk_report(
    many_trials: Sequence[TrialRecord],
    few_trials: Sequence[TrialRecord],
    message_risk_analytic: float,
    police: Sequence[str] = (),
    many_rho: float | None = None,
    few_rho: float | None = None,
) -> RiskReport:
    """Assemble success, output risk and message risks into one report.

    Either regime may be empty; its figures are then left unset.
    """
    report = RiskReport(
        trials=max(len(many_trials), len(few_trials)),
        message_risk_analytic=message_risk_analytic,
        regime_many_rho=many_rho,
        regime_few_rho=few_rho,
    )
    if many_trials:
        report.success = estimate_success(many_trials)
        report.message_risk_empirical[Regime.MANY] = _message_risks(many_trials, police)
    if few_trials:
        try:
            report.output_risk = estimate_output_risk(few_trials)
            report.output_risk_unrestricted = estimate_output_risk(few_trials, restricted=False)
        except InsufficientSampleError as e:
            logger.warning(f"Output risk unavailable: {e}")
        report.message_risk_empirical[Regime.FEW] = _message_risks(few_trials, police)
    return report
