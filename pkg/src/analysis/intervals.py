"""Confidence intervals for binomial proportions."""

import math
from collections.abc import Sequence

from scipy.stats import norm

from src.consts import CONFIDENCE_LEVEL
from src.errors import InvalidParameterError


def _z(confidence: float) -> float:
    if not 0.0 < confidence < 1.0:
        raise InvalidParameterError(f"confidence must be in (0, 1), got {confidence}")
    return float(norm.ppf(0.5 + confidence / 2))


def wilson_interval(
    successes: float, trials: float, confidence: float = CONFIDENCE_LEVEL
) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion.

    Args:
        successes: Number of successes (may be fractional for effective counts)
        trials: Number of trials, >= 1
        confidence: Two-sided confidence level

    Returns:
        (lower, upper), clipped to [0, 1]
    """
    if trials <= 0 or not 0 <= successes <= trials:
        raise InvalidParameterError(f"Need 0 <= successes <= trials, trials > 0; got {successes}/{trials}")
    z = _z(confidence)
    p_hat = successes / trials
    denominator = 1 + z**2 / trials
    center = (p_hat + z**2 / (2 * trials)) / denominator
    margin = (z / denominator) * math.sqrt(p_hat * (1 - p_hat) / trials + z**2 / (4 * trials**2))

    lower = 0.0 if successes == 0 else max(0.0, center - margin)
    upper = 1.0 if successes == trials else min(1.0, center + margin)
    return lower, upper


def design_effect(successes: Sequence[int], sizes: Sequence[int]) -> float:
    """Variance inflation of a pooled proportion whose units come in correlated clusters.

    Ratio-estimator variance across clusters divided by the binomial variance;
    never below 1.
    """
    total = sum(sizes)
    clusters = sum(1 for s in sizes if s > 0)
    if total == 0 or clusters < 2:
        return 1.0
    p = sum(successes) / total
    if p in (0.0, 1.0):
        return 1.0
    mean_size = total / clusters
    residual = sum((s - p * m) ** 2 for s, m in zip(successes, sizes, strict=True) if m > 0)
    var_ratio = residual / (clusters * (clusters - 1) * mean_size**2)
    var_binomial = p * (1 - p) / total
    return max(1.0, var_ratio / var_binomial)


def clustered_wilson_interval(
    successes: Sequence[int], sizes: Sequence[int], confidence: float = CONFIDENCE_LEVEL
) -> tuple[float, float, float]:
    """Wilson interval on the pooled proportion at its design-effect sample size.

    Returns:
        (lower, upper, effective_sample_size)
    """
    total = sum(sizes)
    deff = design_effect(successes, sizes)
    effective = total / deff
    lower, upper = wilson_interval(sum(successes) / deff, effective, confidence)
    return lower, upper, effective


def newcombe_difference(
    p1: float, interval1: tuple[float, float], p0: float, interval0: tuple[float, float]
) -> tuple[float, float]:
    """Hybrid score interval for p1 - p0 from the two Wilson intervals."""
    l1, u1 = interval1
    l0, u0 = interval0
    d = p1 - p0
    lower = d - math.sqrt((p1 - l1) ** 2 + (u0 - p0) ** 2)
    upper = d + math.sqrt((u1 - p1) ** 2 + (p0 - l0) ** 2)
    return max(-1.0, lower), min(1.0, upper)
