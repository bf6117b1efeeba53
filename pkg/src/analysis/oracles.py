"""Exact per-rebel Many probabilities.

Given its own role, each neighbor of a rebel is independently a rebel with
probability rho (undercover with probability u), and every received signal
carries independent N(0, 1) noise. Conditioning on the neighbor-role counts
turns each decision rule into a binomial tail or a binomial mixture of
Gaussian tails, evaluated here with scipy.
"""

import math

import numpy as np
from scipy.stats import binom

from src.analysis.gaussian import normal_tail
from src.consts import MEDIAN_SLOPE
from src.errors import InvalidParameterError


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise InvalidParameterError(f"{name} must be in [0, 1], got {value}")


def binomial_exceeds(trials: int, p: float, threshold: float) -> float:
    """P(X > threshold) for X ~ Binomial(trials, p)."""
    if trials < 0:
        raise InvalidParameterError(f"trials must be >= 0, got {trials}")
    _check_probability("p", p)
    return float(binom.sf(math.floor(threshold), trials, p))


def qs_many_probability(
    epsilon: float,
    rho: float,
    degree: int,
    fixed_sum: float = 0.0,
    fixed_count: int = 0,
) -> float:
    """P(Many) of a Quorum-Sensing rebel of degree Delta at or above the median.

    The mean signal given K rebel neighbors is N((eps K + fixed_sum) / Delta, 1 / Delta);
    K ~ Binomial(Delta - fixed_count, rho).

    Args:
        epsilon: Rebel message
        rho: Neighbor rebel probability
        degree: The rebel's degree Delta
        fixed_sum: Total message of neighbors with known messages (e.g. undercover)
        fixed_count: How many neighbors ``fixed_sum`` covers
    """
    _check_probability("rho", rho)
    if degree < 1 or not 0 <= fixed_count <= degree:
        raise InvalidParameterError(
            f"Need degree >= 1 and 0 <= fixed_count <= degree, got {degree}, {fixed_count}"
        )
    random_count = degree - fixed_count
    k = np.arange(random_count + 1)
    weights = binom.pmf(k, random_count, rho)
    shift = (epsilon * k + fixed_sum) / degree
    tails = normal_tail(math.sqrt(degree) * (epsilon / 2 - shift))
    return float(np.dot(weights, tails))


def qs_many_probability_gaussian(epsilon: float, rho: float, degree: int) -> float:
    """Approximation psi(sqrt(Delta) (eps / 2 - rho eps)), treating the mean as N(rho eps, 1 / Delta)."""
    return float(normal_tail(math.sqrt(degree) * (epsilon / 2 - rho * epsilon)))


def high_signal_probability(
    epsilon: float,
    rho: float,
    undercover_prob: float = 0.0,
    attack_value: float | None = None,
) -> float:
    """P(a neighbor's signal > eps).

    Rebels send eps (probability 1/2), obedient agents 0 (psi(eps)), undercover
    agents ``attack_value`` (psi(eps - v)); without an attack value undercover
    agents count as obedient.
    """
    _check_probability("rho", rho)
    _check_probability("undercover_prob", undercover_prob)
    obedient = float(normal_tail(epsilon))
    undercover = obedient if attack_value is None else float(normal_tail(epsilon - attack_value))
    return undercover_prob * undercover + (1 - undercover_prob) * (rho / 2 + (1 - rho) * obedient)


def median_many_probability(epsilon: float, degree: int, p_high: float, forced_high: int = 0) -> float:
    """P(Many) of a Median rebel: count of signals above eps exceeds (1/2 - 7 eps / 30) Delta.

    Args:
        epsilon: Protocol epsilon
        degree: The rebel's degree Delta, at or above the median
        p_high: Probability that a random neighbor's signal is above eps
        forced_high: Neighbors whose signal is above eps with certainty
    """
    if not 0 <= forced_high <= degree:
        raise InvalidParameterError(f"forced_high must be in [0, {degree}], got {forced_high}")
    threshold = (0.5 - MEDIAN_SLOPE * epsilon) * degree
    return binomial_exceeds(degree - forced_high, p_high, threshold - forced_high)


def si_many_probability(
    q: float,
    tau: float,
    degree: int,
    median_degree: int,
    rho: float,
    undercover_prob: float = 0.0,
    undercover_huge: bool = False,
) -> float:
    """P(Many) of a Self-Immolation rebel: huge count exceeds tau Delta_i / Delta.

    A neighbor emits the huge sentinel with probability (1 - u) rho q, plus u
    when undercover agents send huge messages themselves.
    """
    _check_probability("q", q)
    if median_degree < 1:
        raise InvalidParameterError(f"median_degree must be >= 1, got {median_degree}")
    p_huge = (1 - undercover_prob) * rho * q + (undercover_prob if undercover_huge else 0.0)
    return binomial_exceeds(degree, p_huge, tau * degree / median_degree)


def qs_output_risk_oracle(epsilon: float, rho: float, degrees: np.ndarray, median_degree: int) -> float:
    """Exact Quorum-Sensing output risk pooled over agents that pass the degree gate.

    Every agent is equally likely to be a rebel, so the pooled rate is the mean
    of the per-degree Many probability over agents with degree >= median.
    Agents without neighbors never output many.

    Args:
        epsilon: Rebel message
        rho: Rebel probability
        degrees: Degree of every agent
        median_degree: Network median degree

    Raises:
        InvalidParameterError: If no agent passes the degree gate
    """
    gated = np.asarray(degrees)[np.asarray(degrees) >= median_degree]
    if gated.size == 0:
        raise InvalidParameterError(f"No agent has degree >= {median_degree}")
    values, counts = np.unique(gated, return_counts=True)
    rates = np.array([qs_many_probability(epsilon, rho, int(d)) if d > 0 else 0.0 for d in values])
    return float(np.dot(rates, counts) / gated.size)
