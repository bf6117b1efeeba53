"""Closed-form tail bounds and the psi sandwich used by the protocol analyses."""

import math
import warnings

from src.analysis.gaussian import normal_tail, pinsker_bound
from src.consts import MEDIAN_EPSILON_MAX, MEDIAN_EPSILON_MIN
from src.errors import InvalidParameterError, ParameterRangeWarning
from src.models.model_analysis import ChernoffBound, PsiBoundCheck


POLYA_SLACK = 1 / 500


def polya_tail(epsilon: float) -> float:
    """Polya-type approximation of psi(eps) for small positive eps."""
    return (1 - math.sqrt(1 - math.exp(-math.sqrt(math.pi / 8) * epsilon**2))) / 2


def psi_bound_check(epsilon: float) -> PsiBoundCheck:
    """Check the linear and approximation sandwiches of psi(eps).

    Lower: psi >= polya - 1/500 > (1 - 2 eps) / 2.
    Upper: psi <= polya + 1/500 < (1 - 2 eps / 3) / 2.
    """
    in_range = MEDIAN_EPSILON_MIN <= epsilon <= MEDIAN_EPSILON_MAX
    if not in_range:
        warnings.warn(
            f"psi bounds are stated for eps in [{MEDIAN_EPSILON_MIN}, {MEDIAN_EPSILON_MAX}], "
            f"got {epsilon}",
            ParameterRangeWarning,
            stacklevel=2,
        )
    psi = float(normal_tail(epsilon))
    approx = polya_tail(epsilon)
    approx_lower, approx_upper = approx - POLYA_SLACK, approx + POLYA_SLACK
    linear_lower = (1 - 2 * epsilon) / 2
    linear_upper = (1 - 2 * epsilon / 3) / 2
    return PsiBoundCheck(
        epsilon=epsilon,
        psi=psi,
        approx_lower=approx_lower,
        approx_upper=approx_upper,
        linear_lower=linear_lower,
        linear_upper=linear_upper,
        lower_ok=approx_lower <= psi and linear_lower < approx_lower,
        upper_ok=psi <= approx_upper and approx_upper < linear_upper,
        in_range=in_range,
    )


def _require(name: str, value: float | None) -> float:
    if value is None or value <= 0:
        raise InvalidParameterError(f"Bound needs a positive '{name}', got {value}")
    return value


def chernoff_reference(
    bound: ChernoffBound | str,
    *,
    epsilon: float | None = None,
    degree: float | None = None,
    q: float | None = None,
) -> float:
    """Evaluate a named closed-form tail bound.

    Args:
        bound: Which bound (enum or its string value)
        epsilon: Protocol epsilon (QS and Median bounds)
        degree: Agent degree Delta
        q: Immolation probability (Self-Immolation bound)

    Returns:
        The bound's value

    Raises:
        InvalidParameterError: For an unknown bound or a missing parameter
    """
    try:
        bound = ChernoffBound(bound)
    except ValueError as e:
        raise InvalidParameterError(f"Unknown bound: {bound!r}") from e

    delta = _require("degree", degree)
    if bound == ChernoffBound.SI_OUTPUT_RISK:
        return math.exp(-3 / 20 * _require("q", q) * delta)

    eps = _require("epsilon", epsilon)
    match bound:
        case ChernoffBound.QS_OUTPUT_RISK:
            return 2 * math.exp(-9 * delta * eps**2 / 200)
        case ChernoffBound.MEDIAN_FEW:
            return math.exp(-0.015 * (1 - 2 * eps) * eps**2 * delta)
        case _:
            return math.exp(-0.036 * eps**2 * delta)


def qs_total_risk_bound(epsilon: float, degree: float) -> float:
    """Proven Quorum-Sensing total-risk bound: eps / sqrt(2) plus the output Chernoff term."""
    return pinsker_bound(epsilon) + chernoff_reference(
        ChernoffBound.QS_OUTPUT_RISK, epsilon=epsilon, degree=degree
    )


def median_total_risk_bound(epsilon: float, degree: float) -> float:
    """Proven Median total-risk bound: eps / sqrt(2) plus the few-regime Chernoff term."""
    return pinsker_bound(epsilon) + chernoff_reference(
        ChernoffBound.MEDIAN_FEW, epsilon=epsilon, degree=degree
    )
