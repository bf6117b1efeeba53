"""Median: emit eps, output many iff the count of signals above eps exceeds f(eps) * deg.

Each neighbor moves the count by at most one, whatever it sends.
"""

from collections.abc import Sequence

import numpy as np

from src.models.model_channel import Message
from src.models.model_protocol import MedianParams, ProtocolKind, QuorumSensingParams, RebelOutput
from src.protocols.base import as_signals, mean_gaussian_advantage, output, segment_sums
from src.protocols.quorum_sensing import qs_message


def median_message(params: MedianParams) -> Message:
    """Same messaging rule as Quorum-Sensing."""
    return qs_message(QuorumSensingParams(epsilon=params.epsilon))


def median_decide(
    signals: Sequence[float] | np.ndarray, deg_i: int, median_deg: int, params: MedianParams
) -> RebelOutput:
    """Many iff deg_i >= median_deg and |{s > eps}| > (1/2 - 7 eps / 30) deg_i, both strict."""
    arr = as_signals(signals)
    if deg_i < median_deg:
        return RebelOutput.SILENT
    above = int(np.count_nonzero(arr > params.epsilon))
    return output(above > params.threshold_fraction * deg_i)


class MedianProtocol:
    """Vectorized Median rule over a whole round.

    Agents without any received signal stay silent, whatever their degree.
    """

    kind = ProtocolKind.MEDIAN

    def __init__(self, params: MedianParams):
        self.params = params

    @property
    def epsilon(self) -> float:
        return self.params.epsilon

    def messages(self, count: int, rng: np.random.Generator) -> np.ndarray:
        return np.full(count, median_message(self.params).value)

    def decide(self, signals: Sequence[float] | np.ndarray, deg_i: int, median_deg: int) -> RebelOutput:
        return median_decide(signals, deg_i, median_deg, self.params)

    def decide_batch(
        self, values: np.ndarray, owners: np.ndarray, degrees: np.ndarray, median_degree: int
    ) -> np.ndarray:
        n = degrees.size
        above = segment_sums((values > self.params.epsilon).astype(np.float64), owners, n)
        has_signals = np.bincount(owners, minlength=n) > 0
        return (degrees >= median_degree) & has_signals & (above > self.params.threshold_fraction * degrees)

    def analytic_message_risk(self, copies: np.ndarray) -> float:
        return mean_gaussian_advantage(self.params.epsilon, copies)
