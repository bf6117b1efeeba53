"""Quorum-Sensing: emit eps, output many iff the mean received signal is at least eps / 2."""

from collections.abc import Sequence

import numpy as np

from src.models.model_channel import Message
from src.models.model_protocol import ProtocolKind, QuorumSensingParams, RebelOutput
from src.protocols.base import (
    as_signals,
    mean_gaussian_advantage,
    output,
    segment_sizes,
    segment_sums,
)


def qs_message(params: QuorumSensingParams) -> Message:
    """Rebel message: the constant eps.

    Args:
        params: Quorum-Sensing parameters

    Returns:
        Message carrying eps
    """
    return Message(params.epsilon)


def qs_decide(
    signals: Sequence[float] | np.ndarray, deg_i: int, median_deg: int, params: QuorumSensingParams
) -> RebelOutput:
    """Many iff deg_i >= median_deg and mean(signals) >= eps / 2 (inclusive).

    Raises:
        InvalidInputError: If signals is empty
    """
    arr = as_signals(signals)
    if deg_i < median_deg:
        return RebelOutput.SILENT
    return output(float(np.mean(arr)) >= params.epsilon / 2)


class QuorumSensingProtocol:
    """Vectorized Quorum-Sensing over a whole round."""

    kind = ProtocolKind.QUORUM_SENSING

    def __init__(self, params: QuorumSensingParams):
        self.params = params

    @property
    def epsilon(self) -> float:
        return self.params.epsilon

    def messages(self, count: int, rng: np.random.Generator) -> np.ndarray:
        return np.full(count, qs_message(self.params).value)

    def decide(self, signals: Sequence[float] | np.ndarray, deg_i: int, median_deg: int) -> RebelOutput:
        return qs_decide(signals, deg_i, median_deg, self.params)

    def decide_batch(
        self, values: np.ndarray, owners: np.ndarray, degrees: np.ndarray, median_degree: int
    ) -> np.ndarray:
        n = degrees.size
        sizes = segment_sizes(owners, n)
        sums = segment_sums(values, owners, n)
        means = np.divide(sums, sizes, out=np.full(n, -np.inf), where=sizes > 0)
        return (degrees >= median_degree) & (means >= self.params.epsilon / 2)

    def analytic_message_risk(self, copies: np.ndarray) -> float:
        return mean_gaussian_advantage(self.params.epsilon, copies)
