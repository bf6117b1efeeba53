"""Self-Immolation: a few rebels shout a huge message, the rest count how many they hear."""

from collections.abc import Sequence

import numpy as np

from src.consts import HUGE_MESSAGE, HUGE_SIGNAL_THRESHOLD
from src.errors import InvalidInputError
from src.models.model_channel import Message
from src.models.model_protocol import ProtocolKind, RebelOutput, SelfImmolationParams
from src.protocols.base import as_signals, mean_gaussian_advantage, output, segment_sums


def si_message(params: SelfImmolationParams, rng: np.random.Generator) -> Message:
    """Huge with probability q, else 0. Draws exactly one uniform from ``rng``."""
    return Message.huge() if rng.random() < params.q else Message.zero()


def _huge_threshold(params: SelfImmolationParams, deg_i: int | np.ndarray, median_deg: int):
    if median_deg < 1:
        raise InvalidInputError(f"Self-Immolation needs a median degree >= 1, got {median_deg}")
    return params.tau * deg_i / median_deg


def si_decide(
    signals: Sequence[float] | np.ndarray, deg_i: int, median_deg: int, params: SelfImmolationParams
) -> RebelOutput:
    """Many iff deg_i >= median_deg and the count of signals >= 1e3 exceeds tau * deg_i / median_deg."""
    arr = as_signals(signals)
    if deg_i < median_deg:
        return RebelOutput.SILENT
    huge = int(np.count_nonzero(arr >= HUGE_SIGNAL_THRESHOLD))
    return output(huge > _huge_threshold(params, deg_i, median_deg))


class SelfImmolationProtocol:
    kind = ProtocolKind.SELF_IMMOLATION

    def __init__(self, params: SelfImmolationParams):
        self.params = params

    @property
    def epsilon(self) -> float | None:
        return None

    def messages(self, count: int, rng: np.random.Generator) -> np.ndarray:
        return np.where(rng.random(count) < self.params.q, HUGE_MESSAGE, 0.0)

    def decide(self, signals: Sequence[float] | np.ndarray, deg_i: int, median_deg: int) -> RebelOutput:
        return si_decide(signals, deg_i, median_deg, self.params)

    def decide_batch(
        self, values: np.ndarray, owners: np.ndarray, degrees: np.ndarray, median_degree: int
    ) -> np.ndarray:
        n = degrees.size
        huge = segment_sums((values >= HUGE_SIGNAL_THRESHOLD).astype(np.float64), owners, n)
        return (degrees >= median_degree) & (huge > _huge_threshold(self.params, degrees, median_degree))

    def analytic_message_risk(self, copies: np.ndarray) -> float:
        """Only immolating rebels are exposed: q times the advantage of a huge mean shift."""
        return self.params.q * mean_gaussian_advantage(HUGE_MESSAGE, copies)
