"""Trivial reference protocols.

Baselines ignore the degree gate: their output is fixed regardless of degree.
"""

from collections.abc import Sequence

import numpy as np

from src.models.model_channel import Message
from src.models.model_protocol import BaselineDecideKind, BaselineMessageKind, ProtocolKind, RebelOutput


def baseline_message(kind: BaselineMessageKind = BaselineMessageKind.ALWAYS_ZERO) -> Message:
    """Message of a baseline rebel, indistinguishable from an obedient agent.

    Args:
        kind: Messaging rule; only always-zero exists

    Returns:
        The zero message
    """
    return Message.zero()


def baseline_decide(kind: BaselineDecideKind) -> RebelOutput:
    """Fixed output of a baseline rebel."""
    return RebelOutput.MANY if kind == BaselineDecideKind.ALWAYS_MANY else RebelOutput.SILENT


class BaselineProtocol:
    """Rebels that look obedient and decide without listening."""

    kind = ProtocolKind.BASELINE

    def __init__(
        self,
        message: BaselineMessageKind = BaselineMessageKind.ALWAYS_ZERO,
        decide: BaselineDecideKind = BaselineDecideKind.NEVER_MANY,
    ):
        self.message_kind = message
        self.decide_kind = decide

    @property
    def epsilon(self) -> float | None:
        return None

    def messages(self, count: int, rng: np.random.Generator) -> np.ndarray:
        return np.full(count, baseline_message(self.message_kind).value)

    def decide(self, signals: Sequence[float] | np.ndarray, deg_i: int, median_deg: int) -> RebelOutput:
        return baseline_decide(self.decide_kind)

    def decide_batch(
        self, values: np.ndarray, owners: np.ndarray, degrees: np.ndarray, median_degree: int
    ) -> np.ndarray:
        return np.full(degrees.size, self.decide_kind == BaselineDecideKind.ALWAYS_MANY)

    def analytic_message_risk(self, copies: np.ndarray) -> float:
        return 0.0
