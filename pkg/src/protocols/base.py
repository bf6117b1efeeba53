"""Base contracts for rebel protocols."""

from collections.abc import Sequence
from typing import Protocol

import numpy as np

from src.analysis.gaussian import normal_tail
from src.errors import InvalidInputError
from src.models.model_protocol import ProtocolKind, RebelOutput


class DecisionRule(Protocol):
    """A rebel output rule, also simulated by the reverse police.

    ``decide`` works on one agent's signal list. ``decide_batch`` evaluates
    every agent at once from a flat value array and the owning agent of each
    value, and must agree with ``decide`` agent by agent (agents with no
    values are Silent).
    """

    kind: ProtocolKind

    def decide(self, signals: Sequence[float] | np.ndarray, deg_i: int, median_deg: int) -> RebelOutput: ...

    def decide_batch(
        self, values: np.ndarray, owners: np.ndarray, degrees: np.ndarray, median_degree: int
    ) -> np.ndarray: ...


class RebelProtocol(DecisionRule, Protocol):
    """A complete rebel protocol: messaging rule plus decision rule.

    ``epsilon`` is the signal level a threshold police should test against,
    or None when the protocol has none.
    """

    @property
    def epsilon(self) -> float | None: ...

    def messages(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """Message values of ``count`` rebels, in agent order."""
        ...

    def analytic_message_risk(self, copies: np.ndarray) -> float:
        """Mean optimal-distinguisher advantage over agents observed ``copies`` times each."""
        ...


def as_signals(signals: Sequence[float] | np.ndarray) -> np.ndarray:
    """Signal list as a float array; an empty list is invalid input."""
    arr = np.asarray(signals, dtype=np.float64)
    if arr.size == 0:
        raise InvalidInputError("Decision rules need at least one signal")
    return arr


def output(many: bool) -> RebelOutput:
    return RebelOutput.MANY if many else RebelOutput.SILENT


def segment_sizes(owners: np.ndarray, n: int) -> np.ndarray:
    return np.bincount(owners, minlength=n)


def segment_sums(values: np.ndarray, owners: np.ndarray, n: int) -> np.ndarray:
    return np.bincount(owners, weights=values, minlength=n)


def mean_gaussian_advantage(level: float, copies: np.ndarray) -> float:
    """Average of 2 Phi(level sqrt(k) / 2) - 1 over per-agent copy counts k (0 counts as no risk)."""
    copies = np.asarray(copies, dtype=np.float64)
    if copies.size == 0:
        return 0.0
    advantage = 1.0 - 2.0 * normal_tail(abs(level) * np.sqrt(copies) / 2)
    return float(np.mean(np.where(copies > 0, advantage, 0.0)))
