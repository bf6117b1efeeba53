"""Arrest strategies.

Each police looks only at agent u's outgoing signals: one noisy copy in public
mode, deg_u copies in private mode.
"""

from collections.abc import Sequence
from typing import Protocol

import numpy as np

from src.analysis.gaussian import tv_gauss
from src.errors import InvalidConfigurationError, InvalidInputError, InvalidParameterError
from src.models.model_analysis import ArrestCounts
from src.models.model_channel import Transcript
from src.models.model_police import ArrestDecision, PoliceKind
from src.models.model_population import RoleAssignment
from src.models.model_protocol import ProtocolKind, RebelOutput
from src.protocols.base import DecisionRule


class Police(Protocol):
    """Arrest decision for every agent of a round."""

    kind: PoliceKind

    @property
    def label(self) -> str: ...

    def arrest_batch(self, transcript: Transcript, degrees: np.ndarray, median_degree: int) -> np.ndarray: ...


def reverse_police(
    police_view_u: Sequence[float] | np.ndarray,
    deg_u: int,
    median_deg: int,
    decider: DecisionRule,
    protocol: ProtocolKind | None = None,
) -> ArrestDecision:
    """Arrest u iff the rebels' own decision rule outputs many on u's outgoing signals.

    The degree gate uses deg_u, not the length of the view.

    Args:
        police_view_u: Noisy copies of u's message seen by the police
        deg_u: Degree of u
        median_deg: Network median degree
        decider: Decision rule of the rebel protocol in use
        protocol: Protocol actually run by the rebels, when known

    Raises:
        InvalidConfigurationError: If the decider belongs to another protocol
    """
    if not hasattr(decider, "decide"):
        raise InvalidConfigurationError(f"{decider!r} is not a decision rule")
    if protocol is not None and decider.kind != protocol:
        raise InvalidConfigurationError(
            f"Reverse police simulates {decider.kind.value} but rebels run {protocol.value}"
        )
    return ArrestDecision(decider.decide(police_view_u, deg_u, median_deg) == RebelOutput.MANY)


def np_threshold_police(police_view_u: Sequence[float] | np.ndarray, epsilon: float) -> ArrestDecision:
    """Likelihood-ratio test of N(0, 1) against N(eps, 1): arrest iff mean >= eps / 2.

    Raises:
        InvalidParameterError: If epsilon is not positive
        InvalidInputError: If the view is empty
    """
    if epsilon <= 0:
        raise InvalidParameterError(f"epsilon must be positive, got {epsilon}")
    view = np.asarray(police_view_u, dtype=np.float64)
    if view.size == 0:
        raise InvalidInputError("Threshold police needs at least one observation")
    return ArrestDecision(float(np.mean(view)) >= epsilon / 2)


def analytic_message_risk(epsilon: float, copies: int) -> float:
    """Optimal relative message risk 2 Phi(eps sqrt(k) / 2) - 1 against any police."""
    if epsilon <= 0:
        raise InvalidParameterError(f"epsilon must be positive, got {epsilon}")
    return tv_gauss(epsilon, copies)


def no_arrest() -> ArrestDecision:
    return ArrestDecision(False)


class ReversePolice:
    """Confronts each agent with the rebels' own detection rule."""

    kind = PoliceKind.REVERSE

    def __init__(self, decider: DecisionRule):
        self.decider = decider

    @property
    def label(self) -> str:
        return self.kind.value

    def arrest_batch(self, transcript: Transcript, degrees: np.ndarray, median_degree: int) -> np.ndarray:
        return self.decider.decide_batch(
            transcript.police_values, transcript.police_owner, degrees, median_degree
        )


class NpThresholdPolice:
    """Likelihood-ratio police: arrest iff the mean of u's tapped copies is at least eps / 2.

    Args:
        epsilon: Rebel message the test is tuned to

    Raises:
        InvalidParameterError: If epsilon is not positive
    """

    kind = PoliceKind.NP_THRESHOLD

    def __init__(self, epsilon: float):
        if epsilon <= 0:
            raise InvalidParameterError(f"epsilon must be positive, got {epsilon}")
        self.epsilon = epsilon

    @property
    def label(self) -> str:
        return self.kind.value

    def arrest_batch(self, transcript: Transcript, degrees: np.ndarray, median_degree: int) -> np.ndarray:
        n = degrees.size
        sizes = np.bincount(transcript.police_owner, minlength=n)
        sums = np.bincount(transcript.police_owner, weights=transcript.police_values, minlength=n)
        means = np.divide(sums, sizes, out=np.full(n, -np.inf), where=sizes > 0)
        return means >= self.epsilon / 2


class NoArrestPolice:
    kind = PoliceKind.NO_ARREST

    @property
    def label(self) -> str:
        return self.kind.value

    def arrest_batch(self, transcript: Transcript, degrees: np.ndarray, median_degree: int) -> np.ndarray:
        return np.zeros(degrees.size, dtype=bool)


def tally_arrests(arrested: np.ndarray, roles: RoleAssignment) -> ArrestCounts:
    """Arrest counts of rebels and obedient agents; undercover agents are in neither pool."""
    rebels = roles.rebel_mask
    obedient = roles.obedient_mask
    return ArrestCounts(
        rebels=int(rebels.sum()),
        rebel_arrests=int((arrested & rebels).sum()),
        obedient=int(obedient.sum()),
        obedient_arrests=int((arrested & obedient).sum()),
    )
