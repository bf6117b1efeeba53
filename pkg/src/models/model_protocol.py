"""Rebel protocol parameters and outputs."""

import math
import warnings
from enum import Enum

from pydantic import BaseModel, Field, model_validator

from src.consts import (
    MEDIAN_EPSILON_MAX,
    MEDIAN_EPSILON_MIN,
    MEDIAN_SLOPE,
    SELF_IMMOLATION_DEFAULT_C,
)
from src.errors import InvalidParameterError, ParameterRangeWarning


class RebelOutput(str, Enum):
    """A rebel's decision at the end of the round."""

    MANY = "many"
    SILENT = "silent"


class ProtocolKind(str, Enum):
    """Available rebel protocols."""

    QUORUM_SENSING = "quorum_sensing"
    MEDIAN = "median"
    SELF_IMMOLATION = "self_immolation"
    BASELINE = "baseline"


class BaselineMessageKind(str, Enum):
    ALWAYS_ZERO = "always_zero"


class BaselineDecideKind(str, Enum):
    ALWAYS_MANY = "always_many"
    NEVER_MANY = "never_many"


class QuorumSensingParams(BaseModel):
    """Quorum-Sensing: emit epsilon, output many iff mean signal >= epsilon / 2."""

    epsilon: float = Field(gt=0.0)


class MedianParams(BaseModel):
    """Median: emit epsilon, output many iff the above-epsilon count exceeds f(eps) * deg."""

    epsilon: float = Field(gt=0.0)

    @model_validator(mode="after")
    def warn_outside_guaranteed_range(self) -> "MedianParams":
        """Warn when epsilon leaves the range the robustness guarantee covers."""
        if not MEDIAN_EPSILON_MIN <= self.epsilon <= MEDIAN_EPSILON_MAX:
            warnings.warn(
                f"Median epsilon {self.epsilon} outside "
                f"[{MEDIAN_EPSILON_MIN}, {MEDIAN_EPSILON_MAX}]",
                ParameterRangeWarning,
                stacklevel=2,
            )
        return self

    @property
    def phi(self) -> float:
        return MEDIAN_SLOPE * self.epsilon

    @property
    def threshold_fraction(self) -> float:
        """f(eps) = 1/2 - 7 eps / 30."""
        return 0.5 - self.phi


class SelfImmolationParams(BaseModel):
    """Self-Immolation: emit huge w.p. q, output many iff huge count > tau * deg / median."""

    q: float = Field(gt=0.0, le=1.0, description="Immolation probability")
    tau: float = Field(gt=0.0, description="Huge-count threshold at median degree")
    c: float | None = Field(default=None, gt=0.0, description="Constant q and tau derive from")

    @classmethod
    def from_network(
        cls, n: int, median_degree: int, c: float = SELF_IMMOLATION_DEFAULT_C
    ) -> "SelfImmolationParams":
        """Derive q = c ln n / median and tau = c ln n / 2.

        Raises:
            InvalidParameterError: If n < 2 or the median degree is 0
        """
        if n < 2 or median_degree < 1:
            msg = f"Need n >= 2 and median degree >= 1, got n={n}, median={median_degree}"
            raise InvalidParameterError(msg)
        scale = c * math.log(n)
        return cls(q=min(1.0, scale / median_degree), tau=scale / 2, c=c)
