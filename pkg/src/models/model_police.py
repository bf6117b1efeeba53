"""Police strategy models."""

from dataclasses import dataclass
from enum import Enum


class PoliceKind(str, Enum):
    """Available arrest strategies."""

    REVERSE = "reverse"
    NP_THRESHOLD = "np_threshold"
    NO_ARREST = "no_arrest"


@dataclass(frozen=True)
class ArrestDecision:
    """The police's verdict on a single agent."""

    arrested: bool

    def __bool__(self) -> bool:
        return self.arrested
