"""Messages, communication modes and transcripts."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from src.consts import HUGE_MESSAGE, HUGE_SIGNAL_THRESHOLD


class CommMode(str, Enum):
    """Communication model."""

    PUBLIC = "public"
    PRIVATE = "private"


@dataclass(frozen=True)
class Message:
    """A single agent's message: a real satisfaction level or the huge sentinel."""

    value: float

    @classmethod
    def zero(cls) -> "Message":
        return cls(0.0)

    @classmethod
    def huge(cls, sign: float = 1.0) -> "Message":
        return cls(sign * HUGE_MESSAGE)

    @property
    def is_huge(self) -> bool:
        return abs(self.value) >= HUGE_SIGNAL_THRESHOLD


@dataclass(frozen=True, eq=False)
class Transcript:
    """Everything observed in one communication round.

    ``received`` is aligned with the network's CSR layout: slot k holds the
    signal agent ``receiver_index[k]`` got from sender ``indices[k]``.
    ``police_values[police_indptr[i]:police_indptr[i + 1]]`` is the police view
    of agent i's outgoing message(s): one entry in public mode, deg_i entries in
    private mode.
    """

    mode: CommMode
    received: np.ndarray
    senders: np.ndarray
    recv_indptr: np.ndarray
    police_values: np.ndarray
    police_indptr: np.ndarray

    def __post_init__(self) -> None:
        for arr in (self.received, self.police_values):
            arr.setflags(write=False)

    @property
    def n(self) -> int:
        return int(self.recv_indptr.size - 1)

    @cached_property
    def police_owner(self) -> np.ndarray:
        """Agent whose message produced each police observation."""
        owners = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.police_indptr))
        owners.setflags(write=False)
        return owners

    def received_signals(self, i: int) -> np.ndarray:
        return self.received[self.recv_indptr[i] : self.recv_indptr[i + 1]]

    def received_from(self, i: int) -> list[tuple[int, float]]:
        """(sender id, signal) pairs received by agent i."""
        lo, hi = self.recv_indptr[i], self.recv_indptr[i + 1]
        return list(zip(self.senders[lo:hi].tolist(), self.received[lo:hi].tolist(), strict=True))

    def police_view(self, i: int) -> np.ndarray:
        return self.police_values[self.police_indptr[i] : self.police_indptr[i + 1]]
