"""Gaussian noise channel under public and private communication.

Every stored signal is the sender's message plus an independent N(0, 1)
draw. Receivers and the police never share a draw.
"""

from collections.abc import Sequence

import numpy as np

from src.consts import NOISE_SCALE
from src.errors import InvalidInputError, InvalidParameterError
from src.models.model_channel import CommMode, Message, Transcript
from src.models.model_network import Network

# Zero noise exists only for exactness tests; configs cannot reach it
_ALLOWED_NOISE_SCALES = (NOISE_SCALE, 0.0)


def message_values(messages: np.ndarray | Sequence[Message]) -> np.ndarray:
    """Message values as a float array."""
    if isinstance(messages, np.ndarray):
        return messages.astype(np.float64, copy=False)
    return np.fromiter((m.value for m in messages), dtype=np.float64, count=len(messages))


def _prepare(
    messages: np.ndarray | Sequence[Message],
    network: Network,
    rng: np.random.Generator,
    police_rng: np.random.Generator | None,
    noise_scale: float,
) -> tuple[np.ndarray, np.random.Generator]:
    if noise_scale not in _ALLOWED_NOISE_SCALES:
        raise InvalidParameterError(f"Noise scale is fixed at {NOISE_SCALE}, got {noise_scale}")
    values = message_values(messages)
    if values.size != network.n:
        raise InvalidInputError(f"Expected {network.n} messages, got {values.size}")
    if police_rng is None:
        police_rng = rng.spawn(1)[0]
    return values, police_rng


def _receive(values: np.ndarray, network: Network, rng: np.random.Generator, scale: float) -> np.ndarray:
    noise = rng.standard_normal(network.indices.size)
    return values[network.indices] + scale * noise


def emit_public(
    messages: np.ndarray | Sequence[Message],
    network: Network,
    rng: np.random.Generator,
    police_rng: np.random.Generator | None = None,
    noise_scale: float = NOISE_SCALE,
) -> Transcript:
    """Each agent announces once; every neighbor and the police hear an independent noisy copy.

    Args:
        messages: One message (or value) per agent
        network: Communication network
        rng: Receiver-noise stream
        police_rng: Police-noise stream; spawned from ``rng`` when omitted
        noise_scale: Noise standard deviation, 1 (or 0 in tests)

    Returns:
        Transcript with one police observation per agent
    """
    values, police_rng = _prepare(messages, network, rng, police_rng, noise_scale)
    received = _receive(values, network, rng, noise_scale)
    police = values + noise_scale * police_rng.standard_normal(network.n)
    return Transcript(
        mode=CommMode.PUBLIC,
        received=received,
        senders=network.indices,
        recv_indptr=network.indptr,
        police_values=police,
        police_indptr=np.arange(network.n + 1, dtype=np.int64),
    )


def emit_private_uniform(
    messages: np.ndarray | Sequence[Message],
    network: Network,
    rng: np.random.Generator,
    police_rng: np.random.Generator | None = None,
    noise_scale: float = NOISE_SCALE,
) -> Transcript:
    """Each agent sends one copy of its message per neighbor; the police taps every link.

    The police view of agent i holds deg_i copies of m_i, each noised
    independently of the copy its neighbor received.
    """
    values, police_rng = _prepare(messages, network, rng, police_rng, noise_scale)
    received = _receive(values, network, rng, noise_scale)
    # Row i of the CSR layout lists the links i -> j, so sender-ordered copies share indptr
    police = values[network.receiver_index] + noise_scale * police_rng.standard_normal(
        network.indices.size
    )
    return Transcript(
        mode=CommMode.PRIVATE,
        received=received,
        senders=network.indices,
        recv_indptr=network.indptr,
        police_values=police,
        police_indptr=network.indptr,
    )


def emit(
    mode: CommMode,
    messages: np.ndarray | Sequence[Message],
    network: Network,
    rng: np.random.Generator,
    police_rng: np.random.Generator | None = None,
) -> Transcript:
    """Dispatch on communication mode."""
    if mode == CommMode.PUBLIC:
        return emit_public(messages, network, rng, police_rng)
    return emit_private_uniform(messages, network, rng, police_rng)
