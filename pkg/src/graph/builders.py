"""Synthetic network constructors.

All constructors are deterministic given their seed and return an immutable
Network.
"""

import logging

import numpy as np

from src.consts import RANDOM_REGULAR_MAX_RETRIES, RANDOM_REGULAR_MAX_STALLS
from src.errors import ConstructionError, InvalidParameterError
from src.models.model_network import Network

logger = logging.getLogger(__name__)


def build_complete(n: int) -> Network:
    """Complete graph K_n.

    Raises:
        InvalidParameterError: If n < 2
    """
    if n < 2:
        raise InvalidParameterError(f"Complete network needs n >= 2, got {n}")
    ids = np.arange(n, dtype=np.int64)
    indices = np.broadcast_to(ids, (n, n))[~np.eye(n, dtype=bool)]
    indptr = np.arange(n + 1, dtype=np.int64) * (n - 1)
    return Network(n=n, indptr=indptr, indices=indices.copy(), name=f"complete-{n}")


def _try_pairing(n: int, d: int, rng: np.random.Generator) -> np.ndarray | None:
    """One configuration-model attempt.

    Stubs are shuffled and paired; pairs that would form a self-loop or a
    repeated edge are rejected and their stubs re-paired in the next round.
    Returns None when re-pairing stops making progress.
    """
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    accepted = np.empty(0, dtype=np.int64)
    stalls = 0
    best = stubs.size

    while stubs.size:
        rng.shuffle(stubs)
        pairs = stubs.reshape(-1, 2)
        lo = pairs.min(axis=1)
        hi = pairs.max(axis=1)
        keys = lo * n + hi

        valid = lo != hi
        _, first = np.unique(keys, return_index=True)
        is_first = np.zeros(keys.size, dtype=bool)
        is_first[first] = True
        valid &= is_first
        valid &= ~np.isin(keys, accepted, assume_unique=False)

        accepted = np.union1d(accepted, keys[valid])
        stubs = pairs[~valid].ravel()

        if stubs.size < best:
            best = stubs.size
            stalls = 0
        else:
            stalls += 1
            if stalls >= RANDOM_REGULAR_MAX_STALLS:
                return None

    return np.column_stack([accepted // n, accepted % n])


def build_random_regular(
    n: int,
    d: int,
    seed: int | np.random.SeedSequence | None = None,
    max_retries: int = RANDOM_REGULAR_MAX_RETRIES,
) -> Network:
    """Uniform-ish random d-regular simple graph via the pairing model.

    Args:
        n: Agent count
        d: Common degree
        seed: Integer seed or SeedSequence; same seed gives the same graph
        max_retries: Attempts before giving up

    Raises:
        InvalidParameterError: If n * d is odd or d >= n
        ConstructionError: If every attempt stalls
    """
    if n < 1 or d < 0:
        raise InvalidParameterError(f"Need n >= 1 and d >= 0, got n={n}, d={d}")
    if (n * d) % 2 != 0:
        raise InvalidParameterError(f"n * d must be even, got n={n}, d={d}")
    if d >= n:
        raise InvalidParameterError(f"Need d < n, got n={n}, d={d}")

    rng = np.random.default_rng(seed)
    if d == 0:
        return Network.from_edges(n, np.empty((0, 2), dtype=np.int64), name=f"regular-{n}-{d}")

    for attempt in range(1, max_retries + 1):
        edges = _try_pairing(n, d, rng)
        if edges is not None:
            logger.debug(f"Random {d}-regular graph on {n} nodes built in {attempt} attempt(s)")
            return Network.from_edges(n, edges, name=f"regular-{n}-{d}")
        logger.debug(f"Pairing attempt {attempt} stalled, retrying")

    raise ConstructionError(f"Random {d}-regular graph on {n} nodes failed after {max_retries} attempts")


def build_erdos_renyi(n: int, p: float, seed: int | np.random.SeedSequence | None = None) -> Network:
    """G(n, p): every unordered pair is an edge independently with probability p.

    Edges are generated row by row, so memory stays O(n + m).

    Raises:
        InvalidParameterError: If p is outside [0, 1] or n < 1
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"p must be in [0, 1], got {p}")
    if n < 1:
        raise InvalidParameterError(f"Need n >= 1, got {n}")

    rng = np.random.default_rng(seed)
    chunks = []
    for i in range(n - 1):
        hits = np.flatnonzero(rng.random(n - 1 - i) < p)
        if hits.size:
            chunks.append(np.column_stack([np.full(hits.size, i, dtype=np.int64), hits + i + 1]))
    edges = np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)
    return Network.from_edges(n, edges, name=f"gnp-{n}-{p:g}")
