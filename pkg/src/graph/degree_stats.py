"""Degree statistics of a network.

The median degree is the degree gate of every decision rule. For an even
number of agents the lower median is used, so the gate is deterministic and
weakly inclusive.
"""

import logging

import numpy as np

from src.errors import InvalidParameterError
from src.models.model_network import DegreeStats, Network

logger = logging.getLogger(__name__)


def lower_median(values: np.ndarray) -> int:
    """Element at index floor((len - 1) / 2) of the sorted values.

    Raises:
        InvalidParameterError: If values is empty
    """
    if values.size == 0:
        raise InvalidParameterError("Cannot take the median of an empty sequence")
    k = (values.size - 1) // 2
    return int(np.partition(values, k)[k])


def degree_stats(network: Network) -> DegreeStats:
    """Compute degree statistics.

    Args:
        network: Network with at least one agent

    Returns:
        DegreeStats with the lower-median degree and exact min/max/mean
    """
    degrees = network.degrees
    if degrees.size == 0:
        raise InvalidParameterError("Degree statistics need n >= 1")

    stats = DegreeStats(
        n=network.n,
        edge_count=network.edge_count,
        median_degree=lower_median(degrees),
        min_degree=int(degrees.min()),
        max_degree=int(degrees.max()),
        mean_degree=float(degrees.mean()),
    )
    logger.debug(
        f"Degree stats for {network.name or 'network'}: median={stats.median_degree}, "
        f"min={stats.min_degree}, max={stats.max_degree}, mean={stats.mean_degree:.2f}"
    )
    return stats
