"""Network construction, loading and degree statistics."""

from src.graph.builders import build_complete, build_erdos_renyi, build_random_regular
from src.graph.degree_stats import degree_stats, lower_median
from src.graph.edge_list import bfs_subsample, load_edge_list

__all__ = [
    "bfs_subsample",
    "build_complete",
    "build_erdos_renyi",
    "build_random_regular",
    "degree_stats",
    "load_edge_list",
    "lower_median",
]
