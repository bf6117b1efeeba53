"""Network construction from a topology spec."""

import logging

from src.channel.streams import topology_seed
from src.graph.builders import build_complete, build_erdos_renyi, build_random_regular
from src.graph.degree_stats import degree_stats
from src.graph.edge_list import bfs_subsample, load_edge_list
from src.models.model_config import TopologyKind, TopologySpec
from src.models.model_network import Network

logger = logging.getLogger(__name__)


def build_network(spec: TopologySpec, seed: int) -> Network:
    """Build or load the network a topology spec describes.

    Random topologies draw from ``spec.seed`` when set, otherwise from a
    stream of the master seed that no trial uses.
    """
    graph_seed = spec.seed if spec.seed is not None else topology_seed(seed)
    match spec.kind:
        case TopologyKind.COMPLETE:
            network = build_complete(spec.n)
        case TopologyKind.RANDOM_REGULAR:
            network = build_random_regular(spec.n, spec.degree, seed=graph_seed)
        case TopologyKind.ERDOS_RENYI:
            network = build_erdos_renyi(spec.n, spec.p, seed=graph_seed)
        case _:
            network = load_edge_list(spec.path)
            if spec.max_nodes is not None and spec.max_nodes < network.n:
                network = bfs_subsample(network, spec.max_nodes, spec.root)

    stats = degree_stats(network)
    logger.info(
        f"Built {spec.kind.value} network: n={stats.n}, edges={stats.edge_count}, "
        f"median degree={stats.median_degree}"
    )
    return network
