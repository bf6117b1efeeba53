"""Edge-list loading and breadth-first subsampling of large social graphs.

File format: one edge per line as two whitespace-separated non-negative
integer ids. Lines starting with '#' are comments, blank lines are ignored,
and a line holding a single id declares a (possibly isolated) node.
"""

import logging
from collections import deque
from pathlib import Path

import numpy as np

from src.errors import EdgeListParseError, InvalidParameterError
from src.models.model_network import Network

logger = logging.getLogger(__name__)


def _parse_id(token: str, path: Path, line_number: int, line: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise EdgeListParseError(path, line_number, line, f"non-integer id {token!r}") from None
    if value < 0:
        raise EdgeListParseError(path, line_number, line, f"negative id {value}")
    return value


def load_edge_list(path: Path | str) -> Network:
    """Load an undirected network from an edge-list file.

    Ids are remapped to a dense 0..n-1 range in ascending order of file id;
    ``Network.node_ids`` keeps the file ids. Duplicate and reversed edges
    collapse to one edge, so the result does not depend on line order.

    Raises:
        FileNotFoundError: If the file does not exist
        EdgeListParseError: On a malformed line or invalid UTF-8, with its line number
    """
    path = Path(path)
    sources: list[int] = []
    targets: list[int] = []
    declared: set[int] = set()

    with path.open("rb") as f:
        for line_number, raw_line in enumerate(f, 1):
            try:
                line = raw_line.decode("utf-8", errors="strict")
            except UnicodeDecodeError as e:
                text = raw_line.decode("utf-8", errors="replace")
                raise EdgeListParseError(path, line_number, text, f"not valid UTF-8 ({e.reason})") from e
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if len(tokens) == 1:
                declared.add(_parse_id(tokens[0], path, line_number, line))
            elif len(tokens) == 2:
                sources.append(_parse_id(tokens[0], path, line_number, line))
                targets.append(_parse_id(tokens[1], path, line_number, line))
            else:
                raise EdgeListParseError(
                    path, line_number, line, f"expected 1 or 2 ids, found {len(tokens)}"
                )

    raw = np.column_stack([np.asarray(sources, dtype=np.int64), np.asarray(targets, dtype=np.int64)])
    node_ids = np.union1d(raw.ravel(), np.fromiter(declared, dtype=np.int64, count=len(declared)))
    dense = np.searchsorted(node_ids, raw)

    network = Network.from_edges(node_ids.size, dense, node_ids=node_ids, name=path.stem)
    logger.info(
        f"Loaded {path}: {network.n} nodes, {network.edge_count} edges "
        f"({len(sources)} edge lines)"
    )
    return network


def bfs_subsample(network: Network, max_nodes: int, root: int | None = None) -> Network:
    """Induced subgraph on the first ``max_nodes`` agents reached by breadth-first search.

    Args:
        network: Source network
        max_nodes: Size of the sample
        root: Original (file) id of the start node; defaults to dense id 0

    Raises:
        InvalidParameterError: If max_nodes < 1 or root is unknown
    """
    if max_nodes < 1:
        raise InvalidParameterError(f"max_nodes must be >= 1, got {max_nodes}")
    if max_nodes >= network.n:
        return network

    start = 0
    if root is not None:
        ids = network.node_ids if network.node_ids is not None else np.arange(network.n)
        pos = int(np.searchsorted(ids, root))
        if pos >= ids.size or ids[pos] != root:
            raise InvalidParameterError(f"BFS root {root} is not a node of {network.name!r}")
        start = pos

    seen = np.zeros(network.n, dtype=bool)
    order: list[int] = []
    queue = deque([start])
    seen[start] = True
    # Restart from the lowest unseen id when a component is exhausted
    next_unseen = 0
    while len(order) < max_nodes:
        if not queue:
            while seen[next_unseen]:
                next_unseen += 1
            seen[next_unseen] = True
            queue.append(next_unseen)
        u = queue.popleft()
        order.append(u)
        for v in network.neighbors(u):
            if not seen[v]:
                seen[v] = True
                queue.append(int(v))

    kept = np.sort(np.asarray(order, dtype=np.int64))
    remap = np.full(network.n, -1, dtype=np.int64)
    remap[kept] = np.arange(kept.size)
    edges = network.edges()
    inside = (remap[edges[:, 0]] >= 0) & (remap[edges[:, 1]] >= 0)
    sub_edges = remap[edges[inside]]
    node_ids = network.node_ids[kept] if network.node_ids is not None else kept

    sample = Network.from_edges(
        kept.size, sub_edges, node_ids=node_ids, name=f"{network.name}-bfs{max_nodes}"
    )
    logger.info(
        f"BFS sample of {network.name}: {sample.n} nodes, {sample.edge_count} edges "
        f"from root {int(node_ids[np.searchsorted(kept, start)])}"
    )
    return sample
