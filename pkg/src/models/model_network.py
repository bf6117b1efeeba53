"""Network and degree-statistics models."""

import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Network:
    """Immutable undirected simple graph in compressed sparse row form.

    Neighbors of agent i are ``indices[indptr[i]:indptr[i + 1]]``, sorted
    ascending. Every edge appears once in each endpoint's row. Arrays are
    marked read-only, so a Network can be shared between worker threads.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    node_ids: np.ndarray | None = None  # Original ids for loaded graphs (dense id -> file id)
    name: str = field(default="")

    def __post_init__(self) -> None:
        for arr in (self.indptr, self.indices, self.node_ids):
            if arr is not None:
                arr.setflags(write=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: np.ndarray,
        node_ids: np.ndarray | None = None,
        name: str = "",
    ) -> "Network":
        """Build a network from an (m, 2) array of dense-id endpoint pairs.

        Self-loops are dropped and duplicate or reversed pairs collapse to one
        undirected edge.
        """
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        keep = lo != hi
        if not keep.all():
            logger.debug(f"Dropping {int((~keep).sum())} self-loops")
        keys = np.unique(lo[keep] * n + hi[keep])
        lo, hi = keys // n, keys % n

        rows = np.concatenate([lo, hi])
        cols = np.concatenate([hi, lo])
        order = np.lexsort((cols, rows))
        rows, cols = rows[order], cols[order]

        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
        return cls(n=n, indptr=indptr, indices=cols.astype(np.int64), node_ids=node_ids, name=name)

    @cached_property
    def degrees(self) -> np.ndarray:
        """Per-agent degree."""
        degrees = np.diff(self.indptr)
        degrees.setflags(write=False)
        return degrees

    @cached_property
    def receiver_index(self) -> np.ndarray:
        """Row owner of every CSR slot (the receiving agent of that directed edge)."""
        owners = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        owners.setflags(write=False)
        return owners

    @property
    def edge_count(self) -> int:
        return int(self.indices.size // 2)

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def adjacency(self) -> list[list[int]]:
        """Per-agent sorted neighbor lists as plain Python lists."""
        return [self.neighbors(i).tolist() for i in range(self.n)]

    def edges(self) -> np.ndarray:
        """Undirected edges as an (m, 2) array with the smaller id first."""
        mask = self.receiver_index < self.indices
        return np.column_stack([self.receiver_index[mask], self.indices[mask]])


class DegreeStats(BaseModel):
    """Degree statistics of a network.

    ``median_degree`` is the lower median of the sorted degree sequence and is
    the degree gate every decision rule applies.
    """

    n: int = Field(ge=1, description="Agent count")
    edge_count: int = Field(ge=0, description="Undirected edge count")
    median_degree: int = Field(ge=0, description="Lower median degree")
    min_degree: int = Field(ge=0)
    max_degree: int = Field(ge=0)
    mean_degree: float = Field(ge=0.0)
