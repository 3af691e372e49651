"""Simple undirected graphs and ordered graph families."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from walksig.core.errors import GraphStructureError


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    The adjacency relation is stored as a read-only symmetric boolean matrix
    with an empty diagonal; instances are immutable and hashable.
    """

    __slots__ = ("_n", "_adjacency", "_degrees")

    def __init__(self, n: int, adjacency: np.ndarray):
        if n < 1:
            raise GraphStructureError(f"a graph needs at least one vertex, got n={n}")
        adjacency = np.array(adjacency, dtype=bool, copy=True)
        if adjacency.shape != (n, n):
            raise GraphStructureError(f"adjacency shape {adjacency.shape} does not match n={n}")
        if adjacency.diagonal().any():
            raise GraphStructureError("self-loops are not allowed")
        if not np.array_equal(adjacency, adjacency.T):
            raise GraphStructureError("adjacency relation is not symmetric")
        adjacency.flags.writeable = False
        degrees = adjacency.sum(axis=1).astype(np.int64)
        degrees.flags.writeable = False
        self._n = n
        self._adjacency = adjacency
        self._degrees = degrees

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adjacency = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphStructureError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise GraphStructureError(f"self-loop at vertex {i}")
            adjacency[i, j] = adjacency[j, i] = True
        return cls(n, adjacency)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, np.zeros((n, n), dtype=bool))

    @classmethod
    def from_networkx(cls, nx_graph) -> "Graph":
        """Convert a networkx graph, relabelling its nodes in sorted order."""
        nodes = sorted(nx_graph.nodes())
        position = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(
            len(nodes), ((position[u], position[v]) for u, v in nx_graph.edges() if u != v)
        )

    def to_networkx(self):
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adjacency

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def m(self) -> int:
        return int(self._degrees.sum()) // 2

    def degree(self, v: int) -> int:
        return int(self._degrees[v])

    def min_degree(self) -> int:
        return int(self._degrees.min())

    def is_regular(self) -> bool:
        return bool((self._degrees == self._degrees[0]).all())

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._adjacency[i, j])

    def neighbors(self, v: int) -> List[int]:
        return np.flatnonzero(self._adjacency[v]).tolist()

    def edges(self) -> List[Tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        rows, cols = np.nonzero(np.triu(self._adjacency, k=1))
        return list(zip(rows.tolist(), cols.tolist()))

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        return self._adjacency.astype(dtype)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Return the graph in which vertex ``v`` becomes ``permutation[v]``."""
        perm = np.asarray(permutation, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self._n)):
            raise GraphStructureError("relabelling is not a permutation of the vertices")
        inverse = np.empty_like(perm)
        inverse[perm] = np.arange(self._n)
        return Graph(self._n, self._adjacency[np.ix_(inverse, inverse)])

    def complement(self) -> "Graph":
        adjacency = ~self._adjacency
        np.fill_diagonal(adjacency, False)
        return Graph(self._n, adjacency)

    def disjoint_union(self, other: "Graph") -> "Graph":
        n = self._n + other.n
        adjacency = np.zeros((n, n), dtype=bool)
        adjacency[: self._n, : self._n] = self._adjacency
        adjacency[self._n :, self._n :] = other.adjacency
        return Graph(n, adjacency)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._adjacency, other._adjacency)

    def __hash__(self) -> int:
        return hash((self._n, np.packbits(self._adjacency).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class GraphFamily:
    """An ordered list of graphs; report indices refer to this order."""

    members: Tuple[Graph, ...] = field(default_factory=tuple)
    source: str = ""

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, index: int) -> Graph:
        return self.members[index]

    def complements(self) -> "GraphFamily":
        return GraphFamily(
            tuple(g.complement() for g in self.members), source=f"{self.source} (complements)"
        )
