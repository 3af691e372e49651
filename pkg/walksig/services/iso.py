"""Graph isomorphism by colour refinement and individualization.

Both graphs are refined together as one disjoint union so that colours are
comparable across them. A leaf of the search is a discrete colouring with
one vertex of each graph per colour; its mapping is checked against the
adjacency matrices before it is reported.
"""

import logging
from typing import List, Optional

import numpy as np

from walksig.core.config import DEFAULT_NODE_BUDGET
from walksig.models.graph import Graph
from walksig.models.partition import Partition
from walksig.schemas.report import IsoResult

logger = logging.getLogger(__name__)


def _refine_colors(adjacency: np.ndarray, colors: np.ndarray) -> np.ndarray:
    """Stable colouring refining ``colors``.

    New colours are ranked by (old colour, neighbour colour counts), so cells
    only split, keep their relative order, and the result commutes with any
    relabeling of the vertices.
    """
    n = len(colors)
    colors = np.unique(colors, return_inverse=True)[1].ravel()
    while True:
        count = int(colors.max()) + 1 if n else 0
        onehot = np.zeros((n, count), dtype=np.int64)
        onehot[np.arange(n), colors] = 1
        keys = np.column_stack([colors, adjacency @ onehot])
        distinct, refined = np.unique(keys, axis=0, return_inverse=True)
        refined = refined.ravel()
        if len(distinct) == count:
            return refined
        colors = refined


def refine(g: Graph, initial: Optional[Partition] = None) -> Partition:
    """Coarsest equitable partition refining ``initial`` (the unit partition by default)."""
    if initial is None:
        initial = Partition.unit(g.n)
    if initial.n != g.n:
        raise ValueError(f"partition covers {initial.n} vertices, graph has {g.n}")
    return Partition.from_colors(_refine_colors(g.adjacency_matrix(), initial.colors()))


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, h: Graph, node_budget: int):
        self.n = g.n
        self.g_adjacency = g.adjacency
        self.h_adjacency = h.adjacency
        self.union = g.disjoint_union(h).adjacency_matrix()
        self.node_budget = node_budget
        self.nodes = 0

    def _witness(self, colors: np.ndarray) -> Optional[np.ndarray]:
        n = self.n
        h_vertex = np.empty(n, dtype=np.int64)
        h_vertex[colors[n:]] = np.arange(n)
        mapping = h_vertex[colors[:n]]
        if np.array_equal(self.g_adjacency, self.h_adjacency[np.ix_(mapping, mapping)]):
            return mapping
        return None

    def run(self, colors: np.ndarray) -> Optional[np.ndarray]:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExceeded
        n = self.n
        colors = _refine_colors(self.union, colors)
        count = int(colors.max()) + 1
        g_sizes = np.bincount(colors[:n], minlength=count)
        h_sizes = np.bincount(colors[n:], minlength=count)
        if not np.array_equal(g_sizes, h_sizes):
            return None
        if g_sizes.max() == 1:
            return self._witness(colors)

        splittable = np.flatnonzero(g_sizes > 1)
        target = int(splittable[np.argmin(g_sizes[splittable])])
        v = int(np.flatnonzero(colors[:n] == target)[0])
        for w in np.flatnonzero(colors[n:] == target).tolist():
            branch = colors.copy()
            branch[v] = count
            branch[n + w] = count
            found = self.run(branch)
            if found is not None:
                return found
        return None


def is_isomorphic(g: Graph, h: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> IsoResult:
    """Decide g ~ h. ``witness[v]`` is the vertex of h that v maps to."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees.tolist()) != sorted(h.degrees.tolist()):
        return IsoResult(verdict="non-isomorphic")
    search = _Search(g, h, node_budget)
    try:
        mapping = search.run(np.zeros(2 * g.n, dtype=np.int64))
    except _BudgetExceeded:
        logger.warning("isomorphism search exceeded %d nodes", node_budget)
        return IsoResult(verdict="inconclusive", search_nodes=search.nodes - 1)
    if mapping is None:
        return IsoResult(verdict="non-isomorphic", search_nodes=search.nodes)
    witness: List[int] = mapping.tolist()
    return IsoResult(verdict="isomorphic", witness=witness, search_nodes=search.nodes)
