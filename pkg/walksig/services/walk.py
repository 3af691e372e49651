"""Walk matrices of a graph: the arc space of D_G, U(G), T(G), their exact
powers and the support / positive-support operators.

U(G) is the step operator of the coined walk with Grover coins:
``U[(i,j),(k,l)] = 2/d(j) - [i = l]`` when ``j = k`` and 0 otherwise.
Everything here is exact; signs and zeros are decided on integers.
"""

import logging
from dataclasses import dataclass, field
from math import lcm
from typing import List, Tuple

import networkx as nx
import numpy as np

from walksig.core.errors import GraphStructureError
from walksig.models.graph import Graph
from walksig.models.matrices import ArcSpace, BinaryMatrix, RationalMatrix

logger = logging.getLogger(__name__)

MIN_WALK_DEGREE = 3


def arc_space(g: Graph) -> ArcSpace:
    """Both orientations of every edge, sorted by (tail, head)."""
    if g.m == 0:
        raise GraphStructureError("an edgeless graph has no arcs")
    rows, cols = np.nonzero(g.adjacency)
    return ArcSpace(zip(rows.tolist(), cols.tolist()))


def _require_positive_degree(g: Graph) -> None:
    isolated = np.flatnonzero(g.degrees == 0)
    if isolated.size:
        raise GraphStructureError(
            f"isolated vertices {isolated.tolist()} do not contribute to U(G); remove them first"
        )


def require_min_degree(g: Graph, minimum: int = MIN_WALK_DEGREE) -> None:
    if g.min_degree() < minimum:
        raise GraphStructureError(
            f"minimum degree {g.min_degree()} is below the required {minimum}"
        )


def build_U(g: Graph) -> RationalMatrix:
    """The 2m x 2m matrix U(G) over ``arc_space(g)``, held as ``N / L`` with L = lcm(degrees)."""
    _require_positive_degree(g)
    space = arc_space(g)
    degrees = g.degrees.tolist()
    scale = lcm(*degrees)
    numerators = np.zeros((len(space), len(space)), dtype=np.int64)
    for row, (i, j) in enumerate(space):
        coin = 2 * scale // degrees[j]
        for l in g.neighbors(j):
            numerators[row, space.index((j, l))] = coin - (scale if l == i else 0)
    return RationalMatrix(numerators, scale)


def build_T(g: Graph) -> RationalMatrix:
    """``T[i,j] = 1/d(j)`` on edges; isolated vertices give zero rows and columns."""
    degrees = g.degrees
    positive = [int(d) for d in degrees if d > 0]
    scale = lcm(*positive) if positive else 1
    column_weight = np.array([scale // int(d) if d > 0 else 0 for d in degrees], dtype=np.int64)
    numerators = g.adjacency_matrix() * column_weight[None, :]
    return RationalMatrix(numerators, scale)


def power(matrix: RationalMatrix, p: int) -> RationalMatrix:
    """Exact p-th power by repeated squaring."""
    if p < 1:
        raise ValueError(f"power must be a positive integer, got {p}")
    result = None
    base = matrix
    while p:
        if p & 1:
            result = base if result is None else result @ base
        p >>= 1
        if p:
            base = base @ base
    return result


def support(matrix: RationalMatrix) -> BinaryMatrix:
    return BinaryMatrix(matrix.nonzero_mask())


def positive_support(matrix: RationalMatrix) -> BinaryMatrix:
    return BinaryMatrix(matrix.positive_mask())


def s_plus_power(g: Graph, p: int) -> BinaryMatrix:
    """S+(U(G)^p); requires minimum degree 3."""
    require_min_degree(g)
    return positive_support(power(build_U(g), p))


def adjacency_power_support(g: Graph, p: int) -> BinaryMatrix:
    """Support of M(G)^p: 1 where some walk of length p joins i and j."""
    return support(power(RationalMatrix(g.adjacency_matrix(), 1), p))


def line_digraph_adjacency(g: Graph) -> BinaryMatrix:
    """Adjacency of the line digraph of D_G: ``(i,j) -> (k,l)`` iff ``j = k``."""
    space = arc_space(g)
    return BinaryMatrix(space.heads[:, None] == space.tails[None, :])


@dataclass(frozen=True)
class DiameterSupportObservation:
    """Whether support(M^diam) is the all-ones matrix for a connected graph."""

    connected: bool
    bipartite: bool
    diameter: int
    zero_pairs: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def claim_applies(self) -> bool:
        return self.connected and not self.bipartite

    @property
    def full_support(self) -> bool:
        return not self.zero_pairs


def full_support_at_diameter(g: Graph) -> DiameterSupportObservation:
    nx_graph = g.to_networkx()
    connected = nx.is_connected(nx_graph)
    bipartite = nx.is_bipartite(nx_graph)
    if not connected:
        return DiameterSupportObservation(connected=False, bipartite=bipartite, diameter=-1)
    diameter = nx.diameter(nx_graph) if g.n > 1 else 0
    if diameter == 0:
        return DiameterSupportObservation(connected=True, bipartite=bipartite, diameter=0)
    reached = adjacency_power_support(g, diameter)
    rows, cols = np.nonzero(reached.data == 0)
    zero_pairs = list(zip(rows.tolist(), cols.tolist()))
    if zero_pairs:
        logger.debug("support(M^%d) misses %d pairs", diameter, len(zero_pairs))
    return DiameterSupportObservation(
        connected=True, bipartite=bipartite, diameter=diameter, zero_pairs=zero_pairs
    )
