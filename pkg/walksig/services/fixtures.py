"""Builtin graphs and seeded random families for the verification suite."""

import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import networkx as nx
import numpy as np

from walksig.core.config import RANDOM_GRAPH_COUNT, RANDOM_REGULAR_COUNT, RANDOM_SEED
from walksig.models.graph import Graph, GraphFamily

logger = logging.getLogger(__name__)


def rook_graph(q: int) -> Graph:
    """q x q rook's graph: cells sharing a row or a column."""
    edges = [
        (i, j)
        for i in range(q * q)
        for j in range(i + 1, q * q)
        if i // q == j // q or i % q == j % q
    ]
    return Graph.from_edges(q * q, edges)


def _cayley_graph(order: Sequence[int], connection: Iterable[Sequence[int]]) -> Graph:
    """Cayley graph on Z_{order[0]} x ... with a symmetric connection set."""
    shape = tuple(order)
    steps = np.array(list(connection), dtype=np.int64)
    points = np.array(list(np.ndindex(*shape)), dtype=np.int64)
    index = {tuple(p): k for k, p in enumerate(points.tolist())}
    edges = set()
    for k, point in enumerate(points):
        for step in steps:
            neighbour = tuple(((point + step) % np.array(shape)).tolist())
            other = index[neighbour]
            edges.add((min(k, other), max(k, other)))
    return Graph.from_edges(len(points), sorted(edges))


def shrikhande_graph() -> Graph:
    """The srg(16,6,2,2) that is not the 4 x 4 rook's graph."""
    return _cayley_graph(
        (4, 4), [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    )


def clebsch_graph() -> Graph:
    """srg(16,5,0,2): Z_2^4 with steps e1..e4 and 1111."""
    return _cayley_graph(
        (2, 2, 2, 2),
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)],
    )


def paley_graph(q: int) -> Graph:
    """Paley graph on a prime q = 1 (mod 4)."""
    residues = {(x * x) % q for x in range(1, q)}
    edges = [(i, j) for i in range(q) for j in range(i + 1, q) if (j - i) % q in residues]
    return Graph.from_edges(q, edges)


def c4_plus_point() -> Graph:
    """C4 with an isolated fifth vertex; adjacency-cospectral with K_{1,4}."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)])


BUILTIN_GRAPHS: Dict[str, Callable[[], Graph]] = {
    "k4": lambda: Graph.from_networkx(nx.complete_graph(4)),
    "c5": lambda: Graph.from_networkx(nx.cycle_graph(5)),
    "star3": lambda: Graph.from_networkx(nx.star_graph(3)),
    "c4-plus-point": c4_plus_point,
    "star4": lambda: Graph.from_networkx(nx.star_graph(4)),
    "petersen": lambda: Graph.from_networkx(nx.petersen_graph()),
    "clebsch": clebsch_graph,
    "rook-4x4": lambda: rook_graph(4),
    "shrikhande": shrikhande_graph,
    "rook-4x4-complement": lambda: rook_graph(4).complement(),
    "shrikhande-complement": lambda: shrikhande_graph().complement(),
    "rook-3x3": lambda: rook_graph(3),
    "paley-13": lambda: paley_graph(13),
    "cube": lambda: Graph.from_networkx(nx.hypercube_graph(3)),
    "k33": lambda: Graph.from_networkx(nx.complete_bipartite_graph(3, 3)),
}

# Every builtin strongly regular graph with degree >= 3.
SRG_FIXTURES = (
    "petersen",
    "clebsch",
    "rook-4x4",
    "shrikhande",
    "rook-4x4-complement",
    "shrikhande-complement",
    "rook-3x3",
    "paley-13",
)

# Families of pairwise non-isomorphic SRGs sharing parameters.
SRG_FAMILIES = {
    "(16,6,2,2)": ("rook-4x4", "shrikhande"),
    "(16,9,4,6)": ("rook-4x4-complement", "shrikhande-complement"),
}


def builtin(name: str) -> Graph:
    try:
        factory = BUILTIN_GRAPHS[name]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_GRAPHS))
        raise KeyError(f"unknown builtin graph {name!r}; known: {known}") from None
    return factory()


def builtin_family(names: Sequence[str], source: Optional[str] = None) -> GraphFamily:
    return GraphFamily(tuple(builtin(name) for name in names), source=source or ",".join(names))


def random_min_degree_graphs(
    count: int = RANDOM_GRAPH_COUNT,
    seed: int = RANDOM_SEED,
    max_vertices: int = 20,
    min_degree: int = 3,
) -> List[Graph]:
    """Seeded G(n, p) samples with n <= max_vertices and minimum degree >= min_degree."""
    rng = np.random.default_rng(seed)
    graphs: List[Graph] = []
    attempts = 0
    while len(graphs) < count:
        attempts += 1
        n = int(rng.integers(min_degree + 2, max_vertices + 1))
        p = float(rng.uniform(0.35, 0.8))
        sample = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
        if min(dict(sample.degree()).values()) >= min_degree:
            graphs.append(Graph.from_networkx(sample))
    logger.debug("drew %d random graphs in %d attempts", count, attempts)
    return graphs


def random_regular_graphs(
    count: int = RANDOM_REGULAR_COUNT,
    seed: int = RANDOM_SEED,
    degrees: Sequence[int] = (3, 4, 5),
    max_vertices: int = 20,
) -> List[Graph]:
    """Seeded random k-regular graphs, cycling through ``degrees``."""
    rng = np.random.default_rng(seed)
    graphs: List[Graph] = []
    for position in range(count):
        k = degrees[position % len(degrees)]
        sizes = [n for n in range(k + 1, max_vertices + 1) if (n * k) % 2 == 0]
        n = int(rng.choice(sizes))
        sample = nx.random_regular_graph(k, n, seed=int(rng.integers(2**31)))
        graphs.append(Graph.from_networkx(sample))
    return graphs
