"""Tests for colour refinement and the isomorphism certifier."""

import networkx as nx
import numpy as np
import pytest

from walksig.models.graph import Graph
from walksig.models.partition import Partition
from walksig.services import fixtures
from walksig.services.iso import is_isomorphic, refine


def assert_witness(g: Graph, h: Graph, witness) -> None:
    mapping = np.asarray(witness)
    assert sorted(mapping.tolist()) == list(range(g.n))
    assert np.array_equal(g.adjacency, h.adjacency[np.ix_(mapping, mapping)])


def test_refine_path(path3):
    assert refine(path3).cells == ((0, 2), (1,))


def test_refine_splits_by_degree():
    g = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert refine(g).cells == ((0, 1), (2, 3))


def test_refine_keeps_regular_graphs_whole(petersen):
    assert refine(petersen) == Partition.unit(10)


def test_refine_from_initial_partition(path3):
    refined = refine(path3, Partition([[0], [1, 2]]))
    assert refined.cells == ((0,), (2,), (1,))
    with pytest.raises(ValueError):
        refine(path3, Partition.unit(4))


@pytest.mark.parametrize("name", ["petersen", "shrikhande", "cube", "clebsch", "k33"])
def test_relabeled_graph_is_isomorphic(name):
    g = fixtures.builtin(name)
    permutation = np.random.default_rng(5).permutation(g.n)
    h = g.relabel(permutation)
    result = is_isomorphic(g, h)
    assert result.verdict == "isomorphic"
    assert result.isomorphic
    assert_witness(g, h, result.witness)


def test_different_sizes_are_decided_without_search(k4):
    square = Graph.from_networkx(nx.cycle_graph(4))
    result = is_isomorphic(k4, square)
    assert result.verdict == "non-isomorphic"
    assert result.search_nodes == 0


def test_same_degree_sequence_non_isomorphic():
    hexagon = Graph.from_networkx(nx.cycle_graph(6))
    triangles = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert is_isomorphic(hexagon, triangles).verdict == "non-isomorphic"
    assert is_isomorphic(triangles, hexagon).verdict == "non-isomorphic"


def test_cospectral_srgs_are_told_apart(rook, shrikhande):
    assert is_isomorphic(rook, shrikhande).verdict == "non-isomorphic"
    assert is_isomorphic(shrikhande, rook).verdict == "non-isomorphic"


def test_isomorphism_is_symmetric(petersen):
    h = petersen.relabel(list(range(9, -1, -1)))
    forward = is_isomorphic(petersen, h)
    backward = is_isomorphic(h, petersen)
    assert forward.isomorphic and backward.isomorphic
    assert_witness(h, petersen, backward.witness)


def test_node_budget_gives_inconclusive(rook, shrikhande):
    result = is_isomorphic(rook, shrikhande, node_budget=1)
    assert result.verdict == "inconclusive"
    assert result.witness is None


def test_empty_and_trivial_graphs():
    assert is_isomorphic(Graph.empty(3), Graph.empty(3)).isomorphic


@pytest.mark.parametrize(
    "graph",
    [
        Graph.from_edges(3, [(0, 1), (1, 2)]),
        fixtures.builtin("c4-plus-point"),
        fixtures.builtin("star4"),
        Graph.from_edges(8, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6), (5, 7)]),
        Graph.from_networkx(nx.gnp_random_graph(14, 0.3, seed=8)),
    ],
)
def test_refinement_commutes_with_relabeling(graph):
    permutation = np.random.default_rng(17).permutation(graph.n)
    relabeled = graph.relabel(permutation)
    mapped = Partition([[int(permutation[v]) for v in cell] for cell in refine(graph).cells])
    assert refine(relabeled) == mapped
