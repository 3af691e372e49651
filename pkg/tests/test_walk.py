"""Tests for arc spaces, U(G), T(G) and the support operators."""

from fractions import Fraction

import numpy as np
import pytest

from walksig.core.errors import ArcNotFoundError, GraphStructureError
from walksig.models.graph import Graph
from walksig.models.matrices import RationalMatrix
from walksig.services import fixtures
from walksig.services.walk import (
    adjacency_power_support,
    arc_space,
    build_T,
    build_U,
    full_support_at_diameter,
    line_digraph_adjacency,
    positive_support,
    power,
    s_plus_power,
    support,
)


def test_arc_space_orders_lexicographically(k4, path3):
    assert list(arc_space(Graph.from_edges(2, [(0, 1)]))) == [(0, 1), (1, 0)]
    space = arc_space(k4)
    assert len(space) == 12
    assert space[0] == (0, 1) and space[11] == (3, 2)
    assert list(arc_space(path3)) == [(0, 1), (1, 0), (1, 2), (2, 1)]
    assert space.index((2, 3)) == 8


def test_arc_space_lookup_and_edgeless():
    with pytest.raises(ArcNotFoundError):
        arc_space(Graph.from_edges(3, [(0, 1)])).index((0, 2))
    with pytest.raises(GraphStructureError):
        arc_space(Graph.empty(3))


def test_build_U_k4_entries(k4):
    space = arc_space(k4)
    u = build_U(k4)
    assert u.dimension == 12
    assert u.entry(space.index((0, 1)), space.index((1, 2))) == Fraction(2, 3)
    assert u.entry(space.index((0, 1)), space.index((1, 0))) == Fraction(-1, 3)
    assert u.entry(space.index((0, 1)), space.index((2, 3))) == 0


def test_build_U_two_regular_is_permutation(c5):
    values = build_U(c5).to_float()
    assert set(np.unique(values).tolist()) == {0.0, 1.0}
    assert np.all(values.sum(axis=1) == 1) and np.all(values.sum(axis=0) == 1)


def test_build_U_leaf_reflects():
    star = fixtures.builtin("star3")
    space = arc_space(star)
    u = build_U(star)
    row = space.index((0, 1))
    assert u.entry(row, space.index((1, 0))) == 1
    assert int(u.nonzero_mask()[row].sum()) == 1


def test_build_U_rejects_isolated_vertex():
    with pytest.raises(GraphStructureError, match="isolated"):
        build_U(fixtures.c4_plus_point())


def test_build_T(k4, path3):
    assert build_T(k4) == RationalMatrix(k4.adjacency_matrix(), 3)
    t = build_T(path3)
    assert t.entry(0, 1) == Fraction(1, 2)
    assert t.entry(1, 0) == 1
    assert t.entry(1, 2) == 1
    assert t.entry(2, 1) == Fraction(1, 2)
    assert np.all(t.numerators.sum(axis=0) == t.denominator)


def test_build_T_isolated_vertex_gives_zero_column():
    t = build_T(fixtures.c4_plus_point())
    assert not t.numerators[:, 4].any() and not t.numerators[4].any()


@pytest.mark.parametrize("name", ["k4", "petersen", "cube", "star4", "k33"])
def test_U_is_orthogonal(name):
    u = build_U(fixtures.builtin(name))
    assert (u @ u.T).is_identity()


def test_powers(k4, c5):
    u = build_U(k4)
    assert power(u, 1) == u
    assert power(u, 3) == u @ u @ u
    assert power(build_U(c5), 5).is_identity()
    with pytest.raises(ValueError):
        power(u, 0)


def test_row_structure(petersen):
    space = arc_space(petersen)
    u = build_U(petersen)
    for row, (i, j) in enumerate(space):
        assert int(u.nonzero_mask()[row].sum()) == petersen.degree(j)
        assert u.entry(row, space.index((j, i))) == Fraction(2, 3) - 1


def test_support_and_positive_support_on_small_matrices():
    m = RationalMatrix.from_rows([[Fraction(1, 2), Fraction(-1, 3)], [0, 2]])
    assert support(m).data.tolist() == [[1, 1], [0, 1]]
    m = RationalMatrix.from_rows([[Fraction(1, 2), Fraction(-1, 2)], [0, 1]])
    assert positive_support(m).data.tolist() == [[1, 0], [0, 1]]
    assert support(RationalMatrix.zeros(3)).count() == 0


def test_s_plus_of_k4(k4):
    space = arc_space(k4)
    s_plus = s_plus_power(k4, 1)
    assert s_plus.count() == 24
    assert support(build_U(k4)).count() == 36
    row = s_plus[space.index((0, 1))]
    ones = [space[c] for c in np.flatnonzero(row)]
    assert ones == [(1, 2), (1, 3)]


def test_s_plus_requires_min_degree_three(c5):
    with pytest.raises(GraphStructureError):
        s_plus_power(c5, 1)


def test_petersen_cube_has_empty_diagonal(petersen):
    assert not s_plus_power(petersen, 3).data.diagonal().any()


def test_support_equals_line_digraph(k4, petersen):
    for g in (k4, petersen):
        assert support(build_U(g)) == line_digraph_adjacency(g)


def test_adjacency_power_support_worked_example():
    g = fixtures.c4_plus_point()
    square = adjacency_power_support(g, 2).data
    expected = np.zeros((5, 5), dtype=np.uint8)
    for a in (0, 2):
        for b in (0, 2):
            expected[a, b] = expected[a + 1, b + 1] = 1
    assert np.array_equal(square, expected)

    star = fixtures.builtin("star4")
    square = adjacency_power_support(star, 2).data
    assert square[0].tolist() == [1, 0, 0, 0, 0]
    assert np.all(square[1:, 1:] == 1)


def test_adjacency_power_support_first_power(petersen):
    assert np.array_equal(adjacency_power_support(petersen, 1).data, petersen.adjacency)


def test_diameter_support_observation(k4, petersen, cube):
    assert full_support_at_diameter(fixtures.builtin("rook-3x3")).full_support
    assert len(full_support_at_diameter(k4).zero_pairs) == 4
    observed = full_support_at_diameter(petersen)
    assert observed.claim_applies and observed.diameter == 2
    assert len(observed.zero_pairs) == 30
    assert not full_support_at_diameter(cube).claim_applies
