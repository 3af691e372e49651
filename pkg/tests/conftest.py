"""Shared fixtures."""

import networkx as nx
import pytest

from walksig.models.graph import Graph
from walksig.services import fixtures
from walksig.services.graph_io import write_family


@pytest.fixture
def k4() -> Graph:
    return fixtures.builtin("k4")


@pytest.fixture
def c5() -> Graph:
    return fixtures.builtin("c5")


@pytest.fixture
def petersen() -> Graph:
    return fixtures.builtin("petersen")


@pytest.fixture
def rook() -> Graph:
    return fixtures.builtin("rook-4x4")


@pytest.fixture
def shrikhande() -> Graph:
    return fixtures.builtin("shrikhande")


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def cube() -> Graph:
    return Graph.from_networkx(nx.hypercube_graph(3))


@pytest.fixture
def write_graphs(tmp_path):
    """Write graphs to a file and return its path."""

    def write(graphs, name="family.g6", fmt="graph6"):
        path = tmp_path / name
        path.write_text(write_family(graphs, fmt), encoding="ascii")
        return path

    return write
