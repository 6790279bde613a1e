"""Shared graphs for the perfect_forests tests."""

from pathlib import Path

import pytest

from perfect_forests.forest import ParityTarget
from perfect_forests.graph import Graph

from .small_graphs import FIXTURES, complete_graph, cycle_graph


@pytest.fixture
def six_vertex_graph() -> Graph:
    """A 6-vertex graph with no perfect matching whose minimum 0-perfect forest has 4 edges."""
    return Graph(6, [(0, 1), (0, 4), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)])


@pytest.fixture
def seven_vertex_graph() -> Graph:
    """A 7-vertex graph with a pendant block, so it has a proper 1-perfect forest."""
    return Graph(
        7, [(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (1, 5), (2, 5), (2, 6), (5, 6)]
    )


@pytest.fixture
def avoid_edge_instance() -> tuple[Graph, ParityTarget, tuple[int, int]]:
    """A graph with cut vertex 2 where no forest avoids the edge 3-5."""
    g = Graph(
        7,
        [(0, 1), (0, 2), (1, 2), (2, 3), (2, 6), (3, 4), (4, 5), (5, 6), (3, 6), (3, 5)],
    )
    return g, ParityTarget([1, 0, 1, 1, 0, 1, 0]), (3, 5)


@pytest.fixture
def k5() -> Graph:
    """The complete graph on five vertices, which is in class B."""
    return complete_graph(5)


@pytest.fixture
def c4() -> Graph:
    """The 4-cycle 0-1-2-3-0."""
    return cycle_graph(4)


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory of the input files used by the command-line tests."""
    return FIXTURES
