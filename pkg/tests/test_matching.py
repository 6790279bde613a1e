"""Module to test minimum-weight perfect matching."""

import networkx as nx
import pytest
from hypothesis import given, note, settings
from hypothesis import strategies as st

from perfect_forests.graph import Graph
from perfect_forests.matching import (
    Matching,
    WeightedGraph,
    has_perfect_matching,
    min_weight_perfect_matching,
)
from perfect_forests.oracle import bf_min_perfect_matching

from .small_graphs import complete_graph, cycle_graph
from .strategies import connected_graphs


def test_weights_must_cover_edges():
    """Test that weights are required on exactly the host edges."""
    g = Graph(2, [(0, 1)])
    with pytest.raises(ValueError):
        WeightedGraph(g, {})
    with pytest.raises(ValueError):
        WeightedGraph(g, {(1, 0): -1})
    assert WeightedGraph(g, {(1, 0): 3}).weight(0, 1) == 3


def test_matching_rejects_shared_vertices():
    """Test that a matching cannot reuse a vertex."""
    with pytest.raises(ValueError):
        Matching(((0, 1), (1, 2)))
    assert Matching(((3, 2), (1, 0))).edges == ((0, 1), (2, 3))


def test_square_with_heavy_chord():
    """Test the cheap pair of opposite sides is chosen."""
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    wg = WeightedGraph(g, {(0, 1): 4, (1, 2): 1, (2, 3): 4, (0, 3): 1, (0, 2): 7})
    matching = min_weight_perfect_matching(wg)
    assert matching.edges == ((0, 3), (1, 2))
    assert matching.weight(wg) == 2


def test_no_perfect_matching(six_vertex_graph):
    """Test graphs without perfect matchings."""
    assert not has_perfect_matching(six_vertex_graph)
    assert not has_perfect_matching(complete_graph(3))
    assert min_weight_perfect_matching(WeightedGraph.unit(Graph(2))) is None


def test_empty_graph_has_empty_matching():
    """Test the zero-vertex case."""
    assert min_weight_perfect_matching(WeightedGraph.unit(Graph(0))) == Matching(())


def test_two_triangles_joined_by_a_bridge():
    """Test that odd cycles on both sides force the expensive bridge into the matching."""
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    wg = WeightedGraph(g, {e: 1 for e in g.edges} | {(2, 3): 10})
    matching = min_weight_perfect_matching(wg)
    assert matching.covers(6)
    assert matching.edges == ((0, 1), (2, 3), (4, 5))
    assert matching.weight(wg) == 12
    assert has_perfect_matching(cycle_graph(6))


@st.composite
def weighted_graphs(draw: st.DrawFn) -> WeightedGraph:
    """Draw a connected even-order graph with small integer weights."""
    g = draw(connected_graphs(min_n=2, max_n=12, max_extra=20))
    if g.n % 2:
        g, _ = g.induced_subgraph(range(g.n - 1))
    weights = {e: draw(st.integers(min_value=0, max_value=20)) for e in g.edges}
    return WeightedGraph(g, weights)


@settings(max_examples=300, deadline=None)
@given(wg=weighted_graphs())
def test_matches_brute_force(wg):
    """Test existence against networkx and the optimum weight against exhaustive search."""
    note(wg.base)
    note(wg.weights)
    matching = min_weight_perfect_matching(wg)
    nxg = nx.Graph()
    nxg.add_nodes_from(wg.base.vertices())
    nxg.add_edges_from(wg.base.edges)
    largest = nx.max_weight_matching(nxg, maxcardinality=True)
    expected = bf_min_perfect_matching(wg)
    if 2 * len(largest) < wg.base.n:
        assert matching is None
        assert expected is None
        return
    assert matching is not None and matching.covers(wg.base.n)
    assert expected is not None
    assert matching.weight(wg) == expected[0]
