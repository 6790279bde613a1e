"""Module to test the brute-force oracles."""

import pytest
from hypothesis import given, note, settings

from perfect_forests.exceptions import OracleLimitError
from perfect_forests.forest import ParityForest, ParityTarget
from perfect_forests.graph import Graph
from perfect_forests.matching import WeightedGraph
from perfect_forests.oracle import (
    OracleLimits,
    bf_exists_avoiding,
    bf_exists_containing,
    bf_induced_cycle_through,
    bf_max_forest,
    bf_max_independent_set,
    bf_max_zero_forest,
    bf_min_forest,
    bf_min_perfect_matching,
    bf_nae_satisfiable,
    bf_proper_one_forest,
    bf_satisfiable,
    enumerate_parity_forests,
)

from .small_graphs import complete_graph, cycle_graph
from .strategies import graphs_with_targets


def _scan_every_subset(g: Graph, f: ParityTarget) -> list[tuple[tuple[int, int], ...]]:
    """List valid forests by checking every edge subset, edge 0 as the top bit."""
    found = []
    m = g.m
    for mask in range(1 << m):
        forest = ParityForest(g, f, tuple(g.edges[i] for i in range(m) if mask >> (m - 1 - i) & 1))
        if forest.ok:
            found.append(forest.edges)
    return found


def test_c4_has_two_perfect_matchings_as_forests(c4):
    """Test that C4 with f = 1 has exactly its two perfect matchings."""
    forests = [x.edges for x in enumerate_parity_forests(c4, ParityTarget.all_ones(4))]
    assert forests == [((0, 3), (1, 2)), ((0, 1), (2, 3))]


def test_single_edge():
    """Test K2, whose only forest is its edge."""
    g = Graph(2, [(0, 1)])
    f = ParityTarget.all_ones(2)
    assert [x.edges for x in enumerate_parity_forests(g, f)] == [((0, 1),)]
    assert bf_exists_avoiding(g, (0, 1), f) is None
    assert bf_exists_containing(g, (1, 0), f).edges == ((0, 1),)


def test_minimum_and_maximum(six_vertex_graph, c4):
    """Test extreme sizes on known graphs."""
    assert bf_min_forest(six_vertex_graph, ParityTarget.all_ones(6)).size == 4
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert bf_max_zero_forest(star).size == 3
    assert bf_max_zero_forest(c4).size == 2
    assert bf_max_zero_forest(cycle_graph(5)) is None
    assert bf_max_forest(c4, ParityTarget.zeros(4)).size == 0


def test_avoiding_and_containing():
    """Test edge conditions on K3 and C4."""
    k3 = complete_graph(3)
    assert bf_exists_avoiding(k3, (0, 1), ParityTarget([1, 1, 0])) is None
    assert bf_exists_containing(cycle_graph(4), (0, 1), ParityTarget.all_ones(4)) is not None


def test_proper_one_forest(k5, seven_vertex_graph):
    """Test class B and a graph outside it."""
    assert bf_proper_one_forest(k5) is None
    assert bf_proper_one_forest(seven_vertex_graph) is not None
    assert bf_proper_one_forest(cycle_graph(4)) is None


def test_edge_cap():
    """Test that enumeration refuses graphs above the cap."""
    with pytest.raises(OracleLimitError):
        bf_min_forest(complete_graph(5), ParityTarget.zeros(5), OracleLimits(edge_cap=9))


def test_parallel_enumeration_keeps_order(six_vertex_graph):
    """Test that a worker pool lists the same forests in the same order."""
    f = ParityTarget([1, 1, 0, 0, 1, 1])
    serial = [x.edges for x in enumerate_parity_forests(six_vertex_graph, f)]
    parallel = [x.edges for x in enumerate_parity_forests(six_vertex_graph, f, jobs=2)]
    assert serial == parallel


@settings(max_examples=150, deadline=None)
@given(instance=graphs_with_targets(min_n=1, max_n=6))
def test_enumeration_matches_subset_scan(instance):
    """Test the pruned search against checking every edge subset."""
    g, f = instance
    if g.m > 12:
        return
    note((g, f))
    assert [x.edges for x in enumerate_parity_forests(g, f)] == _scan_every_subset(g, f)


def test_induced_cycles():
    """Test cycles through two edges in C4, C4 plus a chord, and K4."""
    c4 = cycle_graph(4)
    assert bf_induced_cycle_through(c4, (0, 1), (2, 3)) == [0, 1, 2, 3]
    chorded = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    assert bf_induced_cycle_through(chorded, (0, 3), (1, 2)) is None
    k4 = complete_graph(4)
    assert bf_induced_cycle_through(k4, (0, 1), (2, 3)) is None
    assert bf_induced_cycle_through(k4, (0, 1), (1, 2)) == [0, 1, 2]
    with pytest.raises(OracleLimitError):
        bf_induced_cycle_through(cycle_graph(15), (0, 1), (5, 6))


def test_satisfiability():
    """Test plain and not-all-equal satisfiability."""
    assert bf_satisfiable(3, [(1, 2, -3)]) == (False, False, False)
    assert bf_nae_satisfiable(1, [(1, 1, 1)]) is None
    assert bf_nae_satisfiable(3, [(1, 2, -3)]) == (False, False, False)
    assert bf_satisfiable(1, [(1, 1, 1), (-1, -1, -1)]) is None
    with pytest.raises(OracleLimitError):
        bf_satisfiable(3, [(1, 2, 3)], OracleLimits(sat_var_cap=2))


def test_independent_set(c4):
    """Test maximum independent sets."""
    assert bf_max_independent_set(c4) == (0, 2)
    assert bf_max_independent_set(complete_graph(4)) == (0,)
    assert bf_max_independent_set(Graph(0)) == ()


def test_perfect_matching():
    """Test the exhaustive minimum perfect matching."""
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    wg = WeightedGraph(g, {(0, 1): 4, (1, 2): 1, (2, 3): 4, (0, 3): 1, (0, 2): 7})
    assert bf_min_perfect_matching(wg) == (2, ((0, 3), (1, 2)))
    assert bf_min_perfect_matching(WeightedGraph.unit(complete_graph(3))) is None
