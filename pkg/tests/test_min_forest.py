"""Module to test minimum f-parity perfect forests."""

import random

import pytest
from hypothesis import given, note, settings

from perfect_forests.corpus import random_connected_graph, random_even_sum_target
from perfect_forests.exceptions import InfeasibleInputError
from perfect_forests.forest import ParityTarget
from perfect_forests.graph import Graph
from perfect_forests.matching import has_perfect_matching, min_weight_perfect_matching
from perfect_forests.min_forest import (
    build_auxiliary,
    extract_multiset,
    min_f_parity_forest,
    min_zero_perfect_forest,
)
from perfect_forests.oracle import OracleLimits, bf_min_forest

from .small_graphs import connected_atlas, connected_graphs_of_order, cycle_graph, even_sum_targets
from .strategies import graphs_with_targets


def test_auxiliary_copy_sets(c4):
    """Test copy-set sizes, the free vertex and the cross edges."""
    inst = build_auxiliary(c4, ParityTarget([1, 1, 0, 0]))
    assert [len(x) for x in inst.copy_sets] == [3, 3, 4, 4]
    assert inst.free_vertex[0] == inst.copy_sets[0][-1]
    assert inst.free_vertex[2] is None
    assert all(len(m) == len(x) // 2 for m, x in zip(inst.intra_matchings, inst.copy_sets, strict=True))
    assert inst.aux.base.n == 14
    assert len(inst.cross_map) == 3 * 3 + 3 * 4 + 4 * 4 + 3 * 4
    assert all(inst.aux.weights[e] == 0 for m in inst.intra_matchings for e in m)


def test_extracted_edges_have_target_parities(six_vertex_graph):
    """Test reading a parity subgraph off an optimal matching."""
    f = ParityTarget.all_ones(6)
    inst = build_auxiliary(six_vertex_graph, f)
    edges = extract_multiset(inst, min_weight_perfect_matching(inst.aux))
    assert len(edges) == 4


def test_six_vertex_graph_needs_four_edges(six_vertex_graph):
    """Test the minimum 0-perfect forest of a graph without a perfect matching."""
    forest = min_zero_perfect_forest(six_vertex_graph)
    assert forest.ok
    assert forest.size == 4


def test_perfect_matching_is_minimum(c4):
    """Test that a graph with a perfect matching gets one as its minimum forest."""
    forest = min_f_parity_forest(c4, ParityTarget.all_ones(4))
    assert forest.size == 2


def test_zero_target_gives_empty_forest():
    """Test f = 0."""
    assert min_f_parity_forest(cycle_graph(5), ParityTarget.zeros(5)).edges == ()


def test_odd_order_has_no_zero_perfect_forest():
    """Test that odd order is refused for 0-perfect forests."""
    with pytest.raises(InfeasibleInputError):
        min_zero_perfect_forest(cycle_graph(5))


def test_disconnected_graph_is_refused():
    """Test that a disconnected host is refused."""
    with pytest.raises(InfeasibleInputError):
        min_f_parity_forest(Graph(4, [(0, 1), (2, 3)]), ParityTarget.all_ones(4))


def test_matches_oracle_on_every_small_graph():
    """Test minimum sizes against enumeration on every connected graph up to five vertices."""
    for g in connected_atlas(1, 5):
        for f in even_sum_targets(g.n):
            forest = min_f_parity_forest(g, f)
            expected = bf_min_forest(g, f)
            assert forest.ok, (g, f)
            assert expected is not None
            assert forest.size == expected.size, (g, f)


def test_matches_oracle_on_six_vertices_all_ones():
    """Test 0-perfect forests on every connected 6-vertex graph."""
    for g in connected_atlas(6, 6):
        f = ParityTarget.all_ones(6)
        assert min_f_parity_forest(g, f).size == bf_min_forest(g, f).size, g


@pytest.mark.slow
def test_matches_oracle_on_seven_vertices():
    """Test one-even-vertex targets on every connected 7-vertex graph."""
    for g in connected_atlas(7, 7):
        f = ParityTarget.all_ones_except(7, 0)
        assert min_f_parity_forest(g, f).size == bf_min_forest(g, f).size, g


@settings(max_examples=100, deadline=None)
@given(instance=graphs_with_targets(min_n=2, max_n=8))
def test_matches_oracle_on_random_graphs(instance):
    """Test minimum sizes on random graphs and targets."""
    g, f = instance
    note(g)
    note(f)
    expected = bf_min_forest(g, f)
    forest = min_f_parity_forest(g, f)
    assert forest.ok
    assert forest.size == expected.size


def test_half_order_exactly_when_perfect_matching():
    """Test that the minimum 0-perfect forest has n/2 edges iff the graph has a perfect matching."""
    for g in connected_atlas(2, 6):
        if g.n % 2:
            continue
        assert (min_zero_perfect_forest(g).size == g.n // 2) == has_perfect_matching(g), g


@pytest.mark.slow
def test_matches_oracle_on_eight_vertices():
    """Test 0-perfect forests and the half-order matching law on every connected 8-vertex graph."""
    limits = OracleLimits(edge_cap=28)
    for g in connected_graphs_of_order(8):
        forest = min_zero_perfect_forest(g)
        assert forest.ok, g
        assert forest.size == bf_min_forest(g, ParityTarget.all_ones(8), limits).size, g
        assert (forest.size == 4) == has_perfect_matching(g), g


def test_matches_oracle_on_seeded_pairs():
    """Test minimum sizes on five hundred seeded graphs and targets with up to ten vertices."""
    limits = OracleLimits(edge_cap=45)
    for seed in range(500):
        rng = random.Random(seed)
        n = rng.randint(1, 10)
        g = random_connected_graph(rng, n, 0.2)
        f = random_even_sum_target(rng, n)
        assert min_f_parity_forest(g, f).size == bf_min_forest(g, f, limits).size, seed
