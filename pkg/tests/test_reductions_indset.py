"""Module to test the independent-set gadget."""

import networkx as nx
import pytest

from perfect_forests.exceptions import InvalidWitnessError
from perfect_forests.formats import write_graph
from perfect_forests.graph import Graph
from perfect_forests.oracle import OracleLimits, bf_max_independent_set, bf_max_zero_forest
from perfect_forests.reductions import (
    IndsetWitness,
    WitnessKind,
    indset_equivalence_witnesses,
    indset_gadget,
)
from perfect_forests.reductions.common import check_induced_path
from perfect_forests.reductions.indset import (
    forest_from_path,
    gprime_set_from_g_set,
    path_from_forest,
    path_from_gprime_set,
)

from .small_graphs import FIXTURES, cycle_graph


@pytest.fixture
def c4_gadget():
    """Gadget for C4 and k = 4, asking for an independent set of size 2."""
    return indset_gadget(cycle_graph(4), 4)


def test_layer_sizes(c4_gadget):
    """Test the orders of the three layers and the derived constants."""
    inst = c4_gadget
    assert inst.n_prime == 6
    assert inst.positions == (1, 2, 4, 5)
    assert inst.h1.n == 12
    assert inst.h2.n - inst.h1.n == 22
    assert inst.h2.n == 34
    assert inst.graph.n == 66
    assert inst.path_end == 9
    assert inst.forest_threshold == 42
    assert len(inst.pendant_edges()) == 32


def test_c4_gadget_matches_golden_file(c4_gadget):
    """Test the C4, k = 4 gadget against its stored edge list."""
    expected = (FIXTURES / "indset_c4_k4.graph").read_text()
    assert write_graph(c4_gadget.graph) == expected


def test_g_prime_has_isolated_ends(c4_gadget):
    """Test that positions 0 and k - 1 are isolated in G'."""
    g_prime = c4_gadget.g_prime
    assert g_prime.edges == ((1, 2), (1, 5), (2, 4), (4, 5))
    assert g_prime.degree(0) == 0
    assert g_prime.degree(3) == 0


def test_path_from_independent_set(c4_gadget):
    """Test the induced path routed through {0, 2} of C4."""
    inst = c4_gadget
    roles = inst.gadget.roles
    gprime = gprime_set_from_g_set(inst, (0, 2))
    assert gprime == (0, 1, 3, 4)
    path = path_from_gprime_set(inst, gprime)
    assert path == (0, 6, roles["w_1,0"], 1, 7, roles["w_4,1"], 4, 10, roles["w_3,4"], 3, 9)
    assert len(path) - 1 == 3 * inst.k - 2


def test_forest_round_trip(c4_gadget):
    """Test that pendants plus the path give a forest at the threshold and back."""
    inst = c4_gadget
    path = path_from_gprime_set(inst, gprime_set_from_g_set(inst, (0, 2)))
    forest = forest_from_path(inst, path)
    assert forest.ok
    assert forest.size == inst.forest_threshold
    assert path_from_forest(inst, forest) == path


@pytest.mark.parametrize("kind", list(WitnessKind))
def test_every_kind_converts_to_all_kinds(c4_gadget, kind):
    """Test that each witness kind yields the same four witnesses."""
    inst = c4_gadget
    start = indset_equivalence_witnesses(inst, IndsetWitness(WitnessKind.INDSET_G, (0, 2)))
    converted = indset_equivalence_witnesses(inst, start[kind])
    assert converted[WitnessKind.INDSET_G].vertices == (0, 2)
    assert converted[WitnessKind.INDSET_GPRIME].vertices == (0, 1, 3, 4)
    assert converted[WitnessKind.PATH].vertices == start[WitnessKind.PATH].vertices
    assert converted[WitnessKind.FOREST].forest.size == 42


def test_dependent_set_is_refused(c4_gadget):
    """Test that a set with an edge inside is rejected."""
    with pytest.raises(InvalidWitnessError):
        indset_equivalence_witnesses(c4_gadget, IndsetWitness(WitnessKind.INDSET_G, (0, 1, 2)))


def test_small_set_is_refused(c4_gadget):
    """Test that a single vertex does not reach k - 2 = 2."""
    with pytest.raises(InvalidWitnessError):
        indset_equivalence_witnesses(c4_gadget, IndsetWitness(WitnessKind.INDSET_G, (1,)))


def test_forest_kind_needs_a_forest(c4_gadget):
    """Test a forest witness without a forest."""
    with pytest.raises(InvalidWitnessError):
        indset_equivalence_witnesses(c4_gadget, IndsetWitness(WitnessKind.FOREST))


def test_path_with_wrong_end_is_refused(c4_gadget):
    """Test a path that stops short of copy-2 of position k - 1."""
    with pytest.raises(InvalidWitnessError):
        indset_equivalence_witnesses(c4_gadget, IndsetWitness(WitnessKind.PATH, (0, 6)))


@pytest.mark.parametrize("k", [1, 7])
def test_k_out_of_range(k):
    """Test that k must lie in 2..|V| + 2."""
    with pytest.raises(ValueError):
        indset_gadget(cycle_graph(4), k)


def test_single_vertex_with_k_two():
    """Test the smallest gadget, where the path is one copy edge, one w vertex and another copy edge."""
    inst = indset_gadget(Graph(1), 2)
    assert inst.n_prime == 3
    assert inst.positions == (2,)
    assert inst.h1.n == 6
    witnesses = indset_equivalence_witnesses(inst, IndsetWitness(WitnessKind.INDSET_G, ()))
    assert witnesses[WitnessKind.PATH].vertices[0] == 0
    assert witnesses[WitnessKind.PATH].vertices[-1] == inst.path_end
    assert witnesses[WitnessKind.FOREST].forest.size == inst.forest_threshold


def _long_induced_path_exists(inst):
    h2 = inst.h2
    nxg = nx.Graph()
    nxg.add_nodes_from(h2.vertices())
    nxg.add_edges_from(h2.edges)
    for path in nx.all_simple_paths(nxg, 0, inst.path_end):
        if len(path) - 1 < 3 * inst.k - 2:
            continue
        try:
            check_induced_path(h2, path)
        except InvalidWitnessError:
            continue
        return True
    return False


@pytest.mark.parametrize(
    "g,k",
    [(Graph(1), 2), (Graph(1), 3), (Graph(2, [(0, 1)]), 3), (Graph(2, [(0, 1)]), 4)],
    ids=["k1-k2", "k1-k3", "k2-k3", "k2-k4"],
)
def test_statements_agree_with_oracles(g, k):
    """Test independent set, long induced path and large forest against exhaustive search."""
    inst = indset_gadget(g, k)
    has_set = len(bf_max_independent_set(g)) >= k - 2
    forest = bf_max_zero_forest(inst.graph, OracleLimits(edge_cap=inst.graph.m))
    assert _long_induced_path_exists(inst) == has_set, (g, k)
    assert (forest is not None and forest.size >= inst.forest_threshold) == has_set, (g, k)
