"""Module to test the 3-SAT gadget for induced cycles through two edges."""

import pytest

from perfect_forests.exceptions import InvalidWitnessError
from perfect_forests.formats import parse_dimacs, read_text, write_graph
from perfect_forests.oracle import OracleLimits, bf_induced_cycle_through
from perfect_forests.reductions import CnfInstance, induced_cycle_gadget
from perfect_forests.reductions.induced_cycle import (
    assignment_from_cycle,
    assignment_from_forest,
    containing_edge_chain,
    cycle_from_assignment,
    forest_from_assignment,
)

from .small_graphs import FIXTURES


@pytest.fixture
def two_clause_gadget():
    """Gadget for (not v1 or v2 or v3) and (not v2 or not v3 or v4)."""
    return induced_cycle_gadget(parse_dimacs(read_text(str(FIXTURES / "two_clauses.cnf"))))


def test_gadget_size(two_clause_gadget):
    """Test 8n + 5m vertices and 12n + 13m edges."""
    g = two_clause_gadget.graph
    assert g.n == 42
    assert g.m == 74


def test_gadget_matches_golden_file(two_clause_gadget):
    """Test the two-clause gadget against its stored edge list."""
    expected = (FIXTURES / "induced_cycle_two_clauses.graph").read_text()
    assert write_graph(two_clause_gadget.graph) == expected


def test_marked_edges(two_clause_gadget):
    """Test that e1 joins x1 and x2 of the first variable and e2 joins b of the last clause to y1 of the last variable."""
    inst = two_clause_gadget
    roles = inst.gadget.roles
    assert inst.e1 == (roles["x1_1"], roles["x2_1"])
    assert set(inst.e2) == {roles["b_2"], roles["y1_4"]}


def test_cycle_round_trip(two_clause_gadget):
    """Test a satisfying assignment going to a cycle and back."""
    inst = two_clause_gadget
    roles = inst.gadget.roles
    cycle = cycle_from_assignment(inst, (True, False, True, True))
    assert cycle[0] == roles["x1_1"]
    assert roles["wb1_1"] in cycle
    assert roles["w1_2"] in cycle
    assert roles["c3_1"] in cycle and roles["c1_2"] in cycle
    assert assignment_from_cycle(inst, cycle) == (True, False, True, True)


def test_unsatisfying_assignment_is_refused(two_clause_gadget):
    """Test (T, F, F, F), which falsifies the first clause."""
    with pytest.raises(InvalidWitnessError):
        cycle_from_assignment(two_clause_gadget, (True, False, False, False))


def test_chord_is_refused(two_clause_gadget):
    """Test that a vertex sequence that is not an induced cycle is rejected."""
    inst = two_clause_gadget
    roles = inst.gadget.roles
    with pytest.raises(InvalidWitnessError):
        assignment_from_cycle(inst, [roles["x1_1"], roles["w1_1"], roles["x2_1"]])


def test_forest_chain(two_clause_gadget):
    """Test the assignment carried to a forest containing e2 and back."""
    inst = two_clause_gadget
    chain = containing_edge_chain(inst)
    forest = forest_from_assignment(inst, chain, (True, False, True, True))
    assert forest.ok
    assert chain.required_edge in forest.edges
    assert assignment_from_forest(inst, chain, forest) == (True, False, True, True)


def test_single_clause_found_by_search():
    """Test that the cycle search on a one-variable gadget reads back as true."""
    inst = induced_cycle_gadget(CnfInstance.of(1, [(1, 1, 1)]))
    assert inst.graph.n == 13
    cycle = bf_induced_cycle_through(inst.graph, inst.e1, inst.e2)
    assert cycle is not None
    assert assignment_from_cycle(inst, cycle) == (True,)


def test_contradiction_has_no_cycle():
    """Test that v1 and not v1 as clauses leave no induced cycle through e1 and e2."""
    inst = induced_cycle_gadget(CnfInstance.of(1, [(1, 1, 1), (-1, -1, -1)]))
    assert inst.graph.n == 18
    assert bf_induced_cycle_through(inst.graph, inst.e1, inst.e2, OracleLimits(cycle_vertex_cap=20)) is None


def test_empty_formula_is_refused():
    """Test that the gadget needs a clause."""
    with pytest.raises(ValueError):
        induced_cycle_gadget(CnfInstance.of(1, []))
