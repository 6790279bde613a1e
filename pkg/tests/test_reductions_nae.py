"""Module to test the NAE-3-SAT gadget and its witness conversions."""

import pytest
from hypothesis import assume, given, note, settings

from perfect_forests.exceptions import InvalidWitnessError
from perfect_forests.forest import ParityForest, ParityTarget
from perfect_forests.formats import parse_dimacs, read_text, write_graph
from perfect_forests.oracle import bf_max_zero_forest, bf_nae_satisfiable
from perfect_forests.reductions import (
    CnfInstance,
    nae_assignment_from_forest,
    nae_forest_from_assignment,
    nae_gadget,
)

from .small_graphs import FIXTURES
from .strategies import cnf_formulas


def test_one_clause_layout():
    """Test vertex count, id order and clause wiring for (v1 or v2 or not v3)."""
    inst = nae_gadget(CnfInstance.of(3, [(1, 2, -3)]))
    g, roles = inst.graph, inst.gadget.roles
    assert g.n == 34
    assert [roles[f"{name}_1"] for name in ("x1", "z1", "y1", "x2", "z2", "y2")] == list(range(6))
    assert roles["c_1"] == 32 and roles["c'_1"] == 33
    assert g.neighbours(roles["c_1"]) == {roles["y2_1"], roles["y2_2"], roles["y1_3"]}
    assert "pendant-of:x1_1" not in roles
    assert "pendant-of:y2_3" not in roles
    assert g.neighbours(roles["pendant-of:z1_2"]) == {roles["z1_2"]}
    assert inst.threshold == 32
    assert inst.gadget.params == {"n": 3, "m": 1}


def test_one_clause_matches_golden_file():
    """Test the one-clause gadget against its stored edge list."""
    cnf = parse_dimacs(read_text(str(FIXTURES / "one_clause.cnf")))
    expected = (FIXTURES / "nae_one_clause.graph").read_text()
    assert write_graph(nae_gadget(cnf).graph) == expected


def test_variable_gadget_edges():
    """Test the six-vertex gadget is K6 minus x1y1 and x2y2, chained through the y vertices."""
    inst = nae_gadget(CnfInstance.of(2, [(1, 2, 2)]))
    g, roles = inst.graph, inst.gadget.roles
    assert not g.has_edge(roles["x1_1"], roles["y1_1"])
    assert not g.has_edge(roles["x2_2"], roles["y2_2"])
    assert g.has_edge(roles["x1_1"], roles["y2_1"])
    for y in ("y1_1", "y2_1"):
        for x in ("x1_2", "x2_2"):
            assert g.has_edge(roles[y], roles[x])
    assert not g.has_edge(roles["y1_1"], roles["z1_2"])


@pytest.mark.parametrize("n,m", [(1, 1), (2, 3), (4, 2)])
def test_vertex_count(n, m):
    """Test |V| = 12n - 4 + 2m."""
    cnf = CnfInstance.of(n, [(1, 1, -1)] * m)
    assert nae_gadget(cnf).graph.n == 12 * n - 4 + 2 * m


def test_empty_formula_is_refused():
    """Test that a gadget needs variables and clauses."""
    with pytest.raises(ValueError):
        nae_gadget(CnfInstance.of(2, []))


def test_degenerate_clause_warns(caplog):
    """Test that a clause with one literal repeated is flagged."""
    nae_gadget(CnfInstance.of(1, [(1, 1, 1)]))
    assert any("repeats one literal" in r.message for r in caplog.records)


def test_all_true_assignment_round_trip():
    """Test both directions on (v1 or v2 or not v3) with every variable true."""
    inst = nae_gadget(CnfInstance.of(3, [(1, 2, -3)]))
    forest = nae_forest_from_assignment(inst, (True, True, True))
    assert forest.ok
    assert forest.size == inst.graph.n - 2
    assert nae_assignment_from_forest(inst, forest) == (True, True, True)


def test_reading_is_fixed_by_the_first_variable():
    """Test that the complement of an assignment reads back with the first variable true."""
    inst = nae_gadget(CnfInstance.of(3, [(1, 2, -3)]))
    forest = nae_forest_from_assignment(inst, (False, False, False))
    assert nae_assignment_from_forest(inst, forest) == (True, True, True)


def test_bad_assignment_is_refused():
    """Test that an assignment making a clause all-equal is rejected."""
    inst = nae_gadget(CnfInstance.of(3, [(1, 2, -3)]))
    with pytest.raises(InvalidWitnessError):
        nae_forest_from_assignment(inst, (True, True, False))


def test_small_forest_is_refused():
    """Test that the pendant edges alone do not certify an assignment."""
    inst = nae_gadget(CnfInstance.of(3, [(1, 2, -3)]))
    g, roles = inst.graph, inst.gadget.roles
    edges = [
        (roles[label.removeprefix("pendant-of:")], v)
        for label, v in roles.items()
        if label.startswith("pendant-of:")
    ]
    forest = ParityForest(g, ParityTarget.all_ones(g.n), tuple(edges))
    with pytest.raises(InvalidWitnessError):
        nae_assignment_from_forest(inst, forest)


def test_single_variable_maximum_matches_threshold():
    """Test on a one-variable gadget that the largest 0-perfect forest has exactly |V| - 2 edges."""
    inst = nae_gadget(CnfInstance.of(1, [(1, -1, 1)]))
    assert inst.graph.n == 10
    assert bf_max_zero_forest(inst.graph).size == inst.threshold


@settings(max_examples=50, deadline=None)
@given(cnf=cnf_formulas(max_vars=4, max_clauses=4))
def test_random_nae_satisfiable_formulas(cnf):
    """Test the round trip on random NAE-satisfiable formulas."""
    assignment = bf_nae_satisfiable(cnf.num_vars, cnf.clauses)
    assume(assignment is not None)
    note(cnf)
    inst = nae_gadget(cnf)
    forest = nae_forest_from_assignment(inst, assignment)
    assert forest.ok
    assert forest.size == inst.graph.n - 2
    assert cnf.nae_satisfied(nae_assignment_from_forest(inst, forest))
