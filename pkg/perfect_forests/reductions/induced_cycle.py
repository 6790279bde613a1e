"""The 3-SAT gadget for induced cycles through two given edges."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from perfect_forests.exceptions import InvalidWitnessError
from perfect_forests.forest import ParityForest
from perfect_forests.graph import Edge, Graph
from perfect_forests.reductions.cnf import Assignment, CnfInstance
from perfect_forests.reductions.common import GadgetBuilder, GadgetInstance, check_induced_cycle
from perfect_forests.reductions.containing_edge import (
    ContainingEdgeGadget,
    containing_edge_instance,
    cycle_from_forest,
    forest_from_cycle,
)

log: logging.Logger = logging.getLogger(__name__)

_VARIABLE_ROLES = ("x1", "w1", "wb1", "y1", "x2", "w2", "wb2", "y2")


def _label(name: str, i: int) -> str:
    return f"{name}_{i}"


@dataclass(frozen=True)
class InducedCycleGadget:
    """The gadget graph with e1 and e2 marked, plus the formula it encodes."""

    cnf: CnfInstance
    gadget: GadgetInstance

    @property
    def graph(self) -> Graph:
        """The gadget graph."""
        return self.gadget.graph

    @property
    def e1(self) -> Edge:
        """The edge x1_1 x2_1."""
        return self.gadget.marked_edges["e1"]

    @property
    def e2(self) -> Edge:
        """The edge b_m y1_n."""
        return self.gadget.marked_edges["e2"]


def induced_cycle_gadget(cnf: CnfInstance) -> InducedCycleGadget:
    """
    Build the graph with an induced cycle through e1 and e2 iff the formula is satisfiable.

    Each variable gets eight vertices x_j, w_j, wb_j, y_j (j = 1, 2) with
    x_j and y_j joined through both w_j and wb_j, and the crossing edges
    w1 wb2 and wb1 w2.  Each clause gets a K_{2,3} on {a, b} x {c1, c2, c3}.
    Literal k of clause j joins c_k to w1, w2 of its variable when positive
    and to wb1, wb2 when negated.

    Args:
    ----
        cnf (CnfInstance): A formula with at least one variable and one clause

    Returns:
    -------
        InducedCycleGadget: The gadget, with 8n + 5m vertices and 12n + 13m edges

    """
    if cnf.num_vars == 0 or cnf.num_clauses == 0:
        raise ValueError("the induced-cycle gadget needs at least one variable and one clause")
    n, m = cnf.num_vars, cnf.num_clauses
    builder = GadgetBuilder("induced-cycle")
    for i in range(1, n + 1):
        builder.add_vertices(_label(name, i) for name in _VARIABLE_ROLES)
        for j in ("1", "2"):
            for mid in ("w", "wb"):
                builder.connect(_label("x" + j, i), _label(mid + j, i))
                builder.connect(_label(mid + j, i), _label("y" + j, i))
        builder.connect(_label("w1", i), _label("wb2", i))
        builder.connect(_label("wb1", i), _label("w2", i))
        if i > 1:
            builder.connect(_label("y1", i - 1), _label("x1", i))
            builder.connect(_label("y2", i - 1), _label("x2", i))

    for j, clause in enumerate(cnf.clauses, start=1):
        builder.add_vertices((_label("a", j), _label("b", j)))
        for k, lit in enumerate(clause, start=1):
            c = _label(f"c{k}", j)
            builder.add_vertex(c)
            builder.connect(_label("a", j), c)
            builder.connect(_label("b", j), c)
            mids = ("w1", "w2") if lit > 0 else ("wb1", "wb2")
            for mid in mids:
                builder.connect(c, _label(mid, abs(lit)))
        if j > 1:
            builder.connect(_label("b", j - 1), _label("a", j))

    e1 = builder.edge(_label("x1", 1), _label("x2", 1))
    e2 = builder.edge(_label("b", m), _label("y1", n))
    builder.connect(_label("x1", 1), _label("x2", 1))
    builder.connect(_label("b", m), _label("y1", n))
    builder.connect(_label("y2", n), _label("a", 1))

    graph, roles, params, marked = builder.build({"n": n, "m": m}, {"e1": e1, "e2": e2})
    return InducedCycleGadget(cnf, GadgetInstance("induced-cycle", graph, roles, params, marked))


def cycle_from_assignment(inst: InducedCycleGadget, assignment: Sequence[bool]) -> list[int]:
    """
    Route the induced cycle through e1 and e2 for a satisfying assignment.

    A true variable is crossed through wb1 and wb2, a false one through w1
    and w2.  Each clause gadget is crossed through the c vertex of its first
    true literal.

    Args:
    ----
        inst (InducedCycleGadget): The gadget
        assignment (Sequence[bool]): Truth value per variable

    Returns:
    -------
        list[int]: The cycle, starting at x1_1 and leaving through the first chain

    Raises:
    ------
        InvalidWitnessError: If the assignment does not satisfy the formula

    """
    cnf = inst.cnf
    if not cnf.satisfied(assignment):
        raise InvalidWitnessError("assignment does not satisfy the formula")
    roles = inst.gadget.roles

    def chain(j: str) -> list[str]:
        labels: list[str] = []
        for i, value in enumerate(assignment, start=1):
            mid = "wb" if value else "w"
            labels += [_label("x" + j, i), _label(mid + j, i), _label("y" + j, i)]
        return labels

    clause_part: list[str] = []
    for j in range(cnf.num_clauses, 0, -1):
        clause = cnf.clauses[j - 1]
        k = next(k for k, lit in enumerate(clause, start=1) if cnf.literal_value(lit, assignment))
        clause_part += [_label("b", j), _label(f"c{k}", j), _label("a", j)]

    labels = chain("1") + clause_part + list(reversed(chain("2")))
    cycle = [roles[label] for label in labels]
    check_induced_cycle(inst.graph, cycle, (inst.e1, inst.e2))
    return cycle


def assignment_from_cycle(inst: InducedCycleGadget, cycle: Sequence[int]) -> Assignment:
    """
    Read a satisfying assignment off an induced cycle through e1 and e2.

    v_i is true exactly when neither w1_i nor w2_i lies on the cycle.

    Raises:
    ------
        InvalidWitnessError: If the cycle is invalid or the assignment fails the formula

    """
    check_induced_cycle(inst.graph, cycle, (inst.e1, inst.e2))
    roles = inst.gadget.roles
    on_cycle = set(cycle)
    assignment = tuple(
        roles[_label("w1", i)] not in on_cycle and roles[_label("w2", i)] not in on_cycle
        for i in range(1, inst.cnf.num_vars + 1)
    )
    if not inst.cnf.satisfied(assignment):
        raise InvalidWitnessError("cycle does not encode a satisfying assignment")
    return assignment


def containing_edge_chain(inst: InducedCycleGadget) -> ContainingEdgeGadget:
    """Build the containing-edge instance for the gadget and its marked edges."""
    return containing_edge_instance(inst.graph, inst.e1, inst.e2)


def forest_from_assignment(
    inst: InducedCycleGadget, chain: ContainingEdgeGadget, assignment: Sequence[bool]
) -> ParityForest:
    """Carry a satisfying assignment through the cycle to a 0-perfect forest containing e2'."""
    return forest_from_cycle(chain, cycle_from_assignment(inst, assignment))


def assignment_from_forest(
    inst: InducedCycleGadget, chain: ContainingEdgeGadget, forest: ParityForest
) -> Assignment:
    """Carry a 0-perfect forest containing e2' back through the cycle to a satisfying assignment."""
    return assignment_from_cycle(inst, cycle_from_forest(chain, forest))
