"""The NAE-3-SAT gadget for maximum 0-perfect forests."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from perfect_forests.exceptions import InvalidWitnessError
from perfect_forests.forest import ParityForest, ParityTarget, require_verified
from perfect_forests.graph import Graph, connected_components
from perfect_forests.reductions.cnf import Assignment, CnfInstance
from perfect_forests.reductions.common import (
    GadgetBuilder,
    GadgetInstance,
    check_forest_witness,
)

log: logging.Logger = logging.getLogger(__name__)

# Per-variable vertex order; the first three form one side, the last three the other.
_SIDE_ONE = ("x1", "z1", "y1")
_SIDE_TWO = ("x2", "z2", "y2")
_MISSING = {("x1", "y1"), ("x2", "y2")}


def _label(name: str, i: int) -> str:
    return f"{name}_{i}"


def _clause_anchor(lit: int) -> str:
    return _label("y2" if lit > 0 else "y1", abs(lit))


@dataclass(frozen=True)
class NaeGadget:
    """A gadget graph together with the formula it was built from."""

    cnf: CnfInstance
    gadget: GadgetInstance

    @property
    def graph(self) -> Graph:
        """The gadget graph."""
        return self.gadget.graph

    @property
    def threshold(self) -> int:
        """Forest size reached exactly when the formula is NAE-satisfiable."""
        return self.graph.n - 2


def nae_gadget(cnf: CnfInstance) -> NaeGadget:
    """
    Build the graph whose 0-perfect forests of size |V| - 2 encode NAE assignments.

    Vertex ids follow the order: the six vertices of each variable gadget,
    the pendants in ascending anchor order, then c_j and c'_j per clause.

    Args:
    ----
        cnf (CnfInstance): A formula with at least one variable and one clause

    Returns:
    -------
        NaeGadget: The gadget, with 12n - 4 + 2m vertices

    """
    if cnf.num_vars == 0 or cnf.num_clauses == 0:
        raise ValueError("the NAE gadget needs at least one variable and one clause")
    for j in cnf.degenerate_clauses():
        log.warning(
            "Clause %d repeats one literal three times; the gadget does not encode it faithfully",
            j,
        )

    n = cnf.num_vars
    builder = GadgetBuilder("nae3sat")
    for i in range(1, n + 1):
        names = _SIDE_ONE + _SIDE_TWO
        builder.add_vertices(_label(name, i) for name in names)
        for a, b in combinations(names, 2):
            if (a, b) not in _MISSING:
                builder.connect(_label(a, i), _label(b, i))
        if i > 1:
            for y in ("y1", "y2"):
                for x in ("x1", "x2"):
                    builder.connect(_label(y, i - 1), _label(x, i))

    ends = {_label("x1", 1), _label("x2", 1), _label("y1", n), _label("y2", n)}
    builder.add_pendants(
        label for label in list(builder.roles) if label not in ends
    )

    for j, clause in enumerate(cnf.clauses, start=1):
        for c in (f"c_{j}", f"c'_{j}"):
            builder.add_vertex(c)
            for lit in clause:
                builder.connect(c, _clause_anchor(lit))

    graph, roles, params, marked = builder.build({"n": n, "m": cnf.num_clauses})
    return NaeGadget(cnf, GadgetInstance("nae3sat", graph, roles, params, marked))


def nae_forest_from_assignment(inst: NaeGadget, assignment: Sequence[bool]) -> ParityForest:
    """
    Build the two-tree 0-perfect forest for an NAE-satisfying assignment.

    A true variable puts its x1, z1, y1 on side one and x2, z2, y2 on side
    two; a false one swaps them.  Pendants follow their anchor and each
    clause vertex joins the side holding exactly one of its neighbours.
    The forest is every edge with both ends on the same side.

    Args:
    ----
        inst (NaeGadget): The gadget
        assignment (Sequence[bool]): Truth value per variable

    Returns:
    -------
        ParityForest: A verified 0-perfect forest with |V| - 2 edges

    Raises:
    ------
        InvalidWitnessError: If the assignment does not NAE-satisfy the formula

    """
    if not inst.cnf.nae_satisfied(assignment):
        raise InvalidWitnessError("assignment does not NAE-satisfy the formula")
    g, roles = inst.graph, inst.gadget.roles
    side = [0] * g.n
    for i, value in enumerate(assignment, start=1):
        first, second = (_SIDE_ONE, _SIDE_TWO) if value else (_SIDE_TWO, _SIDE_ONE)
        for name in first:
            side[roles[_label(name, i)]] = 1
        for name in second:
            side[roles[_label(name, i)]] = 2
    for label, v in roles.items():
        if label.startswith("pendant-of:"):
            side[v] = side[roles[label.removeprefix("pendant-of:")]]
    for j in range(1, inst.cnf.num_clauses + 1):
        for c in (f"c_{j}", f"c'_{j}"):
            v = roles[c]
            counts = {s: sum(1 for u in g.neighbours(v) if side[u] == s) for s in (1, 2)}
            side[v] = 1 if counts[1] == 1 else 2

    edges = tuple(e for e in g.edges if side[e[0]] == side[e[1]])
    forest = require_verified(
        ParityForest(g, ParityTarget.all_ones(g.n), edges), "nae_forest_from_assignment"
    )
    if forest.size != inst.threshold:
        raise InvalidWitnessError(f"forest has {forest.size} edges instead of {inst.threshold}")
    return forest


def nae_assignment_from_forest(inst: NaeGadget, forest: ParityForest) -> Assignment:
    """
    Read an NAE-satisfying assignment off a 0-perfect forest with at least |V| - 2 edges.

    v_i is true exactly when x1_i lies in the tree that holds x1_1.

    Args:
    ----
        inst (NaeGadget): The gadget
        forest (ParityForest): A 0-perfect forest of the gadget graph

    Returns:
    -------
        Assignment: A checked NAE-satisfying assignment

    Raises:
    ------
        InvalidWitnessError: If the forest is invalid, too small, or yields a bad assignment

    """
    check_forest_witness(forest, inst.graph, inst.threshold)
    roles = inst.gadget.roles
    trees = connected_components(Graph(inst.graph.n, forest.edges))
    first_tree = next(t for t in trees if roles[_label("x1", 1)] in t)
    assignment = tuple(
        roles[_label("x1", i)] in first_tree for i in range(1, inst.cnf.num_vars + 1)
    )
    if not inst.cnf.nae_satisfied(assignment):
        raise InvalidWitnessError("forest does not encode an NAE-satisfying assignment")
    log.debug("Recovered assignment %s", assignment)
    return assignment
