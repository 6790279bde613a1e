"""Induced cycles through two edges versus 0-perfect forests containing an edge."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from perfect_forests.exceptions import InvalidWitnessError
from perfect_forests.forest import ParityForest, ParityTarget, require_verified
from perfect_forests.graph import Edge, Graph, connected_components, normalize_edge
from perfect_forests.reductions.common import (
    GadgetInstance,
    check_forest_witness,
    check_induced_cycle,
    walk_path,
)

log: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContainingEdgeGadget:
    """
    h = g - e1 with a pendant on every vertex except the ends of e1.

    Vertices of g keep their ids; pendant ids follow in ascending anchor order.
    """

    source: Graph
    e1: Edge
    e2: Edge
    pendant_of: dict[int, int]
    gadget: GadgetInstance

    @property
    def graph(self) -> Graph:
        """The graph h."""
        return self.gadget.graph

    @property
    def required_edge(self) -> Edge:
        """The edge the forest has to contain."""
        return self.gadget.marked_edges["e2"]


def containing_edge_instance(g: Graph, e1: Edge, e2: Edge) -> ContainingEdgeGadget:
    """
    Build h and e2' from g, e1 and e2.

    Args:
    ----
        g (Graph): Any graph
        e1 (Edge): Edge of g the cycle must use; it is deleted in h
        e2 (Edge): Second edge of g the cycle must use

    Returns:
    -------
        ContainingEdgeGadget: h with e2' = e2 marked

    Raises:
    ------
        ValueError: If e1 = e2 or either is not an edge of g

    """
    e1, e2 = normalize_edge(*e1), normalize_edge(*e2)
    if e1 == e2:
        raise ValueError("e1 and e2 must be different edges")
    for name, e in (("e1", e1), ("e2", e2)):
        if not g.has_edge(*e):
            raise ValueError(f"{name} = {e} is not an edge of the graph")
    h, pendant_of = g.without_edge(*e1).with_pendants(v for v in g.vertices() if v not in e1)
    roles = {f"v_{v}": v for v in g.vertices()}
    roles |= {f"pendant-of:v_{v}": p for v, p in pendant_of.items()}
    log.info("Containing-edge instance with %d vertices from %d", h.n, g.n)
    return ContainingEdgeGadget(
        source=g,
        e1=e1,
        e2=e2,
        pendant_of=pendant_of,
        gadget=GadgetInstance("containing-edge", h, roles, {"n": g.n}, {"e1": e1, "e2": e2}),
    )


def forest_from_cycle(inst: ContainingEdgeGadget, cycle: Sequence[int]) -> ParityForest:
    """
    Turn an induced cycle of g through e1 and e2 into a 0-perfect forest of h containing e2.

    The cycle minus e1 is kept as a path and every pendant edge is added.
    """
    check_induced_cycle(inst.source, cycle, (inst.e1, inst.e2))
    ring = [normalize_edge(a, b) for a, b in zip(cycle, [*cycle[1:], cycle[0]])]
    edges = [e for e in ring if e != inst.e1]
    edges += [normalize_edge(v, p) for v, p in inst.pendant_of.items()]
    forest = require_verified(
        ParityForest(inst.graph, ParityTarget.all_ones(inst.graph.n), tuple(edges)),
        "forest_from_cycle",
    )
    if inst.required_edge not in forest.edges:
        raise InvalidWitnessError(f"forest misses {inst.required_edge}")
    return forest


def cycle_from_forest(inst: ContainingEdgeGadget, forest: ParityForest) -> list[int]:
    """
    Recover an induced cycle of g through e1 and e2 from a 0-perfect forest of h containing e2.

    Without its pendant edges the forest is a single path between the ends
    of e1 plus isolated vertices; closing it with e1 gives the cycle.
    """
    check_forest_witness(forest, inst.graph, 0)
    if inst.required_edge not in forest.edges:
        raise InvalidWitnessError(f"forest does not contain {inst.required_edge}")
    pendants = {normalize_edge(v, p) for v, p in inst.pendant_of.items()}
    core = [e for e in forest.edges if e not in pendants]
    u1, _ = inst.e1
    component = next(c for c in connected_components(Graph(inst.graph.n, core)) if u1 in c)
    cycle = walk_path((e for e in core if e[0] in component), u1)
    check_induced_cycle(inst.source, cycle, (inst.e1, inst.e2))
    return cycle
