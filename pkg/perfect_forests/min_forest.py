"""Minimum-size f-parity perfect forests through an auxiliary matching instance."""

import logging
from collections import Counter
from dataclasses import dataclass

from perfect_forests.exceptions import AlgorithmInvariantError, InfeasibleInputError
from perfect_forests.forest import (
    ParityForest,
    ParityTarget,
    edge_degrees,
    minimize_to_forest,
    require_verified,
)
from perfect_forests.graph import Edge, Graph, connected_components, normalize_edge
from perfect_forests.matching import Matching, WeightedGraph, min_weight_perfect_matching

log: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AuxiliaryMatchingInstance:
    """
    The weighted graph whose minimum perfect matchings encode minimum parity subgraphs.

    Every vertex v_i of the source graph becomes a set X_i of copies.  X_i
    carries a zero-weight matching M_i that leaves out its highest copy when
    |X_i| is odd.  Copies of adjacent vertices are joined completely with
    weight-1 edges, and `cross_map` sends each of those back to its source edge.
    """

    source: Graph
    target: ParityTarget
    aux: WeightedGraph
    copy_sets: tuple[tuple[int, ...], ...]
    intra_matchings: tuple[tuple[Edge, ...], ...]
    free_vertex: tuple[int | None, ...]
    cross_map: dict[Edge, Edge]


def build_auxiliary(g: Graph, f: ParityTarget) -> AuxiliaryMatchingInstance:
    """
    Build the auxiliary matching instance for (g, f).

    |X_i| is n when n and f(v_i) have the same parity and n - 1 otherwise.

    Args:
    ----
        g (Graph): A connected graph
        f (ParityTarget): Even-sum target

    Returns:
    -------
        AuxiliaryMatchingInstance: The instance, on at most n^2 vertices

    """
    if len(f) != g.n:
        raise ValueError(f"target defined on {len(f)} vertices, graph has {g.n}")
    if len(connected_components(g)) > 1:
        raise InfeasibleInputError("build_auxiliary needs a connected graph")

    n = g.n
    copy_sets: list[tuple[int, ...]] = []
    intra: list[tuple[Edge, ...]] = []
    free: list[int | None] = []
    weights: dict[Edge, int] = {}
    base = 0
    for i in range(n):
        size = n if n % 2 == f[i] else n - 1
        members = tuple(range(base, base + size))
        pairs = tuple((base + 2 * t, base + 2 * t + 1) for t in range(size // 2))
        copy_sets.append(members)
        intra.append(pairs)
        free.append(members[-1] if size % 2 else None)
        for e in pairs:
            weights[e] = 0
        base += size

    cross_map: dict[Edge, Edge] = {}
    for a, b in g.edges:
        for x in copy_sets[a]:
            for y in copy_sets[b]:
                e = normalize_edge(x, y)
                weights[e] = 1
                cross_map[e] = (a, b)

    aux = WeightedGraph(Graph(base, weights), weights)
    log.debug(
        "Auxiliary instance for n=%d: %d vertices, %d edges", n, aux.base.n, aux.base.m
    )
    return AuxiliaryMatchingInstance(
        source=g,
        target=f,
        aux=aux,
        copy_sets=tuple(copy_sets),
        intra_matchings=tuple(intra),
        free_vertex=tuple(free),
        cross_map=cross_map,
    )


def extract_multiset(inst: AuxiliaryMatchingInstance, m: Matching) -> list[Edge]:
    """
    Read source edges off the weight-1 edges of a perfect matching.

    Edges used an even number of times cancel out.

    Args:
    ----
        inst (AuxiliaryMatchingInstance): The instance m was computed on
        m (Matching): A perfect matching of inst.aux

    Returns:
    -------
        list[Edge]: Sorted source edges with degree parity equal to inst.target

    """
    counts = Counter(inst.cross_map[e] for e in m.edges if e in inst.cross_map)
    picked = sorted(e for e, c in counts.items() if c % 2)
    parities = [d % 2 for d in edge_degrees(inst.source.n, picked)]
    if tuple(parities) != inst.target.values:
        raise AlgorithmInvariantError("extracted edges do not have the target parities")
    return picked


def min_f_parity_forest(g: Graph, f: ParityTarget) -> ParityForest:
    """
    Find an f-parity perfect forest with as few edges as possible.

    Args:
    ----
        g (Graph): A connected graph
        f (ParityTarget): Even-sum target on V(g)

    Returns:
    -------
        ParityForest: A verified forest of minimum size

    Raises:
    ------
        InfeasibleInputError: If g is disconnected

    """
    inst = build_auxiliary(g, f)
    matching = min_weight_perfect_matching(inst.aux)
    if matching is None:
        raise AlgorithmInvariantError("auxiliary graph of a feasible instance has no perfect matching")
    edges = extract_multiset(inst, matching)
    forest = minimize_to_forest(g, edges)
    if forest.size != len(edges) or forest.target != f:
        raise AlgorithmInvariantError("minimum parity subgraph was not already a forest")
    log.info("Minimum f-parity forest has %d edges", forest.size)
    return require_verified(forest, "min_f_parity_forest")


def min_zero_perfect_forest(g: Graph) -> ParityForest:
    """Find a minimum 0-perfect forest (every degree odd) of a connected even-order graph."""
    if g.n % 2:
        raise InfeasibleInputError(f"0-perfect forests need even order, graph has {g.n} vertices")
    return min_f_parity_forest(g, ParityTarget.all_ones(g.n))
