"""Deciding, and constructing, f-parity perfect forests that avoid a given edge."""

import logging
from dataclasses import dataclass

from perfect_forests.exceptions import AlgorithmInvariantError, InfeasibleInputError
from perfect_forests.forest import (
    Infeasible,
    ParityForest,
    ParityTarget,
    exists_f_parity_forest,
    require_verified,
)
from perfect_forests.graph import (
    Edge,
    Graph,
    VertexMap,
    block_decomposition,
    connected_components,
    is_connected,
    is_two_connected,
    normalize_edge,
    two_disjoint_paths_through,
)

log: logging.Logger = logging.getLogger(__name__)

ODD_TARGETS_ONLY_AT_EDGE = "claim-C-sum-2"


@dataclass(frozen=True)
class CutVertexReduction:
    """
    The result of splitting a graph at a cut vertex away from the avoided edge.

    `graph` keeps the component holding the edge plus the cut vertex;
    `remainder` is everything else plus the cut vertex.  Both are
    re-indexed and carry a map to the graph that was split.
    """

    graph: Graph
    vmap: VertexMap
    edge: Edge
    target: ParityTarget
    remainder: Graph
    remainder_vmap: VertexMap
    remainder_target: ParityTarget


def reduce_at_cut_vertex(g: Graph, e: Edge, f: ParityTarget, x: int) -> CutVertexReduction:
    """
    Shrink the instance to the side of cut vertex x that holds e.

    The kept side gets f'(x) chosen to make its sum even; the detached side
    gets the complementary value so that both halves combine to f at x.

    Args:
    ----
        g (Graph): The host graph
        e (Edge): The edge to avoid
        f (ParityTarget): Even-sum target
        x (int): A cut vertex of g

    Returns:
    -------
        CutVertexReduction: Both halves of the split

    """
    u, v = e
    rest, rest_map = g.delete_vertices([x])
    anchor = u if u != x else v
    anchor_child = rest_map.to_child(anchor)
    assert anchor_child is not None
    component = next(c for c in connected_components(rest) if anchor_child in c)
    kept = {rest_map.lift(c) for c in component}
    if len(kept) == g.n - 1:
        raise ValueError(f"vertex {x} is not a cut vertex")

    side_sum = sum(f[c] for c in kept) % 2
    sub, vmap = g.induced_subgraph(kept | {x})
    bits = f.restrict(vmap)
    bits[vmap.child_ids[x]] = side_sum

    other, other_map = g.delete_vertices(kept)
    other_bits = f.restrict(other_map)
    other_bits[other_map.child_ids[x]] = (side_sum + f[x]) % 2

    log.debug("Cut vertex %d keeps %d of %d vertices", x, sub.n, g.n)
    return CutVertexReduction(
        graph=sub,
        vmap=vmap,
        edge=normalize_edge(vmap.child_ids[u], vmap.child_ids[v]),
        target=ParityTarget(bits),
        remainder=other,
        remainder_vmap=other_map,
        remainder_target=ParityTarget(other_bits),
    )


def _spanning_tree_through(g: Graph, path: list[int], w: int) -> list[Edge]:
    """Extend a path to a spanning tree in which w keeps only its two path edges."""
    in_tree = set(path)
    tree = [normalize_edge(a, b) for a, b in zip(path, path[1:])]
    while len(in_tree) < g.n:
        attach = next(
            (
                (y, min(g.neighbours(y) & in_tree - {w}))
                for y in g.vertices()
                if y not in in_tree and g.neighbours(y) & in_tree - {w}
            ),
            None,
        )
        if attach is None:
            raise AlgorithmInvariantError(
                f"spanning tree growth stuck at {len(in_tree)} of {g.n} vertices"
            )
        y, parent = attach
        in_tree.add(y)
        tree.append(normalize_edge(y, parent))
    return tree


def _tree_side(tree: list[Edge], start: int, w: int) -> set[int]:
    """Return the vertices reachable from start in the tree without passing w."""
    adjacency: dict[int, list[int]] = {}
    for a, b in tree:
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for b in adjacency.get(a, []):
            if b != w and b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


def _solve_on(g: Graph, f: ParityTarget, part: set[int]) -> list[Edge]:
    sub, vmap = g.induced_subgraph(part)
    bits = f.restrict(vmap)
    forest = exists_f_parity_forest(sub, ParityTarget(bits))
    return vmap.lift_edges(forest.edges)


def construct_2connected_case(g: Graph, e: Edge, f: ParityTarget) -> ParityForest:
    """
    Build a forest avoiding e = uv in a graph without cut vertices.

    With f(u) = 0 (or f(v) = 0) the endpoint is left isolated and the rest
    is solved directly.  Otherwise a u-v path through an odd vertex w is
    extended to a spanning tree, the tree is cut at w, and each side is
    solved on its own.

    Args:
    ----
        g (Graph): A graph with no cut vertex
        e (Edge): The edge to avoid
        f (ParityTarget): Even-sum target, not odd only at u and v

    Returns:
    -------
        ParityForest: A verified forest not containing e

    Raises:
    ------
        ValueError: If g has a cut vertex

    """
    if not is_two_connected(g):
        raise ValueError("construct_2connected_case needs a graph without cut vertices")
    u, v = e
    if f.total() == 0:
        return ParityForest(g, f, ())

    for endpoint in (u, v):
        if f[endpoint] == 0:
            log.debug("Endpoint %d has even target; leaving it isolated", endpoint)
            rest = set(g.vertices()) - {endpoint}
            forest = ParityForest(g, f, tuple(_solve_on(g, f, rest)))
            return require_verified(forest, "construct_2connected_case")

    if f.total() == 2:
        raise AlgorithmInvariantError("only u and v have odd targets; no avoiding forest exists")

    w = next(z for z in g.vertices() if z not in (u, v) and f[z] == 1)
    path = two_disjoint_paths_through(g, w, u, v)
    if path is None:
        raise AlgorithmInvariantError(f"no {u}-{v} path through {w} in a 2-connected graph")
    tree = _spanning_tree_through(g, path, w)
    side_u = _tree_side(tree, u, w)
    side_v = set(g.vertices()) - side_u - {w}
    if sum(f[z] for z in side_u) % 2:
        side_u.add(w)
    else:
        side_v.add(w)
    log.debug("Split at %d into sides of %d and %d vertices", w, len(side_u), len(side_v))

    edges = _solve_on(g, f, side_u) + _solve_on(g, f, side_v)
    return require_verified(ParityForest(g, f, tuple(edges)), "construct_2connected_case")


def decide_avoid_edge(g: Graph, e: Edge, f: ParityTarget) -> ParityForest | Infeasible:
    """
    Decide whether g has an f-parity perfect forest avoiding e, and build one if so.

    Cut vertices are peeled off one at a time (lowest id first), each
    detached side being solved directly.  What remains has no cut vertex and
    is infeasible exactly when u and v are its only odd-target vertices.

    Args:
    ----
        g (Graph): A connected graph
        e (Edge): An edge of g
        f (ParityTarget): Even-sum target

    Returns:
    -------
        ParityForest | Infeasible: A verified forest without e, or the reason none exists

    Raises:
    ------
        InfeasibleInputError: If g is disconnected
        ValueError: If e is not an edge of g

    """
    if len(f) != g.n:
        raise ValueError(f"target defined on {len(f)} vertices, graph has {g.n}")
    if not g.has_edge(*e):
        raise ValueError(f"{e} is not an edge of the graph")
    if not is_connected(g):
        raise InfeasibleInputError("decide_avoid_edge needs a connected graph")

    root_edge = normalize_edge(*e)
    cur, cur_edge, cur_f = g, root_edge, f
    to_root = VertexMap(tuple(g.vertices()))
    collected: list[Edge] = []

    while True:
        cuts = block_decomposition(cur).cut_vertices
        if not cuts:
            break
        x = min(cuts)
        red = reduce_at_cut_vertex(cur, cur_edge, cur_f, x)
        detached = exists_f_parity_forest(red.remainder, red.remainder_target)
        collected.extend(to_root.compose(red.remainder_vmap).lift_edges(detached.edges))
        to_root = to_root.compose(red.vmap)
        cur, cur_edge, cur_f = red.graph, red.edge, red.target

    u, v = cur_edge
    if cur_f[u] == 1 and cur_f[v] == 1 and cur_f.total() == 2:
        log.info("No forest avoids %s: only its endpoints have odd targets", root_edge)
        return Infeasible(ODD_TARGETS_ONLY_AT_EDGE)

    core = construct_2connected_case(cur, cur_edge, cur_f)
    collected.extend(to_root.lift_edges(core.edges))
    forest = require_verified(ParityForest(g, f, tuple(collected)), "decide_avoid_edge")
    if root_edge in forest.edges:
        raise AlgorithmInvariantError(f"forest contains the avoided edge {root_edge}")
    return forest
