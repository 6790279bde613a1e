"""1-perfect forests: the pendant construction, class B, and proper 1-perfect forests."""

import logging

from perfect_forests.exceptions import AlgorithmInvariantError, InfeasibleInputError
from perfect_forests.forest import (
    Infeasible,
    ParityForest,
    ParityTarget,
    even_degree_vertices,
    exists_f_parity_forest,
    is_proper,
    require_verified,
)
from perfect_forests.graph import (
    Edge,
    Graph,
    block_decomposition,
    connected_components,
    find_induced_p3,
    is_complete,
    normalize_edge,
)

log: logging.Logger = logging.getLogger(__name__)

CLASS_B = "class-B"


def one_perfect_forest(g: Graph, x: int) -> ParityForest:
    """
    Build a 1-perfect forest whose only even-degree vertex is x.

    A pendant is hung on x, the augmented graph (now of even order) gets a
    0-perfect forest, and the pendant is dropped again.

    Args:
    ----
        g (Graph): A connected graph of odd order
        x (int): The vertex that must end up with even degree

    Returns:
    -------
        ParityForest: A verified forest for f = 1 except f(x) = 0

    """
    if g.n % 2 == 0:
        raise InfeasibleInputError(f"1-perfect forests need odd order, graph has {g.n} vertices")
    if len(connected_components(g)) > 1:
        raise InfeasibleInputError("one_perfect_forest needs a connected graph")
    target = ParityTarget.all_ones_except(g.n, x)
    augmented, pendant_of = g.with_pendants([x])
    y = pendant_of[x]
    full = exists_f_parity_forest(augmented, ParityTarget.all_ones(augmented.n))
    edges = tuple(e for e in full.edges if y not in e)
    return require_verified(ParityForest(g, target, edges), "one_perfect_forest")


def is_class_B(g: Graph) -> bool:
    """Return True if g is connected and every block is a complete graph of odd order."""
    if g.n == 0 or len(connected_components(g)) > 1:
        return False
    return all(
        len(block) % 2 == 1 and is_complete(g, block)
        for block in block_decomposition(g).blocks
    )


def lemma_block_witness(g: Graph, x: int, y: int) -> int | None:
    """
    Pick one of the adjacent vertices x, y whose deletion leaves a graph outside class B.

    None is only possible when x and y have the same closed neighbourhood;
    any other None is reported as an invariant failure.

    Args:
    ----
        g (Graph): An even-order graph with g - {x, y} connected
        x (int): First end of an edge
        y (int): Second end of the edge

    Returns:
    -------
        int | None: x or y, or None

    """
    for candidate in (x, y):
        rest, _ = g.delete_vertices([candidate])
        if not is_class_B(rest):
            return candidate
    if g.closed_neighbourhood(x) != g.closed_neighbourhood(y):
        raise AlgorithmInvariantError(
            f"both {x} and {y} leave class-B graphs but their closed neighbourhoods differ"
        )
    return None


def _zero_perfect(g: Graph, part: set[int]) -> list[Edge]:
    sub, vmap = g.induced_subgraph(part)
    forest = exists_f_parity_forest(sub, ParityTarget.all_ones(sub.n))
    return vmap.lift_edges(forest.edges)


def _one_perfect_at(g: Graph, part: set[int], x: int) -> list[Edge]:
    sub, vmap = g.induced_subgraph(part)
    forest = one_perfect_forest(sub, vmap.child_ids[x])
    return vmap.lift_edges(forest.edges)


def _proper_on(g: Graph, part: set[int], depth: int) -> list[Edge]:
    sub, vmap = g.induced_subgraph(part)
    return vmap.lift_edges(_proper_edges(sub, depth + 1))


def _as_proper_forest(g: Graph, edges: list[Edge], where: str) -> ParityForest:
    """Wrap edges as a forest targeting their unique even vertex and check it."""
    degrees = [0] * g.n
    for a, b in edges:
        degrees[a] += 1
        degrees[b] += 1
    even = [v for v, d in enumerate(degrees) if d % 2 == 0]
    if len(even) != 1:
        raise AlgorithmInvariantError(f"{where}: expected one even vertex, found {even}")
    forest = require_verified(
        ParityForest(g, ParityTarget.all_ones_except(g.n, even[0]), tuple(edges)), where
    )
    if not is_proper(forest):
        raise AlgorithmInvariantError(f"{where}: forest has an isolated vertex")
    return forest


def _proper_edges(g: Graph, depth: int = 0) -> list[Edge]:
    """Edges of a proper 1-perfect forest of a connected odd-order graph outside class B."""
    everything = set(g.vertices())
    cuts = sorted(block_decomposition(g).cut_vertices)

    if cuts:
        for x in cuts:
            rest, rest_map = g.delete_vertices([x])
            for comp in connected_components(rest):
                if len(comp) % 2:
                    continue
                c1 = {rest_map.lift(c) for c in comp}
                g1_part = c1 | {x}
                g2_part = everything - c1
                g1, _ = g.induced_subgraph(g1_part)
                if not is_class_B(g1):
                    log.debug("depth %d: cut %d, recursing on the even side", depth, x)
                    edges = _proper_on(g, g1_part, depth) + _one_perfect_at(g, g2_part, x)
                else:
                    log.debug("depth %d: cut %d, recursing on the far side", depth, x)
                    edges = _proper_on(g, g2_part, depth) + _one_perfect_at(g, g1_part, x)
                return list(_as_proper_forest(g, edges, "cut vertex with even side").edges)

        x = cuts[0]
        rest, rest_map = g.delete_vertices([x])
        c1 = {rest_map.lift(c) for c in connected_components(rest)[0]}
        log.debug("depth %d: cut %d with only odd sides", depth, x)
        edges = _zero_perfect(g, c1 | {x}) + _zero_perfect(g, everything - c1)
        return list(_as_proper_forest(g, edges, "cut vertex with odd sides").edges)

    p3 = find_induced_p3(g)
    if p3 is None:
        raise AlgorithmInvariantError("2-connected graph outside class B is complete")
    p1, p2, p3_ = p3
    rest, rest_map = g.delete_vertices([p2, p3_])
    c1 = next(
        {rest_map.lift(c) for c in comp}
        for comp in connected_components(rest)
        if rest_map.child_ids[p1] in comp
    )

    if len(c1) % 2:
        log.debug("depth %d: induced path %s with odd side", depth, p3)
        edges = _one_perfect_at(g, c1, p1) + _zero_perfect(g, everything - c1)
        if not any(p1 in e for e in edges):
            edges.append(normalize_edge(p1, p2))
        return list(_as_proper_forest(g, edges, "induced path with odd side").edges)

    g_prime_part = c1 | {p2, p3_}
    g_prime, gp_map = g.induced_subgraph(g_prime_part)
    witness = lemma_block_witness(g_prime, gp_map.child_ids[p2], gp_map.child_ids[p3_])
    if witness is None:
        raise AlgorithmInvariantError(f"no witness among {p2}, {p3_} despite distinct neighbourhoods")
    p_i = gp_map.lift(witness)
    inner = g_prime_part - {p_i}
    log.debug("depth %d: induced path %s with even side, dropping %d", depth, p3, p_i)
    edges = _proper_on(g, inner, depth) + _zero_perfect(g, everything - inner)
    return list(_as_proper_forest(g, edges, "induced path with even side").edges)


def proper_one_perfect_forest(g: Graph) -> ParityForest | Infeasible:
    """
    Build a proper 1-perfect forest, or report that g lies in class B.

    Args:
    ----
        g (Graph): A connected graph of odd order at least 3

    Returns:
    -------
        ParityForest | Infeasible: A verified proper forest with exactly one even-degree vertex

    Raises:
    ------
        InfeasibleInputError: On even order, order below 3, or a disconnected graph

    """
    if g.n % 2 == 0 or g.n < 3:
        raise InfeasibleInputError(
            f"proper 1-perfect forests need odd order of at least 3, graph has {g.n} vertices"
        )
    if len(connected_components(g)) > 1:
        raise InfeasibleInputError("proper_one_perfect_forest needs a connected graph")
    if is_class_B(g):
        log.info("Graph is in class B; it has no proper 1-perfect forest")
        return Infeasible(CLASS_B)
    forest = _as_proper_forest(g, _proper_edges(g), "proper_one_perfect_forest")
    log.info(
        "Proper 1-perfect forest with %d edges, even vertex %s",
        forest.size,
        even_degree_vertices(forest),
    )
    return forest
