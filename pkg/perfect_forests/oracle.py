"""
Brute-force reference answers for every problem the package solves.

Nothing here calls the algorithms it is used to check: forests are
enumerated with a separate union-find and checked with separate parity and
inducedness logic.  Every function refuses instances above its cap with
OracleLimitError.
"""

import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product

from perfect_forests.exceptions import OracleLimitError
from perfect_forests.forest import ParityForest, ParityTarget
from perfect_forests.graph import Edge, Graph, normalize_edge
from perfect_forests.matching import WeightedGraph

log: logging.Logger = logging.getLogger(__name__)

DEFAULT_EDGE_CAP = 22
DEFAULT_CYCLE_VERTEX_CAP = 14
DEFAULT_SAT_VAR_CAP = 20
DEFAULT_INDSET_VERTEX_CAP = 20
MATCHING_VERTEX_CAP = 16


@dataclass(frozen=True)
class OracleLimits:
    """Caps applied by the oracles."""

    edge_cap: int = DEFAULT_EDGE_CAP
    cycle_vertex_cap: int = DEFAULT_CYCLE_VERTEX_CAP
    sat_var_cap: int = DEFAULT_SAT_VAR_CAP
    indset_vertex_cap: int = DEFAULT_INDSET_VERTEX_CAP
    jobs: int = 1


class _UndoUnionFind:
    """Union by size without compression, so merges can be undone in stack order."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.members: list[list[int]] = [[v] for v in range(n)]
        self.history: list[tuple[int, int]] = []

    def root(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def merge(self, rx: int, ry: int) -> None:
        if len(self.members[rx]) < len(self.members[ry]):
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.members[rx].extend(self.members[ry])
        self.history.append((rx, ry))

    def undo(self) -> None:
        rx, ry = self.history.pop()
        self.parent[ry] = ry
        del self.members[rx][len(self.members[rx]) - len(self.members[ry]) :]


class _ForestSearch:
    """
    Depth-first search over edge subsets in ascending mask order.

    Edge 0 is the most significant bit, so excluding an edge before
    including it lists subsets in ascending mask order.  A branch is cut as
    soon as an inclusion closes a cycle, merges two trees joined by another
    edge of the host, or a vertex whose edges are all decided has the wrong
    degree parity.
    """

    def __init__(self, g: Graph, f: ParityTarget) -> None:
        self.g = g
        self.f = f
        self.edges = list(g.edges)
        self.adjacency = [sorted(g.neighbours(v)) for v in g.vertices()]
        self.finished_at: dict[int, list[int]] = {}
        for v in g.vertices():
            last = max((i for i, e in enumerate(self.edges) if v in e), default=-1)
            self.finished_at.setdefault(last, []).append(v)

    def _joined_elsewhere(self, uf: _UndoUnionFind, ru: int, rv: int, u: int, v: int) -> bool:
        small, other = (ru, rv) if len(uf.members[ru]) <= len(uf.members[rv]) else (rv, ru)
        for a in uf.members[small]:
            for b in self.adjacency[a]:
                if uf.root(b) == other and {a, b} != {u, v}:
                    return True
        return False

    def _parity_ok(self, degree: list[int], vertices: list[int]) -> bool:
        return all(degree[v] % 2 == self.f[v] for v in vertices)

    def run(self, prefix: Sequence[bool] = ()) -> Iterator[tuple[Edge, ...]]:
        """Yield every valid edge subset whose first decisions match prefix."""
        if not self._parity_ok([0] * self.g.n, self.finished_at.get(-1, [])):
            return
        uf = _UndoUnionFind(self.g.n)
        degree = [0] * self.g.n
        chosen: list[Edge] = []

        def step(i: int) -> Iterator[tuple[Edge, ...]]:
            if i == len(self.edges):
                yield tuple(chosen)
                return
            options = (prefix[i],) if i < len(prefix) else (False, True)
            u, v = self.edges[i]
            for take in options:
                if not take:
                    if self._parity_ok(degree, self.finished_at.get(i, [])):
                        yield from step(i + 1)
                    continue
                ru, rv = uf.root(u), uf.root(v)
                if ru == rv or self._joined_elsewhere(uf, ru, rv, u, v):
                    continue
                uf.merge(ru, rv)
                degree[u] += 1
                degree[v] += 1
                chosen.append((u, v))
                if self._parity_ok(degree, self.finished_at.get(i, [])):
                    yield from step(i + 1)
                chosen.pop()
                degree[u] -= 1
                degree[v] -= 1
                uf.undo()

        yield from step(0)


def _enumerate_prefix(job: tuple[Graph, ParityTarget, tuple[bool, ...]]) -> list[tuple[Edge, ...]]:
    g, f, prefix = job
    return list(_ForestSearch(g, f).run(prefix))


def _prefix_bits(jobs: int, m: int) -> int:
    bits = 0
    while (1 << bits) < 4 * jobs and bits < m:
        bits += 1
    return bits


def enumerate_parity_forests(
    g: Graph, f: ParityTarget, edge_cap: int = DEFAULT_EDGE_CAP, jobs: int = 1
) -> Iterator[ParityForest]:
    """
    Yield every f-parity perfect forest of g in ascending edge-mask order.

    With jobs > 1 the search is split by the decisions on the first few
    edges and the parts run in a process pool; the order is unchanged.

    Args:
    ----
        g (Graph): The host graph
        f (ParityTarget): Degree parities
        edge_cap (int): Largest edge count accepted
        jobs (int): Worker processes

    Raises:
    ------
        OracleLimitError: If g has more than edge_cap edges

    """
    if g.m > edge_cap:
        raise OracleLimitError(f"graph has {g.m} edges, enumeration cap is {edge_cap}")
    if len(f) != g.n:
        raise ValueError(f"target defined on {len(f)} vertices, graph has {g.n}")
    if jobs <= 1:
        for edges in _ForestSearch(g, f).run():
            yield ParityForest(g, f, edges)
        return

    bits = _prefix_bits(jobs, g.m)
    prefixes = [tuple(bool(p >> (bits - 1 - b) & 1) for b in range(bits)) for p in range(1 << bits)]
    log.info("Splitting enumeration over %d prefixes across %d workers", len(prefixes), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_enumerate_prefix, [(g, f, p) for p in prefixes]):
            for edges in part:
                yield ParityForest(g, f, edges)


def bf_min_forest(g: Graph, f: ParityTarget, limits: OracleLimits = OracleLimits()) -> ParityForest | None:
    """Return the first forest of minimum size, or None when there is none."""
    best: ParityForest | None = None
    for forest in enumerate_parity_forests(g, f, limits.edge_cap, limits.jobs):
        if best is None or forest.size < best.size:
            best = forest
    return best


def bf_max_forest(g: Graph, f: ParityTarget, limits: OracleLimits = OracleLimits()) -> ParityForest | None:
    """Return the first forest of maximum size, or None when there is none."""
    best: ParityForest | None = None
    for forest in enumerate_parity_forests(g, f, limits.edge_cap, limits.jobs):
        if best is None or forest.size > best.size:
            best = forest
    return best


def bf_max_zero_forest(g: Graph, limits: OracleLimits = OracleLimits()) -> ParityForest | None:
    """Return a maximum 0-perfect forest (all degrees odd), or None for odd order."""
    if g.n % 2:
        return None
    return bf_max_forest(g, ParityTarget.all_ones(g.n), limits)


def bf_exists_avoiding(
    g: Graph, e: Edge, f: ParityTarget, limits: OracleLimits = OracleLimits()
) -> ParityForest | None:
    """Return the first forest without e, or None."""
    e = normalize_edge(*e)
    return next(
        (x for x in enumerate_parity_forests(g, f, limits.edge_cap, limits.jobs) if e not in x.edges),
        None,
    )


def bf_exists_containing(
    g: Graph, e: Edge, f: ParityTarget, limits: OracleLimits = OracleLimits()
) -> ParityForest | None:
    """Return the first forest using e, or None."""
    e = normalize_edge(*e)
    return next(
        (x for x in enumerate_parity_forests(g, f, limits.edge_cap, limits.jobs) if e in x.edges),
        None,
    )


def bf_proper_one_forest(g: Graph, limits: OracleLimits = OracleLimits()) -> ParityForest | None:
    """Return a forest with exactly one even-degree vertex and no isolated vertex, or None."""
    if g.n % 2 == 0:
        return None
    for x in g.vertices():
        target = ParityTarget([0 if v == x else 1 for v in g.vertices()])
        for forest in enumerate_parity_forests(g, target, limits.edge_cap, limits.jobs):
            if any(a == x or b == x for a, b in forest.edges):
                return forest
    return None


def bf_induced_cycle_through(
    g: Graph, e1: Edge, e2: Edge, limits: OracleLimits = OracleLimits()
) -> list[int] | None:
    """
    Find an induced cycle of g that uses both e1 and e2.

    Paths grow from e1 = uv only through vertices with no neighbour on the
    path other than the last vertex; meeting u again closes a cycle.

    Returns:
    -------
        list[int] | None: The cycle starting u, v, or None

    """
    if g.n > limits.cycle_vertex_cap:
        raise OracleLimitError(f"graph has {g.n} vertices, cycle search cap is {limits.cycle_vertex_cap}")
    e1, e2 = normalize_edge(*e1), normalize_edge(*e2)
    u, v = e1
    if not (g.has_edge(u, v) and g.has_edge(*e2)):
        return None

    path = [u, v]

    def closes_through_e2() -> bool:
        ring = zip(path, [*path[1:], path[0]])
        return any(normalize_edge(a, b) == e2 for a, b in ring)

    def grow() -> list[int] | None:
        last = path[-1]
        on_path = set(path)
        for x in sorted(g.neighbours(last) - on_path):
            touching = (g.neighbours(x) & on_path) - {last}
            if not touching:
                path.append(x)
                found = grow()
                if found is not None:
                    return found
                path.pop()
            elif touching == {u}:
                path.append(x)
                if closes_through_e2():
                    return list(path)
                path.pop()
        return None

    return grow()


def _literal(lit: int, values: Sequence[bool]) -> bool:
    return values[abs(lit) - 1] == (lit > 0)


def _truth_table(num_vars: int, cap: int) -> Iterator[tuple[bool, ...]]:
    if num_vars > cap:
        raise OracleLimitError(f"{num_vars} variables, truth-table cap is {cap}")
    return product((False, True), repeat=num_vars)


def bf_satisfiable(
    num_vars: int, clauses: Sequence[Sequence[int]], limits: OracleLimits = OracleLimits()
) -> tuple[bool, ...] | None:
    """Return the first satisfying assignment in truth-table order, or None."""
    for values in _truth_table(num_vars, limits.sat_var_cap):
        if all(any(_literal(lit, values) for lit in c) for c in clauses):
            return values
    return None


def bf_nae_satisfiable(
    num_vars: int, clauses: Sequence[Sequence[int]], limits: OracleLimits = OracleLimits()
) -> tuple[bool, ...] | None:
    """Return the first assignment giving every clause a true and a false literal, or None."""
    for values in _truth_table(num_vars, limits.sat_var_cap):
        if all(len({_literal(lit, values) for lit in c}) == 2 for c in clauses):
            return values
    return None


def bf_max_independent_set(g: Graph, limits: OracleLimits = OracleLimits()) -> tuple[int, ...]:
    """Return the lexicographically first independent set of maximum size."""
    if g.n > limits.indset_vertex_cap:
        raise OracleLimitError(f"graph has {g.n} vertices, independent-set cap is {limits.indset_vertex_cap}")
    for size in range(g.n, 0, -1):
        for subset in combinations(g.vertices(), size):
            if not any(g.has_edge(a, b) for a, b in combinations(subset, 2)):
                return subset
    return ()


def bf_min_perfect_matching(wg: WeightedGraph) -> tuple[int, tuple[Edge, ...]] | None:
    """
    Return the weight and edges of a minimum-weight perfect matching, or None.

    The lowest unmatched vertex is paired with each neighbour in turn.
    """
    g = wg.base
    if g.n > MATCHING_VERTEX_CAP:
        raise OracleLimitError(f"graph has {g.n} vertices, matching cap is {MATCHING_VERTEX_CAP}")
    if g.n % 2:
        return None
    matched = [False] * g.n
    best: list[tuple[int, tuple[Edge, ...]]] = []
    picked: list[Edge] = []

    def pair(weight: int) -> None:
        free = next((v for v in g.vertices() if not matched[v]), None)
        if free is None:
            if not best or weight < best[0][0]:
                best[:] = [(weight, tuple(sorted(picked)))]
            return
        matched[free] = True
        for other in sorted(g.neighbours(free)):
            if matched[other]:
                continue
            matched[other] = True
            picked.append(normalize_edge(free, other))
            pair(weight + wg.weight(free, other))
            picked.pop()
            matched[other] = False
        matched[free] = False

    pair(0)
    return best[0] if best else None
