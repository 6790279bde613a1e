"""Parity targets, parity forests and their verification and construction."""

import enum
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from perfect_forests.exceptions import AlgorithmInvariantError, InfeasibleInputError
from perfect_forests.graph import (
    Edge,
    Graph,
    VertexMap,
    bfs_path,
    block_decomposition,
    connected_components,
    normalize_edge,
)

log: logging.Logger = logging.getLogger(__name__)


class ParityTarget:
    """
    A per-vertex target parity f with an even sum.

    Raises:
    ------
        InfeasibleInputError: When the bits sum to an odd number
        ValueError: When a value is not 0 or 1

    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int]) -> None:
        """Create a ParityTarget from a sequence of bits."""
        bits = tuple(int(b) for b in values)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"parity target values must be 0 or 1, got {bits}")
        if sum(bits) % 2:
            raise InfeasibleInputError(
                f"parity target has odd sum {sum(bits)}; no f-parity subgraph exists"
            )
        self._values = bits

    @classmethod
    def all_ones(cls, n: int) -> "ParityTarget":
        """Return f = 1 everywhere, the target of 0-perfect forests."""
        return cls([1] * n)

    @classmethod
    def all_ones_except(cls, n: int, v: int) -> "ParityTarget":
        """Return f = 1 everywhere except f(v) = 0, the target of 1-perfect forests."""
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        return cls(0 if i == v else 1 for i in range(n))

    @classmethod
    def zeros(cls, n: int) -> "ParityTarget":
        """Return f = 0 everywhere."""
        return cls([0] * n)

    @property
    def values(self) -> tuple[int, ...]:
        """The bits f(0), ..., f(n-1)."""
        return self._values

    def odd_vertices(self) -> list[int]:
        """Return the vertices with f(v) = 1, ascending."""
        return [v for v, b in enumerate(self._values) if b]

    def total(self) -> int:
        """Return the number of vertices with f(v) = 1."""
        return sum(self._values)

    def restrict(self, vmap: VertexMap) -> list[int]:
        """Return f read on the child vertices of vmap; the result need not be even-sum."""
        return [self._values[p] for p in vmap.to_parent]

    def __len__(self) -> int:
        """Return the number of vertices the target is defined on."""
        return len(self._values)

    def __getitem__(self, v: int) -> int:
        """Return f(v)."""
        return self._values[v]

    def __eq__(self, other: object) -> bool:
        """Compare bitwise."""
        if not isinstance(other, ParityTarget):
            return NotImplemented
        return self._values == other._values

    def __hash__(self) -> int:
        """Hash the bits."""
        return hash(self._values)

    def __repr__(self) -> str:
        """Show the bits."""
        return f"ParityTarget({list(self._values)})"


class ViolationKind(enum.StrEnum):
    """The forest invariant that failed."""

    NOT_SUBSET = "not-subset"
    CYCLE = "cycle"
    CHORD = "chord"
    PARITY = "parity"
    SIZE_MISMATCH = "size-mismatch"


@dataclass(frozen=True)
class Violation:
    """A failed invariant together with what shows it failed."""

    kind: ViolationKind
    witness: tuple[int, ...]
    message: str


@dataclass(frozen=True)
class Infeasible:
    """A well-formed question whose answer is that no forest exists."""

    reason: str


@dataclass(frozen=True)
class ParityForest:
    """
    An edge set of `host` claimed to be an f-parity perfect forest for `target`.

    Edges are normalized and sorted on construction.  Verification runs at
    most once per instance.
    """

    host: Graph
    target: ParityTarget
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        """Normalize the edge tuple."""
        object.__setattr__(
            self, "edges", tuple(sorted({normalize_edge(u, v) for u, v in self.edges}))
        )

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def violation(self) -> Violation | None:
        """The first failed invariant, or None when the forest is valid."""
        return check_edges(self.host, self.target, self.edges)

    @property
    def ok(self) -> bool:
        """True when the forest passes verification."""
        return self.violation is None

    def degrees(self) -> list[int]:
        """Return the degree of every vertex in the forest."""
        return edge_degrees(self.host.n, self.edges)


def edge_degrees(n: int, edges: Iterable[Edge]) -> list[int]:
    """Return per-vertex degrees of an edge collection on n vertices."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


class _DisjointSets:
    """Union-find with path halving and union by size."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


def check_edges(host: Graph, target: ParityTarget, edges: Sequence[Edge]) -> Violation | None:
    """
    Check an edge set against the three forest invariants.

    The checks run in the order subset, acyclicity, inducedness, parity and
    the first failure is reported.

    Args:
    ----
        host (Graph): The host graph
        target (ParityTarget): Required degree parities
        edges (Sequence[Edge]): Candidate edge set

    Returns:
    -------
        Violation | None: The first violated invariant with its witness, or None

    """
    if len(target) != host.n:
        return Violation(
            ViolationKind.SIZE_MISMATCH,
            (len(target), host.n),
            f"target defined on {len(target)} vertices, host has {host.n}",
        )
    for u, v in edges:
        if not host.has_edge(u, v):
            return Violation(ViolationKind.NOT_SUBSET, (u, v), f"{u}-{v} is not a host edge")

    sets = _DisjointSets(host.n)
    seen: list[Edge] = []
    for u, v in edges:
        if not sets.union(u, v):
            partial = Graph(host.n, seen)
            path = bfs_path(partial, v, u) or [v, u]
            return Violation(
                ViolationKind.CYCLE, tuple([u, *path]), f"cycle through edge {u}-{v}"
            )
        seen.append((u, v))

    chosen = {normalize_edge(u, v) for u, v in edges}
    for u, v in host.edges:
        if (u, v) not in chosen and sets.find(u) == sets.find(v):
            return Violation(
                ViolationKind.CHORD, (u, v), f"{u}-{v} joins two vertices of one tree"
            )

    for x, d in enumerate(edge_degrees(host.n, edges)):
        if d % 2 != target[x]:
            return Violation(
                ViolationKind.PARITY,
                (x,),
                f"vertex {x} has degree {d}, target parity {target[x]}",
            )
    return None


def verify(forest: ParityForest) -> Violation | None:
    """Return None if the forest is a valid f-parity perfect forest, else the first violation."""
    return forest.violation


def require_verified(forest: ParityForest, where: str) -> ParityForest:
    """Return the forest unchanged, or raise AlgorithmInvariantError naming the violation."""
    if forest.violation is not None:
        raise AlgorithmInvariantError(f"{where} produced an invalid forest: {forest.violation.message}")
    return forest


def is_proper(forest: ParityForest) -> bool:
    """Return True if no vertex is isolated in the forest."""
    return all(d >= 1 for d in forest.degrees())


def even_degree_vertices(forest: ParityForest) -> list[int]:
    """Return the vertices of even forest degree, isolated ones included."""
    return [v for v, d in enumerate(forest.degrees()) if d % 2 == 0]


def lift_forest(forest: ParityForest, host: Graph, target: ParityTarget, vmap: VertexMap) -> ParityForest:
    """Translate a forest of a re-indexed subgraph into `host` with the given target."""
    return ParityForest(host, target, tuple(vmap.lift_edges(forest.edges)))


def _require_connected(g: Graph, what: str) -> None:
    if len(connected_components(g)) > 1:
        raise InfeasibleInputError(f"{what} needs a connected graph")


def _require_size(g: Graph, f: ParityTarget) -> None:
    if len(f) != g.n:
        raise ValueError(f"target defined on {len(f)} vertices, graph has {g.n}")


def xor_paths_subgraph(g: Graph, f: ParityTarget) -> list[Edge]:
    """
    Build an f-parity subgraph as the symmetric difference of paths.

    Odd-target vertices are paired in ascending order and joined by BFS
    paths; an edge is kept when it lies on an odd number of the paths.

    Args:
    ----
        g (Graph): A connected graph
        f (ParityTarget): Even-sum target

    Returns:
    -------
        list[Edge]: Sorted edges whose degree parities equal f

    """
    _require_size(g, f)
    _require_connected(g, "xor_paths_subgraph")
    odd = f.odd_vertices()
    picked: set[Edge] = set()
    for a, b in zip(odd[::2], odd[1::2], strict=True):
        path = bfs_path(g, a, b)
        if path is None:
            raise AlgorithmInvariantError(f"no path between {a} and {b} in a connected graph")
        for x, y in zip(path, path[1:]):
            picked ^= {normalize_edge(x, y)}
    return sorted(picked)


def _first_cycle_edge(h: Graph) -> Edge | None:
    """Return the lowest edge of h that lies on a cycle, or None if h is a forest."""
    blocks = block_decomposition(h)
    on_cycles = [e for edges in blocks.block_edges if len(edges) > 1 for e in edges]
    return min(on_cycles) if on_cycles else None


def minimize_to_forest(g: Graph, edges: Iterable[Edge]) -> ParityForest:
    """
    Shrink a parity subgraph to a semiperfect forest with the same degree parities.

    Cycles are deleted first, always the one through the lowest cycle edge;
    then the lowest chord of a tree replaces the tree path between its ends.
    Every step lowers the edge count, so the loop terminates.

    Args:
    ----
        g (Graph): The host graph
        edges (Iterable[Edge]): Edge set with an even-sum parity profile

    Returns:
    -------
        ParityForest: A verified forest whose target is the input's parity profile

    """
    current = {normalize_edge(u, v) for u, v in edges}
    target = ParityTarget(d % 2 for d in edge_degrees(g.n, current))
    steps = 0
    while True:
        h = Graph(g.n, current)
        cycle_edge = _first_cycle_edge(h)
        if cycle_edge is not None:
            u, v = cycle_edge
            path = bfs_path(h.without_edge(u, v), u, v)
            if path is None:
                raise AlgorithmInvariantError(f"edge {cycle_edge} reported on a cycle but has none")
            current.discard(cycle_edge)
            current.difference_update(normalize_edge(x, y) for x, y in zip(path, path[1:]))
            steps += 1
            continue

        label = [0] * g.n
        for i, comp in enumerate(connected_components(h)):
            for x in comp:
                label[x] = i
        chord = next(
            (e for e in g.edges if e not in current and label[e[0]] == label[e[1]]),
            None,
        )
        if chord is None:
            break
        x, y = chord
        path = bfs_path(h, x, y)
        if path is None:
            raise AlgorithmInvariantError(f"chord {chord} joins different trees")
        current.difference_update(normalize_edge(a, b) for a, b in zip(path, path[1:]))
        current.add(chord)
        steps += 1

    log.debug("Minimized to %d edges in %d steps", len(current), steps)
    return require_verified(ParityForest(g, target, tuple(current)), "minimize_to_forest")


def exists_f_parity_forest(g: Graph, f: ParityTarget) -> ParityForest:
    """
    Construct some f-parity perfect forest of a connected graph.

    Args:
    ----
        g (Graph): A connected graph
        f (ParityTarget): Even-sum target on V(g)

    Returns:
    -------
        ParityForest: A verified forest for f

    Raises:
    ------
        InfeasibleInputError: If g is disconnected

    """
    minimized = minimize_to_forest(g, xor_paths_subgraph(g, f))
    if minimized.target != f:
        raise AlgorithmInvariantError("parity profile changed while minimizing")
    return minimized


def exists_f_parity_forest_per_component(g: Graph, f: ParityTarget) -> ParityForest:
    """
    Construct an f-parity perfect forest of a possibly disconnected graph.

    Raises:
    ------
        InfeasibleInputError: If f has an odd sum on some component

    """
    _require_size(g, f)
    edges: list[Edge] = []
    for comp in connected_components(g):
        sub, vmap = g.induced_subgraph(comp)
        bits = f.restrict(vmap)
        if sum(bits) % 2:
            raise InfeasibleInputError(
                f"target has odd sum on the component containing vertex {min(comp)}"
            )
        part = exists_f_parity_forest(sub, ParityTarget(bits))
        edges.extend(vmap.lift_edges(part.edges))
    return require_verified(ParityForest(g, f, tuple(edges)), "exists_f_parity_forest_per_component")


def is_odd_degree_tree(g: Graph) -> bool:
    """Return True if g is a tree in which every vertex has odd degree."""
    return (
        g.n >= 2
        and g.m == g.n - 1
        and len(connected_components(g)) == 1
        and all(g.degree(v) % 2 == 1 for v in g.vertices())
    )
