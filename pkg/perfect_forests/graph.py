"""Simple undirected graphs, connectivity and block decomposition."""

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from perfect_forests.exceptions import GraphFormatError

log: logging.Logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge uv with its smaller endpoint first."""
    return (u, v) if u < v else (v, u)


class Graph:
    """
    An immutable simple undirected graph on the vertices 0..n-1.

    Edges are kept sorted and normalized so that two graphs built from the
    same edge set compare equal and iterate in the same order.
    """

    __slots__ = ("_n", "_edges", "_edge_set", "_adjacency")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        """
        Create a Graph.

        Args:
        ----
            n (int): Number of vertices
            edges (Iterable[Sequence[int]]): Vertex pairs, in either endpoint order

        Raises:
        ------
            GraphFormatError: On loops, parallel edges or out-of-range endpoints

        """
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        adjacency: list[set[int]] = [set() for _ in range(n)]
        edge_set: set[Edge] = set()
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {u} {v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            e = normalize_edge(u, v)
            if e in edge_set:
                raise GraphFormatError(f"parallel edge {e[0]} {e[1]}")
            edge_set.add(e)
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._n = n
        self._edges: tuple[Edge, ...] = tuple(sorted(edge_set))
        self._edge_set: frozenset[Edge] = frozenset(edge_set)
        self._adjacency: tuple[frozenset[int], ...] = tuple(
            frozenset(a) for a in adjacency
        )

    @property
    def n(self) -> int:
        """Number of vertices."""
        return self._n

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges in ascending order, each with its smaller endpoint first."""
        return self._edges

    def vertices(self) -> range:
        """Return the vertex ids."""
        return range(self._n)

    def neighbours(self, v: int) -> frozenset[int]:
        """Return the open neighbourhood of v."""
        return self._adjacency[v]

    def closed_neighbourhood(self, v: int) -> frozenset[int]:
        """Return N[v], the neighbourhood of v together with v."""
        return self._adjacency[v] | {v}

    def degree(self, v: int) -> int:
        """Return the degree of v."""
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if uv is an edge."""
        return normalize_edge(u, v) in self._edge_set

    def edge_index(self) -> dict[Edge, int]:
        """Map every edge to its position in `edges`."""
        return {e: i for i, e in enumerate(self._edges)}

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", "VertexMap"]:
        """
        Return the subgraph induced by `keep`, re-indexed densely.

        Vertices keep their relative order, so the child id of a kept vertex
        is its rank among the kept vertices.

        Args:
        ----
            keep (Iterable[int]): Vertices of the subgraph

        Returns:
        -------
            tuple[Graph, VertexMap]: The subgraph and the id map back to this graph

        """
        order = tuple(sorted(set(keep)))
        vmap = VertexMap(order)
        child_of = vmap.child_ids
        edges = [
            (child_of[u], child_of[v])
            for u, v in self._edges
            if u in child_of and v in child_of
        ]
        return Graph(len(order), edges), vmap

    def delete_vertices(self, remove: Iterable[int]) -> tuple["Graph", "VertexMap"]:
        """Return G minus the given vertices, re-indexed, with its id map."""
        gone = set(remove)
        return self.induced_subgraph(v for v in range(self._n) if v not in gone)

    def without_edge(self, u: int, v: int) -> "Graph":
        """Return a copy of this graph with the edge uv deleted."""
        e = normalize_edge(u, v)
        if e not in self._edge_set:
            raise ValueError(f"{e} is not an edge")
        return Graph(self._n, (x for x in self._edges if x != e))

    def with_pendants(self, anchors: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """
        Attach a new degree-one vertex to each anchor.

        New vertices get the ids n, n+1, ... in ascending anchor order.

        Returns:
        -------
            tuple[Graph, dict[int, int]]: The augmented graph and a map anchor -> pendant

        """
        pendant_of: dict[int, int] = {}
        for offset, a in enumerate(sorted(set(anchors))):
            pendant_of[a] = self._n + offset
        edges = list(self._edges) + [(a, p) for a, p in pendant_of.items()]
        return Graph(self._n + len(pendant_of), edges), pendant_of

    def __eq__(self, other: object) -> bool:
        """Compare vertex count and edge set."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        """Hash on vertex count and edges."""
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        """Show the graph as vertex count plus edge list."""
        return f"Graph(n={self._n}, edges={list(self._edges)})"


@dataclass(frozen=True)
class VertexMap:
    """
    Correspondence between a re-indexed child graph and its parent.

    `to_parent[i]` is the parent id of child vertex i.
    """

    to_parent: tuple[int, ...]
    child_ids: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Build the reverse lookup."""
        object.__setattr__(
            self, "child_ids", {p: i for i, p in enumerate(self.to_parent)}
        )

    def to_child(self, v: int) -> int | None:
        """Return the child id of parent vertex v, or None if v was dropped."""
        return self.child_ids.get(v)

    def lift(self, v: int) -> int:
        """Return the parent id of child vertex v."""
        return self.to_parent[v]

    def lift_edges(self, edges: Iterable[Edge]) -> list[Edge]:
        """Translate child edges to normalized parent edges."""
        return [normalize_edge(self.to_parent[u], self.to_parent[v]) for u, v in edges]

    def compose(self, inner: "VertexMap") -> "VertexMap":
        """Return the map from `inner`'s child graph straight to this map's parent."""
        return VertexMap(tuple(self.to_parent[v] for v in inner.to_parent))


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks and cut vertices of a graph."""

    blocks: tuple[frozenset[int], ...]
    block_edges: tuple[tuple[Edge, ...], ...]
    cut_vertices: frozenset[int]
    block_cut_tree: tuple[tuple[int, int], ...]

    def blocks_of(self, v: int) -> list[int]:
        """Return the indices of the blocks containing v."""
        return [i for i, b in enumerate(self.blocks) if v in b]


def bfs_order(g: Graph, source: int, allowed: Iterable[int] | None = None) -> list[int]:
    """Return the vertices reachable from `source`, in BFS order with ascending neighbours."""
    ok = None if allowed is None else set(allowed)
    seen = {source}
    order = [source]
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbours(v)):
            if w in seen or (ok is not None and w not in ok):
                continue
            seen.add(w)
            order.append(w)
            queue.append(w)
    return order


def bfs_path(g: Graph, source: int, target: int) -> list[int] | None:
    """Return a shortest source-target path as a vertex list, or None."""
    parent: dict[int, int] = {source: source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == target:
            path = [v]
            while v != source:
                v = parent[v]
                path.append(v)
            path.reverse()
            return path
        for w in sorted(g.neighbours(v)):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def connected_components(g: Graph) -> list[frozenset[int]]:
    """
    Partition the vertices into connected components.

    Returns:
    -------
        list[frozenset[int]]: Components sorted by their smallest vertex

    """
    seen: set[int] = set()
    components: list[frozenset[int]] = []
    for v in g.vertices():
        if v in seen:
            continue
        comp = bfs_order(g, v)
        seen.update(comp)
        components.append(frozenset(comp))
    return components


def is_connected(g: Graph) -> bool:
    """Return True if g has at most one connected component."""
    return len(connected_components(g)) <= 1


def is_two_connected(g: Graph) -> bool:
    """Return True if g is connected and has no cut vertex; K1 and K2 count."""
    return is_connected(g) and not block_decomposition(g).cut_vertices


def block_decomposition(g: Graph) -> BlockDecomposition:
    """
    Compute the blocks and cut vertices of g.

    Iterative Hopcroft-Tarjan: a DFS keeps an edge stack and pops a block
    whenever a child's low point does not reach above its parent.  Isolated
    vertices form blocks of their own.

    Args:
    ----
        g (Graph): Any graph, connected or not

    Returns:
    -------
        BlockDecomposition: Blocks sorted by their sorted vertex lists

    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    clock = 0
    raw_blocks: list[list[Edge]] = []
    isolated: list[int] = []

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not g.neighbours(root):
            isolated.append(root)
            continue
        edge_stack: list[Edge] = []
        stack: list[tuple[int, int, Iterator[int]]] = [
            (root, -1, iter(sorted(g.neighbours(root))))
        ]
        while stack:
            v, parent, children = stack[-1]
            descended = False
            for w in children:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(g.neighbours(w)))))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    # back edge to an ancestor
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block: list[Edge] = []
                while True:
                    e = edge_stack.pop()
                    block.append(normalize_edge(*e))
                    if e == (parent, v):
                        break
                raw_blocks.append(block)

    entries: list[tuple[tuple[int, ...], tuple[Edge, ...]]] = []
    for block in raw_blocks:
        verts = sorted({x for e in block for x in e})
        entries.append((tuple(verts), tuple(sorted(block))))
    entries.extend(((v,), ()) for v in isolated)
    entries.sort()

    membership = [0] * n
    for verts, _ in entries:
        for v in verts:
            membership[v] += 1
    cut_vertices = frozenset(v for v in range(n) if membership[v] >= 2)
    tree = tuple(
        (i, v)
        for i, (verts, _) in enumerate(entries)
        for v in verts
        if v in cut_vertices
    )
    log.debug("Found %d blocks and %d cut vertices", len(entries), len(cut_vertices))
    return BlockDecomposition(
        blocks=tuple(frozenset(verts) for verts, _ in entries),
        block_edges=tuple(edges for _, edges in entries),
        cut_vertices=cut_vertices,
        block_cut_tree=tree,
    )


def is_complete(g: Graph, s: Iterable[int]) -> bool:
    """Return True if every pair of vertices in s is adjacent."""
    members = sorted(set(s))
    return all(
        g.has_edge(a, b) for i, a in enumerate(members) for b in members[i + 1 :]
    )


def find_induced_p3(g: Graph) -> tuple[int, int, int] | None:
    """
    Find an induced path p1 p2 p3.

    In a connected graph the result is None exactly when g is complete.

    Returns:
    -------
        tuple[int, int, int] | None: (p1, p2, p3) with p1p2, p2p3 edges and p1p3 a non-edge

    """
    for p2 in g.vertices():
        around = sorted(g.neighbours(p2))
        for i, p1 in enumerate(around):
            for p3 in around[i + 1 :]:
                if not g.has_edge(p1, p3):
                    return (p1, p2, p3)
    return None


def two_disjoint_paths_through(g: Graph, w: int, u: int, v: int) -> list[int] | None:
    """
    Find a simple u-v path that passes through w.

    An auxiliary sink is joined to u and v and two internally disjoint paths
    from w to the sink are found with unit vertex capacities.  The two halves
    are then glued at w.

    Args:
    ----
        g (Graph): The host graph
        w (int): Vertex the path must visit
        u (int): First end
        v (int): Second end

    Returns:
    -------
        list[int] | None: The path from u to v as a vertex list, or None if no such path exists

    """
    if u == v or w in (u, v):
        raise ValueError("need distinct u, v and w outside {u, v}")

    # vertex x is split into x_in = 2x and x_out = 2x + 1
    sink = 2 * g.n
    source = 2 * w + 1
    residual: dict[int, dict[int, int]] = {}

    def add_arc(a: int, b: int) -> None:
        residual.setdefault(a, {})[b] = 1
        residual.setdefault(b, {}).setdefault(a, 0)

    for x in g.vertices():
        if x != w:
            add_arc(2 * x, 2 * x + 1)
    for a, b in g.edges:
        if b != w:
            add_arc(2 * a + 1, 2 * b)
        if a != w:
            add_arc(2 * b + 1, 2 * a)
    add_arc(2 * u + 1, sink)
    add_arc(2 * v + 1, sink)

    for _ in range(2):
        parent: dict[int, int] = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, cap in sorted(residual.get(a, {}).items()):
                if cap > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return None
        b = sink
        while b != source:
            a = parent[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a

    halves: list[list[int]] = []
    used: set[tuple[int, int]] = set()
    for _ in range(2):
        walk = [w]
        a = source
        while a != sink:
            # an arc carries flow when its reverse residual is positive
            nxt = next(
                b
                for b in sorted(residual[a])
                if (a, b) not in used
                and residual[b].get(a, 0) > 0
                and _is_forward(a, b, sink)
            )
            used.add((a, nxt))
            if nxt != sink and nxt % 2 == 0:
                walk.append(nxt // 2)
            a = nxt
        halves.append(walk)
    first, second = halves
    if first[-1] != u:
        first, second = second, first
    path = list(reversed(first)) + second[1:]
    log.debug("Path through %d from %d to %d: %s", w, u, v, path)
    return path


def _is_forward(a: int, b: int, sink: int) -> bool:
    """Return True if a->b is an arc of the split network rather than a reverse arc."""
    if b == sink:
        return True
    if a == sink:
        return False
    if a % 2 == 0:
        return b == a + 1
    return b % 2 == 0 and b != a - 1
