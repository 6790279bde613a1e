"""Minimum-weight perfect matching in general graphs with integer weights."""

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

from perfect_forests.exceptions import AlgorithmInvariantError
from perfect_forests.graph import Edge, Graph, normalize_edge

log: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with a non-negative integer weight on every edge."""

    base: Graph
    weights: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Normalize the weight keys and check they cover exactly E(base)."""
        normalized = {normalize_edge(u, v): int(w) for (u, v), w in self.weights.items()}
        if set(normalized) != set(self.base.edges):
            raise ValueError("weights must be given for exactly the edges of the base graph")
        if any(w < 0 for w in normalized.values()):
            raise ValueError("weights must be non-negative")
        object.__setattr__(self, "weights", normalized)

    @classmethod
    def unit(cls, g: Graph) -> "WeightedGraph":
        """Give every edge of g weight 1."""
        return cls(g, {e: 1 for e in g.edges})

    def weight(self, u: int, v: int) -> int:
        """Return the weight of uv."""
        return self.weights[normalize_edge(u, v)]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        """Normalize and check disjointness."""
        edges = tuple(sorted(normalize_edge(u, v) for u, v in self.edges))
        covered = [x for e in edges for x in e]
        if len(covered) != len(set(covered)):
            raise ValueError(f"edges {edges} share a vertex")
        object.__setattr__(self, "edges", edges)

    def weight(self, wg: WeightedGraph) -> int:
        """Return the total weight of the matching in wg."""
        return sum(wg.weight(u, v) for u, v in self.edges)

    def covers(self, n: int) -> bool:
        """Return True if every vertex 0..n-1 is matched."""
        return 2 * len(self.edges) == n and {x for e in self.edges for x in e} == set(range(n))


class _Blossom:
    """A non-trivial blossom: an odd cycle of sub-blossoms."""

    __slots__ = ("children", "edges", "own_best_edges")

    def __init__(self) -> None:
        self.children: list[_Blossom | int] = []
        self.edges: list[Edge] = []
        self.own_best_edges: list[Edge] | None = None

    def leaves(self) -> Iterator[int]:
        stack = [*self.children]
        while stack:
            t = stack.pop()
            if isinstance(t, _Blossom):
                stack.extend(t.children)
            else:
                yield t


Node = _Blossom | int

_FREE = 0
_S = 1
_T = 2
_CRUMB = 4

# what limits a dual step
_OPTIMAL, _GROW, _MERGE, _EXPAND = range(4)


class BlossomSolver:
    """
    Maximum-weight matching by the primal-dual blossom method.

    Dual variables and slacks are kept multiplied by two so that integer
    weights stay integral throughout.  One solver handles one graph; it holds
    mutable state and is not meant to be shared between threads.
    """

    def __init__(self, n: int, weights: Mapping[Edge, int]) -> None:
        """
        Create a BlossomSolver.

        Args:
        ----
            n (int): Number of vertices
            weights (Mapping[Edge, int]): Positive integer weight per edge

        """
        self.log: logging.Logger = logging.getLogger(
            f"{__name__}.{self.__class__.__name__}"
        )
        self.n = n
        self.neighbours: list[dict[int, int]] = [{} for _ in range(n)]
        for (u, v), w in weights.items():
            self.neighbours[u][v] = w
            self.neighbours[v][u] = w
        max_weight = max(weights.values(), default=0)

        self.mate: dict[int, int] = {}
        self.label: dict[Node, int | None] = {}
        self.label_edge: dict[Node, Edge | None] = {}
        self.top_blossom: dict[int, Node] = {v: v for v in range(n)}
        self.blossom_parent: dict[Node, _Blossom | None] = {v: None for v in range(n)}
        self.blossom_base: dict[Node, int] = {v: v for v in range(n)}
        self.best_edge: dict[Node, Edge | None] = {}
        self.vertex_dual: dict[int, int] = {v: max_weight for v in range(n)}
        self.blossom_dual: dict[_Blossom, int] = {}
        self.allowed_edge: set[Edge] = set()
        self.queue: list[int] = []

    def slack(self, v: int, w: int) -> int:
        """Return twice the slack of edge vw; not meaningful inside a blossom."""
        return self.vertex_dual[v] + self.vertex_dual[w] - 2 * self.neighbours[v][w]

    def _assign_label(self, w: int, t: int, v: int | None) -> None:
        """Label the top-level blossom containing w with t, reached from v."""
        while True:
            b = self.top_blossom[w]
            if self.label.get(w) is not None or self.label.get(b) is not None:
                raise AlgorithmInvariantError("relabelling an already labelled blossom")
            self.label[w] = self.label[b] = t
            edge = (v, w) if v is not None else None
            self.label_edge[w] = self.label_edge[b] = edge
            self.best_edge[w] = self.best_edge[b] = None
            if t == _S:
                if isinstance(b, _Blossom):
                    self.queue.extend(b.leaves())
                else:
                    self.queue.append(b)
                return
            # a T-blossom passes label S on to the mate of its base
            base = self.blossom_base[b]
            w, t, v = self.mate[base], _S, base

    def _scan_blossom(self, v: int, w: int) -> int | None:
        """Trace back from v and w; return the base of a new blossom, or None for an augmenting path."""
        path: list[Node] = []
        base: int | None = None
        cur: int | None = v
        other: int | None = w
        while cur is not None:
            b = self.top_blossom[cur]
            if (self.label[b] or 0) & _CRUMB:
                base = self.blossom_base[b]
                break
            path.append(b)
            self.label[b] = _S | _CRUMB
            edge = self.label_edge[b]
            if edge is None:
                cur = None
            else:
                cur = edge[0]
                bt = self.top_blossom[cur]
                t_edge = self.label_edge[bt]
                assert t_edge is not None
                cur = t_edge[0]
            if other is not None:
                cur, other = other, cur
        for b in path:
            self.label[b] = _S
        return base

    def _add_blossom(self, base: int, v: int, w: int) -> None:
        """Build a new S-blossom with the given base through the S-vertices v and w."""
        bb = self.top_blossom[base]
        bv = self.top_blossom[v]
        bw = self.top_blossom[w]
        b = _Blossom()
        self.blossom_base[b] = base
        self.blossom_parent[b] = None
        self.blossom_parent[bb] = b
        path = b.children
        ring_edges = b.edges
        ring_edges.append((v, w))
        while bv != bb:
            self.blossom_parent[bv] = b
            path.append(bv)
            edge = self.label_edge[bv]
            assert edge is not None
            ring_edges.append(edge)
            bv = self.top_blossom[edge[0]]
        path.append(bb)
        path.reverse()
        ring_edges.reverse()
        while bw != bb:
            self.blossom_parent[bw] = b
            path.append(bw)
            edge = self.label_edge[bw]
            assert edge is not None
            ring_edges.append((edge[1], edge[0]))
            bw = self.top_blossom[edge[0]]
        self.label[b] = _S
        self.label_edge[b] = self.label_edge[bb]
        self.blossom_dual[b] = 0
        for leaf in b.leaves():
            if self.label.get(self.top_blossom[leaf]) == _T:
                # T-vertices become S-vertices inside the new S-blossom
                self.queue.append(leaf)
            self.top_blossom[leaf] = b

        best_edge_to: dict[Node, Edge] = {}
        for sub in path:
            if isinstance(sub, _Blossom):
                if sub.own_best_edges is not None:
                    candidates = sub.own_best_edges
                    sub.own_best_edges = None
                else:
                    candidates = [(x, y) for x in sub.leaves() for y in self.neighbours[x]]
            else:
                candidates = [(sub, y) for y in self.neighbours[sub]]
            for k in candidates:
                i, j = k
                if self.top_blossom[j] == b:
                    i, j = j, i
                bj = self.top_blossom[j]
                if (
                    bj != b
                    and self.label.get(bj) == _S
                    and (bj not in best_edge_to or self.slack(i, j) < self.slack(*best_edge_to[bj]))
                ):
                    best_edge_to[bj] = k
            self.best_edge[sub] = None
        b.own_best_edges = list(best_edge_to.values())
        best: Edge | None = None
        best_slack = 0
        for k in b.own_best_edges:
            edge_slack = self.slack(*k)
            if best is None or edge_slack < best_slack:
                best, best_slack = k, edge_slack
        self.best_edge[b] = best

    def _expand_blossom(self, b: _Blossom, end_of_stage: bool) -> None:
        """Expand a top-level blossom, recursing into zero-dual sub-blossoms at the end of a stage."""

        def _recurse(b: _Blossom) -> Iterator[_Blossom]:
            for s in b.children:
                self.blossom_parent[s] = None
                if isinstance(s, _Blossom):
                    if end_of_stage and self.blossom_dual[s] == 0:
                        yield s
                    else:
                        for leaf in s.leaves():
                            self.top_blossom[leaf] = s
                else:
                    self.top_blossom[s] = s
            if not end_of_stage and self.label.get(b) == _T:
                self._relabel_expanded_t_blossom(b)
            self.label.pop(b, None)
            self.label_edge.pop(b, None)
            self.best_edge.pop(b, None)
            del self.blossom_parent[b]
            del self.blossom_base[b]
            del self.blossom_dual[b]

        # trampoline instead of recursion
        stack = [_recurse(b)]
        while stack:
            top = stack[-1]
            for s in top:
                stack.append(_recurse(s))
                break
            else:
                stack.pop()

    def _relabel_expanded_t_blossom(self, b: _Blossom) -> None:
        """Relabel the sub-blossoms of a T-blossom being expanded mid-stage."""
        entry_edge = self.label_edge[b]
        assert entry_edge is not None
        entry_child = self.top_blossom[entry_edge[1]]
        j = b.children.index(entry_child)
        if j & 1:
            j -= len(b.children)
            step = 1
        else:
            step = -1
        v, w = entry_edge
        while j != 0:
            if step == 1:
                p, q = b.edges[j]
            else:
                q, p = b.edges[j - 1]
            self.label[w] = None
            self.label[q] = None
            self._assign_label(w, _T, v)
            self.allowed_edge.update(((p, q), (q, p)))
            j += step
            if step == 1:
                v, w = b.edges[j]
            else:
                w, v = b.edges[j - 1]
            self.allowed_edge.update(((v, w), (w, v)))
            j += step
        bw = b.children[j]
        self.label[w] = self.label[bw] = _T
        self.label_edge[w] = self.label_edge[bw] = (v, w)
        self.best_edge[bw] = None
        j += step
        while b.children[j] != entry_child:
            bv = b.children[j]
            if self.label.get(bv) == _S:
                j += step
                continue
            reached: int | None = None
            if isinstance(bv, _Blossom):
                for leaf in bv.leaves():
                    if self.label.get(leaf):
                        reached = leaf
                        break
            elif self.label.get(bv):
                reached = bv
            if reached is not None:
                if self.label[reached] != _T or self.top_blossom[reached] != bv:
                    raise AlgorithmInvariantError("unexpected label inside expanding blossom")
                self.label[reached] = None
                self.label[self.mate[self.blossom_base[bv]]] = None
                reached_edge = self.label_edge[reached]
                assert reached_edge is not None
                self._assign_label(reached, _T, reached_edge[0])
            j += step

    def _augment_blossom(self, b: _Blossom, v: int) -> None:
        """Swap matched and unmatched edges along the even path from v to the base of b."""

        def _recurse(b: _Blossom, v: int) -> Iterator[tuple[_Blossom, int]]:
            t: Node = v
            while self.blossom_parent[t] != b:
                parent = self.blossom_parent[t]
                assert parent is not None
                t = parent
            if isinstance(t, _Blossom):
                yield (t, v)
            i = j = b.children.index(t)
            if i & 1:
                j -= len(b.children)
                step = 1
            else:
                step = -1
            while j != 0:
                j += step
                t = b.children[j]
                if step == 1:
                    w, x = b.edges[j]
                else:
                    x, w = b.edges[j - 1]
                if isinstance(t, _Blossom):
                    yield (t, w)
                j += step
                t = b.children[j]
                if isinstance(t, _Blossom):
                    yield (t, x)
                self.mate[w] = x
                self.mate[x] = w
            b.children = b.children[i:] + b.children[:i]
            b.edges = b.edges[i:] + b.edges[:i]
            self.blossom_base[b] = self.blossom_base[b.children[0]]
            if self.blossom_base[b] != v:
                raise AlgorithmInvariantError("blossom base did not move to the augmenting vertex")

        stack = [_recurse(b, v)]
        while stack:
            top = stack[-1]
            for args in top:
                stack.append(_recurse(*args))
                break
            else:
                stack.pop()

    def _augment_matching(self, v: int, w: int) -> None:
        """Augment along the path through the S-vertices v and w."""
        for s, j in ((v, w), (w, v)):
            while True:
                bs = self.top_blossom[s]
                if isinstance(bs, _Blossom):
                    self._augment_blossom(bs, s)
                self.mate[s] = j
                edge = self.label_edge[bs]
                if edge is None:
                    break
                t = edge[0]
                bt = self.top_blossom[t]
                t_edge = self.label_edge[bt]
                assert t_edge is not None
                s, j = t_edge
                if isinstance(bt, _Blossom):
                    self._augment_blossom(bt, j)
                self.mate[j] = s

    def _scan(self) -> bool:
        """Grow alternating trees from queued S-vertices; return True after augmenting."""
        while self.queue:
            v = self.queue.pop()
            for w in self.neighbours[v]:
                bv = self.top_blossom[v]
                bw = self.top_blossom[w]
                if bv == bw:
                    continue
                edge_slack = 0
                if (v, w) not in self.allowed_edge:
                    edge_slack = self.slack(v, w)
                    if edge_slack <= 0:
                        self.allowed_edge.update(((v, w), (w, v)))
                if (v, w) in self.allowed_edge:
                    if self.label.get(bw) is None:
                        self._assign_label(w, _T, v)
                    elif self.label.get(bw) == _S:
                        base = self._scan_blossom(v, w)
                        if base is not None:
                            self._add_blossom(base, v, w)
                        else:
                            self._augment_matching(v, w)
                            return True
                    elif self.label.get(w) is None:
                        # w sits in a T-blossom but was not reached itself yet
                        self.label[w] = _T
                        self.label_edge[w] = (v, w)
                elif self.label.get(bw) == _S:
                    current = self.best_edge.get(bv)
                    if current is None or edge_slack < self.slack(*current):
                        self.best_edge[bv] = (v, w)
                elif self.label.get(w) is None:
                    current = self.best_edge.get(w)
                    if current is None or edge_slack < self.slack(*current):
                        self.best_edge[w] = (v, w)
        return False

    def _dual_step(self) -> bool:
        """Adjust the duals by the smallest admissible delta; return False when optimal."""
        delta_kind = _OPTIMAL
        delta = min(self.vertex_dual.values())
        delta_edge: Edge | None = None
        delta_blossom: _Blossom | None = None

        for v in range(self.n):
            edge = self.best_edge.get(v)
            if self.label.get(self.top_blossom[v]) is None and edge is not None:
                d = self.slack(*edge)
                if d < delta:
                    delta, delta_kind, delta_edge = d, _GROW, edge

        for b, parent in self.blossom_parent.items():
            edge = self.best_edge.get(b)
            if parent is None and self.label.get(b) == _S and edge is not None:
                edge_slack = self.slack(*edge)
                if edge_slack % 2:
                    raise AlgorithmInvariantError("odd slack between two S-blossoms")
                d = edge_slack // 2
                if d < delta:
                    delta, delta_kind, delta_edge = d, _MERGE, edge

        for b, z in self.blossom_dual.items():
            if self.blossom_parent[b] is None and self.label.get(b) == _T and z < delta:
                delta, delta_kind, delta_blossom = z, _EXPAND, b

        for v in range(self.n):
            lab = self.label.get(self.top_blossom[v])
            if lab == _S:
                self.vertex_dual[v] -= delta
            elif lab == _T:
                self.vertex_dual[v] += delta
        for b in self.blossom_dual:
            if self.blossom_parent[b] is None:
                if self.label.get(b) == _S:
                    self.blossom_dual[b] += delta
                elif self.label.get(b) == _T:
                    self.blossom_dual[b] -= delta

        if delta_kind == _OPTIMAL:
            return False
        if delta_kind in (_GROW, _MERGE):
            assert delta_edge is not None
            v, w = delta_edge
            self.allowed_edge.update(((v, w), (w, v)))
            self.queue.append(v)
        else:
            assert delta_blossom is not None
            self._expand_blossom(delta_blossom, False)
        return True

    def solve(self) -> dict[int, int]:
        """
        Run stages until no augmenting path is left.

        Returns:
        -------
            dict[int, int]: The mate of every matched vertex, in both directions

        """
        stages = 0
        while True:
            stages += 1
            self.label.clear()
            self.label_edge.clear()
            self.best_edge.clear()
            for b in self.blossom_dual:
                b.own_best_edges = None
            self.allowed_edge.clear()
            self.queue.clear()

            for v in range(self.n):
                if v not in self.mate and self.label.get(self.top_blossom[v]) is None:
                    self._assign_label(v, _S, None)

            augmented = False
            while True:
                if self._scan():
                    augmented = True
                    break
                if not self._dual_step():
                    break

            if any(self.mate[self.mate[v]] != v for v in self.mate):
                raise AlgorithmInvariantError("matching is not symmetric")
            if not augmented:
                break

            for b in list(self.blossom_dual):
                if b not in self.blossom_dual:
                    continue
                if (
                    self.blossom_parent[b] is None
                    and self.label.get(b) == _S
                    and self.blossom_dual[b] == 0
                ):
                    self._expand_blossom(b, True)

        self.log.debug("Matched %d of %d vertices in %d stages", len(self.mate), self.n, stages)
        return dict(self.mate)


def min_weight_perfect_matching(wg: WeightedGraph) -> Matching | None:
    """
    Find a perfect matching of minimum total weight.

    Weights are flipped to C - w with C large enough that any matching with
    more edges outweighs every smaller one, so a maximum-weight matching of
    the flipped graph is perfect whenever a perfect matching exists.

    Args:
    ----
        wg (WeightedGraph): Graph with non-negative integer weights

    Returns:
    -------
        Matching | None: A minimum-weight perfect matching, or None if the graph has none

    """
    n = wg.base.n
    if n % 2:
        return None
    if n == 0:
        return Matching(())
    heaviest = max(wg.weights.values(), default=0)
    ceiling = (n // 2) * heaviest + 1
    flipped = {e: ceiling - w for e, w in wg.weights.items()}
    mate = BlossomSolver(n, flipped).solve()
    if len(mate) < n:
        log.debug("No perfect matching: only %d of %d vertices matched", len(mate), n)
        return None
    return Matching(tuple({normalize_edge(v, w) for v, w in mate.items()}))


def has_perfect_matching(g: Graph) -> bool:
    """Return True if g has a perfect matching."""
    return min_weight_perfect_matching(WeightedGraph.unit(g)) is not None
