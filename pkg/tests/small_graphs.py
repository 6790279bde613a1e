"""Exhaustive families of small graphs and targets, and the fixture file directory."""

from collections.abc import Iterator
from functools import cache
from itertools import combinations, product
from pathlib import Path

import networkx as nx

from perfect_forests.forest import ParityTarget
from perfect_forests.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"
ATLAS_MAX_ORDER = 7


def connected_atlas(min_n: int, max_n: int) -> Iterator[Graph]:
    """Yield every connected graph on min_n..max_n vertices (max_n <= 7), one per isomorphism class."""
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(nxg):
            yield Graph(n, nxg.edges())


@cache
def _extended_classes(n: int, atlas_max: int) -> tuple[Graph, ...]:
    # Every connected graph has a vertex whose removal leaves it connected,
    # so adding one vertex to each class of order n - 1 reaches every class.
    if n <= atlas_max:
        return tuple(connected_atlas(n, n))
    buckets: dict[str, list[nx.Graph]] = {}
    found: list[Graph] = []
    for base in _extended_classes(n - 1, atlas_max):
        for size in range(1, n):
            for anchors in combinations(range(n - 1), size):
                nxg = nx.Graph()
                nxg.add_nodes_from(range(n))
                nxg.add_edges_from(base.edges)
                nxg.add_edges_from((a, n - 1) for a in anchors)
                bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(nxg), [])
                if any(nx.is_isomorphic(nxg, seen) for seen in bucket):
                    continue
                bucket.append(nxg)
                found.append(Graph(n, nxg.edges()))
    return tuple(found)


def connected_graphs_of_order(n: int, atlas_max: int = ATLAS_MAX_ORDER) -> tuple[Graph, ...]:
    """
    Return every connected graph on n vertices, one per isomorphism class.

    Orders up to atlas_max come from the networkx atlas; larger ones are
    grown a vertex at a time and deduplicated by isomorphism.
    """
    if n < 1 or not 1 <= atlas_max <= ATLAS_MAX_ORDER:
        raise ValueError(f"bad order {n} or atlas cut-off {atlas_max}")
    return _extended_classes(n, atlas_max)


def even_sum_targets(n: int) -> Iterator[ParityTarget]:
    """Yield every parity target on n vertices with an even sum."""
    for bits in product((0, 1), repeat=n):
        if sum(bits) % 2 == 0:
            yield ParityTarget(bits)


def complete_graph(n: int) -> Graph:
    """Return K_n."""
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    """Return C_n."""
    return Graph(n, ((v, (v + 1) % n) for v in range(n)))
