"""Shared gadget bookkeeping: role-labelled vertices and incremental construction."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from perfect_forests.exceptions import InvalidWitnessError
from perfect_forests.forest import ParityForest, ParityTarget
from perfect_forests.graph import Edge, Graph, normalize_edge

log: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GadgetInstance:
    """
    A constructed reduction graph with a role label on every vertex.

    `roles` maps each label to its vertex id and covers every vertex exactly
    once.  `marked_edges` names the special edges of the construction.
    """

    kind: str
    graph: Graph
    roles: dict[str, int]
    params: dict[str, int]
    marked_edges: dict[str, Edge] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Check that roles are a bijection onto the vertices."""
        if sorted(self.roles.values()) != list(range(self.graph.n)):
            raise ValueError(f"{self.kind} roles do not cover every vertex exactly once")

    def vertex(self, label: str) -> int:
        """Return the vertex carrying a role label."""
        return self.roles[label]

    def label_of(self, v: int) -> str:
        """Return the role label of vertex v."""
        return self._labels[v]

    @property
    def _labels(self) -> list[str]:
        labels = [""] * self.graph.n
        for label, v in self.roles.items():
            labels[v] = label
        return labels


class GadgetBuilder:
    """Collects labelled vertices and edges, then freezes them into a Graph."""

    def __init__(self, kind: str) -> None:
        """
        Create a GadgetBuilder.

        Args:
        ----
            kind (str): Name of the gadget being built, used in log lines

        """
        self.log: logging.Logger = logging.getLogger(
            f"{__name__}.{self.__class__.__name__}"
        )
        self.kind = kind
        self.roles: dict[str, int] = {}
        self.edges: set[Edge] = set()

    def add_vertex(self, label: str) -> int:
        """Add a vertex with a fresh role label and return its id."""
        if label in self.roles:
            raise ValueError(f"duplicate role label {label!r}")
        self.roles[label] = len(self.roles)
        return self.roles[label]

    def add_vertices(self, labels: Iterable[str]) -> list[int]:
        """Add several vertices in order."""
        return [self.add_vertex(label) for label in labels]

    def connect(self, a: str, b: str) -> None:
        """Join two labelled vertices; repeated requests are ignored."""
        self.edges.add(normalize_edge(self.roles[a], self.roles[b]))

    def add_pendants(self, anchors: Iterable[str]) -> None:
        """Hang a pendant vertex labelled `pendant-of:<anchor>` on each anchor."""
        for anchor in anchors:
            label = f"pendant-of:{anchor}"
            self.add_vertex(label)
            self.connect(anchor, label)

    def edge(self, a: str, b: str) -> Edge:
        """Return the normalized edge between two labelled vertices."""
        return normalize_edge(self.roles[a], self.roles[b])

    def build(
        self,
        params: dict[str, int],
        marked_edges: dict[str, Edge] | None = None,
    ) -> tuple[Graph, dict[str, int], dict[str, int], dict[str, Edge]]:
        """Freeze the collected structure."""
        graph = Graph(len(self.roles), self.edges)
        self.log.info(
            "Built %s gadget with %d vertices and %d edges", self.kind, graph.n, graph.m
        )
        return graph, dict(self.roles), dict(params), dict(marked_edges or {})


def check_forest_witness(forest: ParityForest, host: Graph, min_size: int) -> None:
    """
    Reject anything but a verified 0-perfect forest of host with at least min_size edges.

    Raises:
    ------
        InvalidWitnessError: If any of the conditions fails

    """
    if forest.host != host:
        raise InvalidWitnessError("forest belongs to a different graph")
    if forest.target != ParityTarget.all_ones(host.n):
        raise InvalidWitnessError("forest is not a 0-perfect forest")
    if forest.violation is not None:
        raise InvalidWitnessError(f"forest does not verify: {forest.violation.message}")
    if forest.size < min_size:
        raise InvalidWitnessError(f"forest has {forest.size} edges, need at least {min_size}")


def check_induced_path(g: Graph, path: Sequence[int]) -> None:
    """Raise InvalidWitnessError unless path is an induced path of g."""
    if len(set(path)) != len(path):
        raise InvalidWitnessError("path repeats a vertex")
    if any(not 0 <= v < g.n for v in path):
        raise InvalidWitnessError("path leaves the vertex range")
    position = {v: i for i, v in enumerate(path)}
    for a in path:
        for b in g.neighbours(a) & position.keys():
            if abs(position[a] - position[b]) != 1:
                raise InvalidWitnessError(f"path has chord {normalize_edge(a, b)}")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise InvalidWitnessError(f"consecutive path vertices {a}, {b} are not adjacent")


def check_induced_cycle(g: Graph, cycle: Sequence[int], through: Iterable[Edge]) -> None:
    """Raise InvalidWitnessError unless cycle is an induced cycle of g using every edge in through."""
    if len(cycle) < 3:
        raise InvalidWitnessError("a cycle needs at least three vertices")
    if len(set(cycle)) != len(cycle):
        raise InvalidWitnessError("cycle repeats a vertex")
    if any(not 0 <= v < g.n for v in cycle):
        raise InvalidWitnessError("cycle leaves the vertex range")
    on_cycle = set(cycle)
    used: set[Edge] = set()
    for i, a in enumerate(cycle):
        ring = {cycle[i - 1], cycle[(i + 1) % len(cycle)]}
        if not ring <= g.neighbours(a):
            raise InvalidWitnessError(f"cycle uses a non-edge at vertex {a}")
        chords = (g.neighbours(a) & on_cycle) - ring
        if chords:
            raise InvalidWitnessError(f"cycle has chord {normalize_edge(a, min(chords))}")
        used.add(normalize_edge(a, cycle[(i + 1) % len(cycle)]))
    missing = [e for e in through if normalize_edge(*e) not in used]
    if missing:
        raise InvalidWitnessError(f"cycle misses required edges {missing}")


def walk_path(edges: Iterable[Edge], start: int) -> list[int]:
    """Return the vertices of a path, given as an edge set, in order from start."""
    adjacency: dict[int, list[int]] = {}
    for a, b in edges:
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    order = [start]
    previous = -1
    while True:
        step = [b for b in adjacency.get(order[-1], []) if b != previous]
        if not step:
            return order
        if len(step) > 1:
            raise InvalidWitnessError(f"edge set branches at vertex {order[-1]}")
        if step[0] in order:
            raise InvalidWitnessError(f"edge set closes a cycle at vertex {step[0]}")
        previous = order[-1]
        order.append(step[0])
