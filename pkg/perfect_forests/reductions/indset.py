"""The independent-set gadget: induced paths, 0-perfect forests and their conversions."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum

from perfect_forests.exceptions import InvalidWitnessError
from perfect_forests.forest import ParityForest, ParityTarget, require_verified
from perfect_forests.graph import Graph, connected_components, normalize_edge
from perfect_forests.reductions.common import (
    GadgetBuilder,
    GadgetInstance,
    check_forest_witness,
    check_induced_path,
    walk_path,
)

log: logging.Logger = logging.getLogger(__name__)


class WitnessKind(StrEnum):
    """The four equivalent statements the gadget links."""

    INDSET_G = "indset-g"
    INDSET_GPRIME = "indset-gprime"
    PATH = "path"
    FOREST = "forest"


@dataclass(frozen=True)
class IndsetWitness:
    """A witness of one kind: a vertex set or path in `vertices`, or a forest."""

    kind: WitnessKind
    vertices: tuple[int, ...] = ()
    forest: ParityForest | None = None


@dataclass(frozen=True)
class IndsetGadget:
    """
    The layered gadget for a graph g and a target k.

    G' is g plus two isolated vertices at positions 0 and k - 1; the
    vertices of g take the remaining positions in ascending order, as
    recorded in `positions`.  Copy-1 of position a has id a and copy-2 has
    id n' + a.  `h1` and `h2` are the prefixes of the final graph before
    the subdivision vertices and before the pendants.
    """

    source: Graph
    k: int
    positions: tuple[int, ...]
    g_prime: Graph
    h1: Graph
    h2: Graph
    gadget: GadgetInstance

    @property
    def graph(self) -> Graph:
        """The final graph, pendants included."""
        return self.gadget.graph

    @property
    def n_prime(self) -> int:
        """Number of vertices of G'."""
        return self.g_prime.n

    @property
    def path_end(self) -> int:
        """Copy-2 of position k - 1, the far end of every witness path."""
        return self.n_prime + self.k - 1

    @property
    def forest_threshold(self) -> int:
        """Forest size reached exactly when g has an independent set of size k - 2."""
        return self.graph.n // 2 + 3 * self.k - 3

    def pendant_edges(self) -> list[tuple[int, int]]:
        """Return every pendant edge of the final graph."""
        roles = self.gadget.roles
        return sorted(
            normalize_edge(v, roles[label.removeprefix("pendant-of:")])
            for label, v in roles.items()
            if label.startswith("pendant-of:")
        )


def _copy(a: int, c: int) -> str:
    return f"v_{a}^{c}"


def indset_gadget(g: Graph, k: int) -> IndsetGadget:
    """
    Build the layered gadget whose large 0-perfect forests encode independent sets of g.

    Args:
    ----
        g (Graph): Any graph
        k (int): Target, with 2 <= k <= |V(g)| + 2

    Returns:
    -------
        IndsetGadget: The gadget, ids laid out as copy-1, copy-2, w vertices, pendants

    Raises:
    ------
        ValueError: If k is out of range

    """
    n_prime = g.n + 2
    if not 2 <= k <= n_prime:
        raise ValueError(f"k must lie in 2..{n_prime}, got {k}")
    free_positions = [p for p in range(n_prime) if p not in (0, k - 1)]
    positions = tuple(free_positions)
    g_prime = Graph(n_prime, ((positions[a], positions[b]) for a, b in g.edges))

    builder = GadgetBuilder("indset")
    for c in (1, 2):
        builder.add_vertices(_copy(a, c) for a in range(n_prime))
    for a, b in g_prime.edges:
        for c, d in ((1, 1), (2, 2), (1, 2), (2, 1)):
            builder.connect(_copy(a, c), _copy(b, d))
    for a in range(n_prime):
        builder.connect(_copy(a, 1), _copy(a, 2))
    h1_order = len(builder.roles)

    for a in range(n_prime):
        for b in range(n_prime):
            if a != b and not g_prime.has_edge(a, b):
                w = f"w_{a},{b}"
                builder.add_vertex(w)
                builder.connect(_copy(a, 1), w)
                builder.connect(_copy(b, 2), w)
    h2_order = len(builder.roles)

    ends = {_copy(0, 1), _copy(k - 1, 2)}
    builder.add_pendants(label for label in list(builder.roles) if label not in ends)

    graph, roles, params, marked = builder.build(
        {"n": g.n, "k": k, "n_prime": n_prime, "h1": h1_order, "h2": h2_order}
    )
    h1, _ = graph.induced_subgraph(range(h1_order))
    h2, _ = graph.induced_subgraph(range(h2_order))
    return IndsetGadget(
        source=g,
        k=k,
        positions=positions,
        g_prime=g_prime,
        h1=h1,
        h2=h2,
        gadget=GadgetInstance("indset", graph, roles, params, marked),
    )


def _check_independent(g: Graph, vertices: Iterable[int], at_least: int, where: str) -> tuple[int, ...]:
    chosen = tuple(sorted(set(vertices)))
    if any(not 0 <= v < g.n for v in chosen):
        raise InvalidWitnessError(f"{where}: vertex outside 0..{g.n - 1}")
    for i, a in enumerate(chosen):
        for b in chosen[i + 1 :]:
            if g.has_edge(a, b):
                raise InvalidWitnessError(f"{where}: {a} and {b} are adjacent")
    if len(chosen) < at_least:
        raise InvalidWitnessError(f"{where}: {len(chosen)} vertices, need at least {at_least}")
    return chosen


def gprime_set_from_g_set(inst: IndsetGadget, s: Sequence[int]) -> tuple[int, ...]:
    """Extend an independent set of g of size >= k - 2 to one of G' of size >= k."""
    chosen = _check_independent(inst.source, s, inst.k - 2, "independent set of g")
    lifted = {0, inst.k - 1} | {inst.positions[v] for v in chosen}
    return _check_independent(inst.g_prime, lifted, inst.k, "independent set of G'")


def g_set_from_gprime_set(inst: IndsetGadget, s: Sequence[int]) -> tuple[int, ...]:
    """Drop the two added positions from an independent set of G' of size >= k."""
    chosen = _check_independent(inst.g_prime, s, inst.k, "independent set of G'")
    back = {p: v for v, p in enumerate(inst.positions)}
    result = [back[p] for p in chosen if p not in (0, inst.k - 1)]
    return _check_independent(inst.source, result, inst.k - 2, "independent set of g")


def path_from_gprime_set(inst: IndsetGadget, s: Sequence[int]) -> tuple[int, ...]:
    """
    Route an induced path from copy-1 of position 0 to copy-2 of position k - 1.

    The path visits s1^1 s1^2 w(s2,s1) s2^1 s2^2 ... sk^1 sk^2 where
    s1 = 0, sk = k - 1 and the middle positions are the first k - 2 of s
    in ascending order.

    Returns:
    -------
        tuple[int, ...]: Vertex ids of an induced path with 3k - 2 edges in h2

    """
    chosen = _check_independent(inst.g_prime, s, inst.k, "independent set of G'")
    middle = [p for p in chosen if p not in (0, inst.k - 1)][: inst.k - 2]
    order = [0, *middle, inst.k - 1]
    roles = inst.gadget.roles
    path: list[int] = []
    for i, a in enumerate(order):
        if i:
            path.append(roles[f"w_{a},{order[i - 1]}"])
        path.extend((roles[_copy(a, 1)], roles[_copy(a, 2)]))
    result = tuple(path)
    _check_path(inst, result)
    return result


def _check_path(inst: IndsetGadget, path: Sequence[int]) -> None:
    if not path or path[0] != 0 or path[-1] != inst.path_end:
        raise InvalidWitnessError(f"path must run from 0 to {inst.path_end}")
    check_induced_path(inst.h2, path)
    if len(path) - 1 < 3 * inst.k - 2:
        raise InvalidWitnessError(f"path has {len(path) - 1} edges, need at least {3 * inst.k - 2}")


def gprime_set_from_path(inst: IndsetGadget, path: Sequence[int]) -> tuple[int, ...]:
    """
    Read an independent set of G' of size >= k off a long induced path.

    Copy vertices are kept greedily from the start whenever they sit at
    least two steps past the last kept one; their positions are independent
    in G'.
    """
    _check_path(inst, path)
    copies = 2 * inst.n_prime
    kept: list[int] = []
    last = -2
    for index, v in enumerate(path):
        if v < copies and index >= last + 2:
            kept.append(v % inst.n_prime)
            last = index
    log.debug("Path of %d edges yields positions %s", len(path) - 1, kept)
    return _check_independent(inst.g_prime, kept, inst.k, "independent set of G'")


def forest_from_path(inst: IndsetGadget, path: Sequence[int]) -> ParityForest:
    """Add every pendant edge to an induced path, giving a 0-perfect forest of the final graph."""
    _check_path(inst, path)
    edges = [normalize_edge(a, b) for a, b in zip(path, path[1:])] + inst.pendant_edges()
    forest = require_verified(
        ParityForest(inst.graph, ParityTarget.all_ones(inst.graph.n), tuple(edges)),
        "forest_from_path",
    )
    check_forest_witness(forest, inst.graph, inst.forest_threshold)
    return forest


def path_from_forest(inst: IndsetGadget, forest: ParityForest) -> tuple[int, ...]:
    """Strip the pendant edges from a large 0-perfect forest; what holds vertex 0 is the path."""
    check_forest_witness(forest, inst.graph, inst.forest_threshold)
    pendants = set(inst.pendant_edges())
    core = [e for e in forest.edges if e not in pendants]
    component = next(
        c for c in connected_components(Graph(inst.graph.n, core)) if 0 in c
    )
    path = tuple(walk_path((e for e in core if e[0] in component), 0))
    _check_path(inst, path)
    return path


def indset_equivalence_witnesses(
    inst: IndsetGadget, witness: IndsetWitness
) -> dict[WitnessKind, IndsetWitness]:
    """
    Convert a witness of any kind into witnesses of all four kinds.

    Every conversion output is validated on the way.

    Args:
    ----
        inst (IndsetGadget): The gadget
        witness (IndsetWitness): One witness

    Returns:
    -------
        dict[WitnessKind, IndsetWitness]: One witness per kind

    Raises:
    ------
        InvalidWitnessError: If the given witness is invalid

    """
    match witness.kind:
        case WitnessKind.INDSET_G:
            gprime = gprime_set_from_g_set(inst, witness.vertices)
        case WitnessKind.INDSET_GPRIME:
            gprime = _check_independent(inst.g_prime, witness.vertices, inst.k, "independent set of G'")
        case WitnessKind.PATH:
            gprime = gprime_set_from_path(inst, witness.vertices)
        case WitnessKind.FOREST:
            if witness.forest is None:
                raise InvalidWitnessError("forest witness carries no forest")
            gprime = gprime_set_from_path(inst, path_from_forest(inst, witness.forest))
        case _:
            raise InvalidWitnessError(f"unknown witness kind {witness.kind!r}")

    g_set = g_set_from_gprime_set(inst, gprime)
    path = path_from_gprime_set(inst, gprime)
    forest = forest_from_path(inst, path)
    return {
        WitnessKind.INDSET_G: IndsetWitness(WitnessKind.INDSET_G, g_set),
        WitnessKind.INDSET_GPRIME: IndsetWitness(WitnessKind.INDSET_GPRIME, gprime),
        WitnessKind.PATH: IndsetWitness(WitnessKind.PATH, path),
        WitnessKind.FOREST: IndsetWitness(WitnessKind.FOREST, forest=forest),
    }
