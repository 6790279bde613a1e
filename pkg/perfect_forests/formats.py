"""Text formats: graphs, weighted graphs, parity targets, DIMACS CNF and forest JSON."""

import json
import logging
from collections.abc import Iterator
from pathlib import Path

from perfect_forests.exceptions import GraphFormatError
from perfect_forests.forest import ParityForest, ParityTarget
from perfect_forests.graph import Edge, Graph, normalize_edge
from perfect_forests.matching import WeightedGraph
from perfect_forests.reductions.cnf import CnfInstance

log: logging.Logger = logging.getLogger(__name__)


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, stripped line), skipping blanks and # comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _ints(line: str, number: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {count} integers, got {line!r}", number)
    try:
        return [int(p) for p in parts]
    except ValueError as e:
        raise GraphFormatError(f"not an integer in {line!r}", number) from e


def _parse_bits(text: str, number: int | None = None) -> list[int]:
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    if any(t not in ("0", "1") for t in tokens):
        raise GraphFormatError(f"parity bits must be 0 or 1, got {text!r}", number)
    return [int(t) for t in tokens]


def _parse_edges(text: str, weighted: bool) -> tuple[int, list[Edge], dict[Edge, int], list[int] | None]:
    lines = _content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty graph file", 1) from None
    n, m = _ints(header, number, 2)
    if n < 0 or m < 0:
        raise GraphFormatError("vertex and edge counts must be non-negative", number)

    edges: list[Edge] = []
    weights: dict[Edge, int] = {}
    bits: list[int] | None = None
    for number, line in lines:
        if line.startswith("f:"):
            if bits is not None:
                raise GraphFormatError("more than one f: line", number)
            bits = _parse_bits(line.removeprefix("f:"), number)
            if len(bits) != n:
                raise GraphFormatError(f"f: line has {len(bits)} bits for {n} vertices", number)
            continue
        if bits is not None:
            raise GraphFormatError("edge lines must come before the f: line", number)
        values = _ints(line, number, 3 if weighted else 2)
        u, v = values[0], values[1]
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", number)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u} {v} has an endpoint outside 0..{n - 1}", number)
        if u > v:
            raise GraphFormatError(f"edge {u} {v} must list its smaller endpoint first", number)
        e = (u, v)
        if e in weights:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}", number)
        if weighted and values[2] < 0:
            raise GraphFormatError(f"negative weight {values[2]}", number)
        weights[e] = values[2] if weighted else 1
        edges.append(e)
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, file has {len(edges)}")
    return n, edges, weights, bits


def parse_graph(text: str) -> tuple[Graph, ParityTarget | None]:
    """
    Parse the graph text format.

    The first content line is `n m`, followed by m lines `u v` with u < v
    and an optional `f: b0 b1 ...` line.  Blank lines and lines starting with `#`
    are ignored.

    Args:
    ----
        text (str): File contents

    Returns:
    -------
        tuple[Graph, ParityTarget | None]: The graph, and its target when an f: line is present

    Raises:
    ------
        GraphFormatError: On any malformed line, with its line number

    """
    n, edges, _, bits = _parse_edges(text, weighted=False)
    return Graph(n, edges), (ParityTarget(bits) if bits is not None else None)


def write_graph(g: Graph, f: ParityTarget | None = None) -> str:
    """Render a graph, and optionally its target, in the graph text format."""
    lines = [f"{g.n} {g.m}", *(f"{u} {v}" for u, v in g.edges)]
    if f is not None:
        lines.append("f: " + " ".join(str(b) for b in f.values))
    return "\n".join(lines) + "\n"


def parse_weighted_graph(text: str) -> WeightedGraph:
    """Parse the weighted format, where every edge line is `u v w` with w >= 0."""
    n, edges, weights, _ = _parse_edges(text, weighted=True)
    return WeightedGraph(Graph(n, edges), weights)


def write_weighted_graph(wg: WeightedGraph) -> str:
    """Render a weighted graph."""
    g = wg.base
    lines = [f"{g.n} {g.m}", *(f"{u} {v} {wg.weight(u, v)}" for u, v in g.edges)]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfInstance:
    """
    Parse a DIMACS CNF formula with exactly three literals per clause.

    `c` lines are comments; the `p cnf <vars> <clauses>` line must come
    before the clauses.  A clause ends at its 0 token and may span lines or
    share a line with others.  A `%` line ends the formula.
    """
    num_vars: int | None = None
    num_clauses = 0
    clauses: list[list[int]] = []
    pending: list[int] = []
    number = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf" or num_vars is not None:
                raise GraphFormatError(f"invalid problem line {line!r}", number)
            num_vars, num_clauses = _ints(" ".join(parts[2:]), number, 2)
            continue
        if num_vars is None:
            raise GraphFormatError("clause before the problem line", number)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError as e:
                raise GraphFormatError(f"not an integer in {line!r}", number) from e
            if lit != 0:
                if abs(lit) > num_vars:
                    raise GraphFormatError(f"literal {lit} outside 1..{num_vars}", number)
                pending.append(lit)
                continue
            if len(pending) != 3:
                raise GraphFormatError(f"clause has {len(pending)} literals, expected 3", number)
            clauses.append(pending)
            pending = []
    if num_vars is None:
        raise GraphFormatError("missing p cnf line")
    if pending:
        raise GraphFormatError(f"last clause {pending} does not end with 0", number)
    if len(clauses) != num_clauses:
        log.warning("Problem line announces %d clauses, file has %d", num_clauses, len(clauses))
    return CnfInstance.of(num_vars, clauses)


def write_dimacs(cnf: CnfInstance) -> str:
    """Render a formula in DIMACS CNF."""
    lines = [f"p cnf {cnf.num_vars} {cnf.num_clauses}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in cnf.clauses]
    return "\n".join(lines) + "\n"


def parse_target_spec(spec: str, n: int) -> ParityTarget:
    """
    Turn a --f value into a parity target on n vertices.

    Accepted forms are `all-ones`, `all-ones-except <v>` (or `all-ones-except:<v>`),
    `zeros`, and explicit bits such as `1 0 1 0` or `1010`.
    """
    text = spec.strip()
    match text.replace(":", " ").split():
        case ["all-ones"]:
            return ParityTarget.all_ones(n)
        case ["zeros"]:
            return ParityTarget.zeros(n)
        case ["all-ones-except", vertex]:
            try:
                v = int(vertex)
            except ValueError as e:
                raise GraphFormatError(f"vertex {vertex!r} is not an integer") from e
            if not 0 <= v < n:
                raise GraphFormatError(f"vertex {v} outside 0..{n - 1}")
            return ParityTarget.all_ones_except(n, v)
    bits = _parse_bits(text)
    if len(bits) != n:
        raise GraphFormatError(f"target has {len(bits)} bits for {n} vertices")
    return ParityTarget(bits)


def parse_edge(text: str) -> Edge:
    """Parse an edge written `u,v`."""
    parts = text.replace(" ", "").split(",")
    if len(parts) != 2:
        raise GraphFormatError(f"edge must be written u,v, got {text!r}")
    try:
        return normalize_edge(int(parts[0]), int(parts[1]))
    except ValueError as e:
        raise GraphFormatError(f"edge must be written u,v, got {text!r}") from e


def parse_forest_json(text: str, g: Graph, f: ParityTarget) -> ParityForest:
    """Read the `edges` list of a forest document; vertices must lie in g."""
    try:
        document = json.loads(text)
        raw_edges = document["edges"] if isinstance(document, dict) else document
        edges = [(int(a), int(b)) for a, b in raw_edges]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(f"not a forest document: {e}") from e
    for a, b in edges:
        if not (0 <= a < g.n and 0 <= b < g.n) or a == b:
            raise GraphFormatError(f"forest edge {a} {b} is not a pair of distinct vertices of the graph")
    return ParityForest(g, f, tuple(edges))


def read_text(path: str) -> str:
    """Read a UTF-8 file, reporting missing files as format errors."""
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"cannot read {path}: {e.strerror}") from e
