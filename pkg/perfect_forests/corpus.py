"""Seeded random instances for certification runs and property tests."""

import logging
import random

from perfect_forests.forest import ParityTarget
from perfect_forests.graph import Graph
from perfect_forests.reductions.cnf import CnfInstance

log: logging.Logger = logging.getLogger(__name__)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """
    Draw a connected graph: a random spanning tree plus each other pair with probability p.

    Args:
    ----
        rng (random.Random): Source of randomness; the result depends only on its state
        n (int): Number of vertices, at least 1
        p (float): Probability of each non-tree edge

    Returns:
    -------
        Graph: A connected graph on n vertices

    """
    if n < 1:
        raise ValueError("a connected graph needs at least one vertex")
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def random_even_sum_target(rng: random.Random, n: int) -> ParityTarget:
    """Draw a uniform target among the even-sum ones."""
    if n < 1:
        return ParityTarget([])
    bits = [rng.randrange(2) for _ in range(n - 1)]
    bits.append(sum(bits) % 2)
    return ParityTarget(bits)


def random_cnf(rng: random.Random, num_vars: int, num_clauses: int, distinct: bool = True) -> CnfInstance:
    """
    Draw a 3-CNF formula with random literal signs.

    With distinct set (and at least three variables) every clause uses three
    different variables; otherwise variables are drawn with replacement.
    """
    if num_vars < 1:
        raise ValueError("a formula needs at least one variable")
    clauses = []
    for _ in range(num_clauses):
        if distinct and num_vars >= 3:
            chosen = rng.sample(range(1, num_vars + 1), 3)
        else:
            chosen = [rng.randint(1, num_vars) for _ in range(3)]
        clauses.append([v if rng.random() < 0.5 else -v for v in chosen])
    return CnfInstance.of(num_vars, clauses)
