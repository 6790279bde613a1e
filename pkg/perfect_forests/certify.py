"""Seeded comparison of every polynomial algorithm with its brute-force oracle."""

import logging
import random
from collections.abc import Callable

from perfect_forests.avoid_edge import decide_avoid_edge
from perfect_forests.corpus import random_connected_graph, random_even_sum_target
from perfect_forests.forest import (
    Infeasible,
    ParityForest,
    exists_f_parity_forest,
    is_odd_degree_tree,
)
from perfect_forests.graph import Graph
from perfect_forests.matching import WeightedGraph, min_weight_perfect_matching
from perfect_forests.min_forest import min_f_parity_forest
from perfect_forests.one_forest import is_class_B, proper_one_perfect_forest
from perfect_forests.oracle import (
    OracleLimits,
    bf_exists_avoiding,
    bf_max_zero_forest,
    bf_min_forest,
    bf_min_perfect_matching,
    bf_proper_one_forest,
)
from perfect_forests.schemas import CertifyReport, CheckResult
from perfect_forests.settings_schemas import CertifySettings

log: logging.Logger = logging.getLogger(__name__)

EDGE_PROBABILITY = 0.35

Check = Callable[[random.Random, int, OracleLimits], bool | None]


def _graph(rng: random.Random, n: int, limits: OracleLimits) -> Graph | None:
    g = random_connected_graph(rng, n, EDGE_PROBABILITY)
    return g if g.m <= limits.edge_cap else None


def _check_exists(rng: random.Random, n: int, limits: OracleLimits) -> bool | None:
    g = _graph(rng, n, limits)
    if g is None:
        return None
    f = random_even_sum_target(rng, n)
    return exists_f_parity_forest(g, f).ok and bf_min_forest(g, f, limits) is not None


def _check_min_forest(rng: random.Random, n: int, limits: OracleLimits) -> bool | None:
    g = _graph(rng, n, limits)
    if g is None:
        return None
    f = random_even_sum_target(rng, n)
    expected = bf_min_forest(g, f, limits)
    forest = min_f_parity_forest(g, f)
    return expected is not None and forest.ok and forest.size == expected.size


def _check_avoid_edge(rng: random.Random, n: int, limits: OracleLimits) -> bool | None:
    g = _graph(rng, n, limits)
    if g is None or g.m == 0:
        return None
    f = random_even_sum_target(rng, n)
    e = rng.choice(g.edges)
    answer = decide_avoid_edge(g, e, f)
    expected = bf_exists_avoiding(g, e, f, limits)
    if isinstance(answer, Infeasible):
        return expected is None
    return expected is not None and answer.ok and e not in answer.edges


def _check_proper_one_forest(rng: random.Random, n: int, limits: OracleLimits) -> bool | None:
    n = n if n % 2 else n - 1
    if n < 3:
        return None
    g = _graph(rng, n, limits)
    if g is None:
        return None
    answer = proper_one_perfect_forest(g)
    expected = bf_proper_one_forest(g, limits)
    if isinstance(answer, Infeasible):
        return expected is None and is_class_B(g)
    return expected is not None and answer.ok and not is_class_B(g)


def _check_matching(rng: random.Random, n: int, limits: OracleLimits) -> bool | None:
    n = n if n % 2 == 0 else n - 1
    g = _graph(rng, n, limits)
    if g is None:
        return None
    wg = WeightedGraph(g, {e: rng.randint(0, 100) for e in g.edges})
    expected = bf_min_perfect_matching(wg)
    matching = min_weight_perfect_matching(wg)
    if matching is None:
        return expected is None
    return expected is not None and matching.covers(g.n) and matching.weight(wg) == expected[0]


def _check_odd_degree_tree(rng: random.Random, n: int, limits: OracleLimits) -> bool | None:
    n = n if n % 2 == 0 else n - 1
    g = _graph(rng, n, limits)
    if g is None:
        return None
    best: ParityForest | None = bf_max_zero_forest(g, limits)
    return is_odd_degree_tree(g) == (best is not None and best.size == g.n - 1)


CHECKS: dict[str, Check] = {
    "exists-forest": _check_exists,
    "min-forest": _check_min_forest,
    "avoid-edge": _check_avoid_edge,
    "proper-one-forest": _check_proper_one_forest,
    "min-matching": _check_matching,
    "odd-degree-tree": _check_odd_degree_tree,
}


def certify(settings: CertifySettings, limits: OracleLimits = OracleLimits()) -> CertifyReport:
    """
    Run every check on a seeded random corpus.

    Each check gets its own generator seeded from settings.seed, so a
    single check can be reproduced on its own.  Instances above the oracle
    caps are skipped and not counted.

    Args:
    ----
        settings (CertifySettings): Seed, trial count and largest graph
        limits (OracleLimits): Oracle caps

    Returns:
    -------
        CertifyReport: Trials run and failures per check

    """
    results: list[CheckResult] = []
    for index, (name, check) in enumerate(CHECKS.items()):
        rng = random.Random(settings.seed * len(CHECKS) + index)
        trials = failures = 0
        for _ in range(settings.trials):
            n = rng.randint(2, settings.max_vertices)
            outcome = check(rng, n, limits)
            if outcome is None:
                continue
            trials += 1
            if not outcome:
                failures += 1
                log.warning("Check %s failed on a %d-vertex instance", name, n)
        log.info("Check %s: %d trials, %d failures", name, trials, failures)
        results.append(CheckResult(name=name, trials=trials, failures=failures))
    return CertifyReport(seed=settings.seed, checks=results)