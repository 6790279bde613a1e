"""Module to test the random corpus and the certification run."""

import random

import pytest

from perfect_forests.certify import CHECKS, certify
from perfect_forests.corpus import random_cnf, random_connected_graph, random_even_sum_target
from perfect_forests.graph import is_connected
from perfect_forests.settings_schemas import CertifySettings


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_random_graphs_are_connected(n):
    """Test connectivity and vertex count."""
    g = random_connected_graph(random.Random(n), n, 0.2)
    assert g.n == n
    assert is_connected(g)


def test_random_graphs_are_reproducible():
    """Test that equal seeds give equal graphs."""
    assert random_connected_graph(random.Random(3), 7, 0.4) == random_connected_graph(random.Random(3), 7, 0.4)


def test_random_graph_needs_a_vertex():
    """Test n = 0."""
    with pytest.raises(ValueError):
        random_connected_graph(random.Random(0), 0, 0.5)


def test_random_targets_have_even_sum():
    """Test many draws."""
    rng = random.Random(11)
    for n in range(0, 9):
        assert random_even_sum_target(rng, n).total() % 2 == 0


def test_random_cnf():
    """Test clause shapes with and without distinct variables."""
    cnf = random_cnf(random.Random(5), 4, 6)
    assert cnf.num_clauses == 6
    assert all(len({abs(lit) for lit in clause}) == 3 for clause in cnf.clauses)
    single = random_cnf(random.Random(5), 1, 2)
    assert all(abs(lit) == 1 for clause in single.clauses for lit in clause)
    with pytest.raises(ValueError):
        random_cnf(random.Random(5), 0, 1)


def test_certify_small_run():
    """Test a short seeded run of every check."""
    report = certify(CertifySettings(seed=1, trials=5, max_vertices=6))
    assert report.seed == 1
    assert [c.name for c in report.checks] == list(CHECKS)
    assert len(report.checks) == 6
    assert report.ok
    assert all(0 <= c.trials <= 5 for c in report.checks)


def test_certify_is_reproducible():
    """Test that the same seed gives the same report."""
    settings = CertifySettings(seed=4, trials=3, max_vertices=5)
    assert certify(settings) == certify(settings)
