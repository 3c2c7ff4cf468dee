"""Direct checks of the verification matrix helpers (the full matrix runs
in the acceptance suite)."""

import random

from rotorcover import build_cover, wire
from rotorcover.verify import (
    BUDGETS,
    check_closed_forms,
    check_golden_orders,
    check_hitting,
    check_spectral,
    example_graphs,
    random_graph,
    small_trees,
)


def test_budget_registry():
    assert set(BUDGETS) == {"small", "full"}
    assert BUDGETS["small"].order_height <= BUDGETS["full"].order_height


def test_example_graphs():
    names = [name for name, _ in example_graphs()]
    assert names == ["fibonacci", "biregular:2,3"]


def test_random_graph_deterministic():
    a = random_graph(random.Random(5))
    b = random_graph(random.Random(5))
    assert a == b
    assert a.m <= 3
    assert max(max(row) for row in a.adjacency) <= 2


def test_small_trees_respect_cap():
    budget = BUDGETS["small"]
    trees = small_trees(budget)
    assert len(trees) == 15
    for label, g, i, h in trees:
        w = wire(build_cover(g, i, h))
        assert w.n <= budget.axiom_vertex_cap


def _all_pass(results):
    assert results
    failed = [r for r in results if not r.passed]
    assert not failed, failed


def test_goldens_pass():
    _all_pass(check_golden_orders())


def test_spectral_pass():
    _all_pass(check_spectral())


def test_hitting_pass():
    _all_pass(check_hitting(BUDGETS["small"]))


def test_closed_forms_pass():
    _all_pass(check_closed_forms())
