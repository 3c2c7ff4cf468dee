"""Forest recursion, gamma monotonicity, fixed points and growth slopes."""

import math
from fractions import Fraction

import pytest

from rotorcover import (
    ConvergenceError,
    UnsupportedRegimeError,
    build_cover,
    det_bigint,
    fixed_point,
    forest_recursion,
    gamma_sequence,
    gamma_strictly_decreasing,
    graph_from_adjacency,
    group_order,
    log_forest_table,
    reduced_laplacian,
    slope_report,
    wire,
)

# (type, h) -> (F_down, F_up) for the fibonacci base graph
FIB_FORESTS = {
    (0, 1): (1, 1),
    (1, 1): (1, 2),
    (0, 2): (3, 2),
    (1, 2): (6, 7),
    (0, 3): (13, 7),
    (1, 3): (65, 61),
}


def test_forest_golden_fibonacci(fib):
    table = forest_recursion(fib, 3)
    for (i, h), (down, up) in FIB_FORESTS.items():
        assert (table.f_down(i, h), table.f_up(i, h)) == (down, up)
        assert table.order(i, h) == down + up


def test_forest_golden_biregular(bir):
    table = forest_recursion(bir, 2)
    assert (table.f_down(0, 2), table.f_up(0, 2), table.order(0, 2)) == (16, 24, 40)
    assert (table.f_down(1, 2), table.f_up(1, 2), table.order(1, 2)) == (27, 54, 81)


@pytest.mark.parametrize("height", [1, 2, 3, 4])
def test_order_equals_determinant(fib, bir, height):
    for g in (fib, bir):
        for i in range(g.m):
            w = wire(build_cover(g, i, height))
            assert group_order(g, i, height) == det_bigint(reduced_laplacian(w))


def test_gamma_sequence_matches_table(fib):
    table = forest_recursion(fib, 10)
    seq = gamma_sequence(fib, 10)
    for h in range(1, 11):
        for i in range(fib.m):
            assert seq[h - 1][i] == table.gamma(i, h)


def test_gamma_decreasing(fib, bir):
    assert gamma_strictly_decreasing(forest_recursion(fib, 12))
    assert gamma_strictly_decreasing(forest_recursion(bir, 10))


def test_self_loop_exact():
    # single type with one loop: gamma at height h is exactly 1/h
    g = graph_from_adjacency(((1,),))
    table = forest_recursion(g, 30)
    for h in range(1, 31):
        assert table.gamma(0, h) == Fraction(1, h)
        assert table.order(0, h) == h + 1


def test_fixed_point_fibonacci(fib):
    fp = fixed_point(fib)
    assert fp.converged
    assert abs(fp.upsilon[0] - (math.sqrt(2) - 1)) < 1e-9
    assert abs(fp.upsilon[1] - math.sqrt(2) / 2) < 1e-9
    assert fp.residual < 1e-12


def test_fixed_point_biregular(bir):
    fp = fixed_point(bir)
    assert abs(fp.upsilon[0] - 1.25) < 1e-9
    assert abs(fp.upsilon[1] - 5 / 3) < 1e-9


def test_fixed_point_critical_is_zero():
    # spectral radius one: the limit vanishes, slowly
    fp = fixed_point(graph_from_adjacency(((1,),)), tolerance=1e-9)
    assert fp.converged
    assert fp.upsilon[0] < 1e-4


def test_fixed_point_budget():
    with pytest.raises(ConvergenceError):
        fixed_point(graph_from_adjacency(((1,),)), tolerance=1e-15, max_iter=3)


def test_log_backend_agreement(fib, bir):
    for g in (fib, bir):
        exact = forest_recursion(g, 12)
        logs = log_forest_table(g, 12)
        for h in range(1, 13):
            for i in range(g.m):
                want = math.log(exact.order(i, h))
                assert abs(logs.log_order(i, h) - want) <= 1e-10 * max(1.0, want)


def test_slope_report(fib):
    rep = slope_report(fib, 10, 25)
    assert rep.target == pytest.approx(math.log((1 + math.sqrt(5)) / 2), abs=1e-12)
    assert rep.rel_error < 0.005
    assert len(rep.slopes) == 2


def test_slope_needs_supercritical():
    with pytest.raises(UnsupportedRegimeError):
        slope_report(graph_from_adjacency(((1,),)), 10, 25)
    with pytest.raises(UnsupportedRegimeError):
        slope_report(graph_from_adjacency(((0, 1), (1, 0))), 10, 25)
