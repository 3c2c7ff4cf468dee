"""Figure rendering smoke tests; only file creation is asserted."""

from rotorcover import (
    fixed_point,
    forest_recursion,
    hitting_probabilities,
    log_forest_table,
    plot_gamma,
    plot_growth,
    plot_hitting,
    plot_root_orders,
    root_order_recursion,
    slope_report,
)


def _check(path):
    assert path.exists()
    assert path.stat().st_size > 1000


def test_plot_gamma(fib, tmp_path):
    table = forest_recursion(fib, 8)
    gammas = [[table.gamma(i, h) for i in range(fib.m)] for h in range(1, 9)]
    out = tmp_path / "gamma.png"
    assert plot_gamma(fib, gammas, str(out), fixed=fixed_point(fib)) == str(out)
    _check(out)


def test_plot_growth(fib, tmp_path):
    out = tmp_path / "growth.png"
    plot_growth(fib, log_forest_table(fib, 25), str(out), report=slope_report(fib, 10, 25))
    _check(out)


def test_plot_root_orders(bir, tmp_path):
    out = tmp_path / "orders.png"
    plot_root_orders(bir, root_order_recursion(bir, 8), str(out))
    _check(out)


def test_plot_hitting(fib, tmp_path):
    out = tmp_path / "hitting.png"
    plot_hitting(fib, hitting_probabilities(fib, 8), str(out))
    _check(out)
