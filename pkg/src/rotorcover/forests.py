"""Spanning-forest counts, group orders and their growth on wired covers.

The rotor-router group of a wired height-h cover rooted at type i has
order equal to the number of oriented spanning trees rooted at the sink.
Those trees split into two families: F_down(i, h) counts the ones where
the root's tree edge is its ancestor entry (the particle view: mass
drains downward) and F_up(i, h) counts the ones whose root drains through
the height-h boundary.  Their sum is the group order.

Both families satisfy a closed recursion over the base graph.  Writing
order(j, h-1) = F_down(j, h-1) + F_up(j, h-1):

    F_down(i, h) = prod_j order(j, h-1) ** d[i][j]
    F_up(i, h)   = F_down(i, h) * sum_j d[i][j] * F_up(j, h-1) / order(j, h-1)

with F_down(i, 1) = 1 and F_up(i, 1) = d_i.  Every division above is
exact: order(j, h-1) divides F_down(i, h) whenever d[i][j] > 0, and the
implementation asserts that instead of trusting it.

The ratio gamma(i, h) = F_up / F_down obeys its own rational recursion

    gamma(i, h) = sum_j d[i][j] * gamma(j, h-1) / (1 + gamma(j, h-1))

starting from gamma(i, 1) = d_i.  It decreases strictly in h and converges
to the largest fixed point of the same map, which is positive exactly when
the adjacency spectral radius exceeds one.  In that regime group orders
grow doubly exponentially: log F_down grows like rho(D) ** h, which the
log-domain backend below tracks in floating point far beyond the reach of
exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .basegraph import BaseGraph, spectral_radius
from .errors import ConvergenceError, UnsupportedRegimeError

# Spectral slack above 1 before positivity of the fixed point is enforced.
RHO_MARGIN = 1e-6


@dataclass(frozen=True)
class ForestTable:
    """Exact forest counts for heights 1..height, indexed [h-1][type]."""

    graph: BaseGraph
    height: int
    down: tuple[tuple[int, ...], ...]
    up: tuple[tuple[int, ...], ...]

    def f_down(self, i: int, h: int) -> int:
        return self.down[h - 1][i]

    def f_up(self, i: int, h: int) -> int:
        return self.up[h - 1][i]

    def order(self, i: int, h: int) -> int:
        return self.down[h - 1][i] + self.up[h - 1][i]

    def gamma(self, i: int, h: int) -> Fraction:
        return Fraction(self.up[h - 1][i], self.down[h - 1][i])


def forest_recursion(g: BaseGraph, height: int) -> ForestTable:
    """Evaluate the forest recursion exactly up to the given height."""
    if height < 1:
        raise ValueError(f"height must be at least 1, got {height}")
    m = g.m
    d = g.adjacency
    down_rows = [tuple(1 for _ in range(m))]
    up_rows = [tuple(g.degrees)]
    for _ in range(2, height + 1):
        prev_down = down_rows[-1]
        prev_up = up_rows[-1]
        prev_order = [prev_down[j] + prev_up[j] for j in range(m)]
        down_h = []
        up_h = []
        for i in range(m):
            prod = 1
            for j in range(m):
                if d[i][j]:
                    prod *= prev_order[j] ** d[i][j]
            acc = 0
            for j in range(m):
                if d[i][j]:
                    quotient, rem = divmod(prod, prev_order[j])
                    assert rem == 0, "forest recursion lost integrality"
                    acc += d[i][j] * prev_up[j] * quotient
            down_h.append(prod)
            up_h.append(acc)
        down_rows.append(tuple(down_h))
        up_rows.append(tuple(up_h))
    return ForestTable(graph=g, height=height, down=tuple(down_rows), up=tuple(up_rows))


def group_order(g: BaseGraph, root_type: int, height: int) -> int:
    """Order of the rotor-router group of the wired height-h cover."""
    return forest_recursion(g, height).order(root_type, height)


def gamma_sequence(g: BaseGraph, height: int) -> tuple[tuple[Fraction, ...], ...]:
    """Exact gamma ratios by their own recursion, independent of the table.

    Returned rows are indexed [h-1][type].  Kept separate from
    forest_recursion on purpose: agreement of the two computations is one
    of the package's cross-checks.  Each step normalizes big rationals, so
    for heights much past 20 prefer ForestTable.gamma.
    """
    if height < 1:
        raise ValueError(f"height must be at least 1, got {height}")
    m = g.m
    d = g.adjacency
    rows = [tuple(Fraction(deg) for deg in g.degrees)]
    for _ in range(2, height + 1):
        prev = rows[-1]
        rows.append(
            tuple(
                sum(
                    (d[i][j] * prev[j] / (1 + prev[j]) for j in range(m) if d[i][j]),
                    start=Fraction(0),
                )
                for i in range(m)
            )
        )
    return tuple(rows)


def gamma_strictly_decreasing(table: ForestTable) -> bool:
    """Check gamma(i, h+1) < gamma(i, h) for every type and height.

    Compares integer cross products rather than normalized Fractions; at
    height 30 the counts run to hundreds of thousands of digits and gcd
    normalization would dwarf the multiplications.
    """
    for h in range(1, table.height):
        prev_down, prev_up = table.down[h - 1], table.up[h - 1]
        next_down, next_up = table.down[h], table.up[h]
        for i in range(table.graph.m):
            if next_up[i] * prev_down[i] >= prev_up[i] * next_down[i]:
                return False
    return True


@dataclass(frozen=True)
class FixedPointResult:
    upsilon: tuple[float, ...]
    residual: float
    iterations: int
    converged: bool


def _gamma_map(d, v):
    return [
        sum(d[i][j] * v[j] / (1.0 + v[j]) for j in range(len(v)) if d[i][j])
        for i in range(len(v))
    ]


def fixed_point(
    g: BaseGraph, tolerance: float = 1e-12, max_iter: int = 10**6
) -> FixedPointResult:
    """Limit of the gamma sequence, by iterating its map in floating point.

    Starts from the degree vector, which bounds the sequence from above,
    and stops when the sup-norm step drops below the tolerance.  When the
    spectral radius exceeds one the limit is the unique positive fixed
    point; positivity of the result is asserted in that regime.  At
    spectral radius one the decay toward zero is only algebraic, so tight
    tolerances may exhaust max_iter.
    """
    d = g.adjacency
    v = [float(deg) for deg in g.degrees]
    for it in range(1, max_iter + 1):
        nxt = _gamma_map(d, v)
        change = max(abs(a - b) for a, b in zip(nxt, v))
        v = nxt
        if change < tolerance:
            followup = _gamma_map(d, v)
            residual = max(abs(a - b) for a, b in zip(followup, v))
            if spectral_radius(g).rho > 1.0 + RHO_MARGIN:
                assert all(u > 0.0 for u in v), "fixed point lost positivity"
            return FixedPointResult(
                upsilon=tuple(v), residual=residual, iterations=it, converged=True
            )
    raise ConvergenceError(
        f"gamma iteration still moving more than {tolerance} after {max_iter} steps"
    )


@dataclass(frozen=True)
class LogForestTable:
    """Floating-point log F_down and gamma, indexed like ForestTable.

    x[h-1][i] carries log F_down(i, h); adding log(1 + gamma) gives the
    log of the group order.  The recursion never leaves log scale, so
    heights far beyond exact reach stay cheap.
    """

    graph: BaseGraph
    height: int
    x: tuple[tuple[float, ...], ...]
    gamma: tuple[tuple[float, ...], ...]

    def log_f_down(self, i: int, h: int) -> float:
        return self.x[h - 1][i]

    def log_order(self, i: int, h: int) -> float:
        return self.x[h - 1][i] + math.log1p(self.gamma[h - 1][i])


def log_forest_table(g: BaseGraph, height: int) -> LogForestTable:
    """Log-domain companion of forest_recursion.

    x(i, h) = sum_j d[i][j] * (x(j, h-1) + log(1 + gamma(j, h-1))) with
    x(i, 1) = 0, alongside the float gamma recursion.
    """
    if height < 1:
        raise ValueError(f"height must be at least 1, got {height}")
    m = g.m
    d = g.adjacency
    xs = [tuple(0.0 for _ in range(m))]
    gs = [tuple(float(deg) for deg in g.degrees)]
    for _ in range(2, height + 1):
        px = xs[-1]
        pg = gs[-1]
        xs.append(
            tuple(
                sum(d[i][j] * (px[j] + math.log1p(pg[j])) for j in range(m) if d[i][j])
                for i in range(m)
            )
        )
        gs.append(tuple(_gamma_map(d, pg)))
    return LogForestTable(graph=g, height=height, x=tuple(xs), gamma=tuple(gs))


@dataclass(frozen=True)
class SlopeReport:
    """Least-squares growth rates of log log order against height."""

    h_min: int
    h_max: int
    slopes: tuple[float, ...]
    mean_slope: float
    target: float
    rel_error: float


def slope_report(g: BaseGraph, h_min: int, h_max: int) -> SlopeReport:
    """Fit log log order(i, h) ~ slope * h per type and compare to log rho.

    Only meaningful in the doubly exponential regime; a spectral radius at
    or below one is rejected.
    """
    if h_max <= h_min:
        raise ValueError("slope fit needs h_max > h_min")
    rho = spectral_radius(g).rho
    if rho <= 1.0 + RHO_MARGIN:
        raise UnsupportedRegimeError(
            f"spectral radius {rho:.6f} is not above 1; orders do not grow doubly exponentially"
        )
    table = log_forest_table(g, h_max)
    hs = np.arange(h_min, h_max + 1, dtype=float)
    slopes = []
    for i in range(g.m):
        ys = np.array([math.log(table.log_order(i, h)) for h in range(h_min, h_max + 1)])
        slopes.append(float(np.polyfit(hs, ys, 1)[0]))
    mean_slope = float(np.mean(slopes))
    target = math.log(rho)
    return SlopeReport(
        h_min=h_min,
        h_max=h_max,
        slopes=tuple(slopes),
        mean_slope=mean_slope,
        target=target,
        rel_error=abs(mean_slope - target) / target,
    )


def asymptotic_slope(g: BaseGraph, h_min: int, h_max: int) -> float:
    """Mean fitted growth rate; approximates log rho(D) for large windows."""
    return slope_report(g, h_min, h_max).mean_slope
