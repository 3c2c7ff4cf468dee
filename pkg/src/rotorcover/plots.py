"""Figure rendering for the report commands.

Each helper draws one figure to a file next to the delimited output and
returns the path.  Everything goes through the Agg backend; nothing here
opens a window.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .basegraph import BaseGraph
from .forests import FixedPointResult, LogForestTable, SlopeReport

_RC = {
    "figure.figsize": (7.0, 4.5),
    "figure.dpi": 110,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "legend.frameon": False,
}


def _axes(title: str, xlabel: str, ylabel: str):
    fig, ax = plt.subplots()
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    return fig, ax


def _save(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_gamma(
    g: BaseGraph,
    gammas,
    path: str,
    fixed: FixedPointResult | None = None,
) -> str:
    """Gamma against height per type, with fixed-point asymptotes if given.

    gammas is indexed [h-1][type] and may hold Fractions or floats.
    """
    with plt.rc_context(_RC):
        fig, ax = _axes("gamma ratio by height", "height h", "gamma(i, h)")
        hs = range(1, len(gammas) + 1)
        for i in range(g.m):
            ax.plot(hs, [float(row[i]) for row in gammas], marker="o", label=f"type {i + 1}")
        if fixed is not None:
            for i, u in enumerate(fixed.upsilon):
                ax.axhline(u, linestyle=":", linewidth=1.0, color=f"C{i}")
        ax.legend()
        return _save(fig, path)


def plot_growth(g: BaseGraph, table: LogForestTable, path: str, report: SlopeReport | None = None) -> str:
    """log log of the group order against height, with the fitted slope."""
    with plt.rc_context(_RC):
        fig, ax = _axes("doubly exponential growth", "height h", "log log order(i, h)")
        hs = list(range(2, table.height + 1))
        for i in range(g.m):
            ys = [math.log(table.log_order(i, h)) for h in hs]
            ax.plot(hs, ys, marker=".", label=f"type {i + 1}")
        if report is not None:
            xs = [report.h_min, report.h_max]
            mid_i = 0
            anchor = math.log(table.log_order(mid_i, report.h_min))
            ax.plot(
                xs,
                [anchor, anchor + report.mean_slope * (report.h_max - report.h_min)],
                linestyle="--",
                color="black",
                label=f"fit slope {report.mean_slope:.4f} vs log rho {report.target:.4f}",
            )
        ax.legend()
        return _save(fig, path)


def plot_root_orders(g: BaseGraph, table, path: str) -> str:
    """log10 of the root order against height per type."""
    with plt.rc_context(_RC):
        fig, ax = _axes("root element order", "height h", "log10 R(i, h)")
        hs = range(1, table.height + 1)
        for i in range(g.m):
            ax.plot(
                hs,
                [math.log10(table.r(i, h)) for h in hs],
                marker="o",
                label=f"type {i + 1}",
            )
        ax.legend()
        return _save(fig, path)


def plot_hitting(g: BaseGraph, table, path: str) -> str:
    """Downward hitting probability against height per type."""
    with plt.rc_context(_RC):
        fig, ax = _axes("downward hitting probability", "height h", "H_down(i, h)")
        hs = range(1, table.height + 1)
        for i in range(g.m):
            ax.plot(
                hs,
                [float(table.h_down(i, h)) for h in hs],
                marker="o",
                label=f"type {i + 1}",
            )
        ax.set_ylim(0.0, 1.0)
        ax.legend()
        return _save(fig, path)
