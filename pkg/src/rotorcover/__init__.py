"""Rotor-router groups, root periods and hitting probabilities on
truncated directed covers of finite base graphs.

The package computes three families of exact quantities for the wired
truncation of a directed cover: the order of the rotor-router group
(spanning-forest recursion, Laplacian determinant, or brute-force
enumeration), the order of the root element (lcm recursion, explosion
formula, or particle simulation) and the probability that a random walk
from the root drains downward (rational recursion or the exact ratio
S_down / R).  Floating-point companions cover spectral radii, gamma
fixed points and doubly exponential growth rates.
"""

from .basegraph import (
    BaseGraph,
    SpectralResult,
    biregular_graph,
    canonical_chi,
    fibonacci_graph,
    graph_from_adjacency,
    is_strongly_connected,
    load_graph,
    parse_graph,
    resolve_graph,
    spectral_radius,
)
from .cover import SINK, CoverTree, WiredTree, build_cover, cone, export_tree, level_counts, wire
from .errors import (
    CapExceededError,
    ConvergenceError,
    GraphInputError,
    RotorCoverError,
    UnsupportedRegimeError,
)
from .forests import (
    FixedPointResult,
    ForestTable,
    LogForestTable,
    SlopeReport,
    asymptotic_slope,
    fixed_point,
    forest_recursion,
    gamma_sequence,
    gamma_strictly_decreasing,
    group_order,
    log_forest_table,
    slope_report,
)
from .plots import plot_gamma, plot_growth, plot_hitting, plot_root_orders
from .report import Column, Report, render, to_csv, to_json, to_table
from .rootorder import (
    HittingTable,
    RootOrderTable,
    biregular_closed_form,
    escape_prefix_formula,
    explosion,
    explosion_escape,
    hitting_probabilities,
    root_order,
    root_order_recursion,
    root_order_simulated,
    shift,
)
from .rotor import (
    EscapeResult,
    Exit,
    PeriodResult,
    RoutingResult,
    apply_generator,
    enumerate_recurrent,
    escape_sequence,
    is_recurrent,
    orbit_of_zero,
    route_to_sink,
    step,
    zero_config,
    zero_period,
)
from .sandpile import (
    ChipConfig,
    count_spanning_trees_bruteforce,
    det_bigint,
    reduced_laplacian,
    sink_multiplicities,
    stabilize,
    topple,
)

__version__ = "0.1.0"

__all__ = [
    "BaseGraph",
    "CapExceededError",
    "ChipConfig",
    "Column",
    "ConvergenceError",
    "CoverTree",
    "EscapeResult",
    "Exit",
    "FixedPointResult",
    "ForestTable",
    "GraphInputError",
    "HittingTable",
    "LogForestTable",
    "PeriodResult",
    "Report",
    "RootOrderTable",
    "RotorCoverError",
    "RoutingResult",
    "SINK",
    "SlopeReport",
    "SpectralResult",
    "UnsupportedRegimeError",
    "WiredTree",
    "apply_generator",
    "asymptotic_slope",
    "biregular_closed_form",
    "biregular_graph",
    "build_cover",
    "canonical_chi",
    "cone",
    "count_spanning_trees_bruteforce",
    "det_bigint",
    "enumerate_recurrent",
    "escape_prefix_formula",
    "escape_sequence",
    "explosion",
    "explosion_escape",
    "export_tree",
    "fibonacci_graph",
    "fixed_point",
    "forest_recursion",
    "gamma_sequence",
    "gamma_strictly_decreasing",
    "graph_from_adjacency",
    "group_order",
    "hitting_probabilities",
    "is_recurrent",
    "is_strongly_connected",
    "level_counts",
    "load_graph",
    "log_forest_table",
    "orbit_of_zero",
    "parse_graph",
    "plot_gamma",
    "plot_growth",
    "plot_hitting",
    "plot_root_orders",
    "reduced_laplacian",
    "render",
    "resolve_graph",
    "root_order",
    "root_order_recursion",
    "root_order_simulated",
    "route_to_sink",
    "shift",
    "sink_multiplicities",
    "slope_report",
    "spectral_radius",
    "stabilize",
    "step",
    "to_csv",
    "to_json",
    "to_table",
    "wire",
    "zero_config",
    "zero_period",
]
