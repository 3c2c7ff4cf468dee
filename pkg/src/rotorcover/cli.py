"""Command line interface.

Reports render as aligned text, CSV or JSON and can be written to a file;
the table-producing commands can also render a matplotlib figure next to
the delimited output.  Graphs are given as a preset name ("fibonacci",
"biregular:2,3") or a path to a JSON document with fields "m",
"adjacency" and optional "chi" (1-based labels).

Usage examples:

    rotorcover group-order --graph fibonacci --type 2 --height 2
    rotorcover root-order --graph fibonacci --type 2 --heights 1..5
    rotorcover gamma --graph biregular:2,3 --heights 1..8 --format csv
    rotorcover fixed-point --graph fibonacci
    rotorcover slope --graph fibonacci --heights 10..25 --figure growth.png
    rotorcover simulate --graph fibonacci --type 2 --height 3 --trace trace.csv
    rotorcover escape --graph fibonacci --type 2 --height 3
    rotorcover hitting --graph fibonacci --heights 1..6
    rotorcover verify --budget small --seed 0

Exit codes: 0 success, 2 bad input, 3 size cap exceeded, 4 verification
failure (an oracle disagreed or a verify check failed).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

import click

from .basegraph import resolve_graph, spectral_radius
from .cover import build_cover, wire
from .errors import (
    CapExceededError,
    ConvergenceError,
    GraphInputError,
    UnsupportedRegimeError,
)
from .forests import fixed_point, forest_recursion, log_forest_table, slope_report
from .plots import plot_gamma, plot_growth, plot_hitting, plot_root_orders
from .report import Column, Report, render
from .rootorder import explosion_escape, hitting_probabilities, root_order_recursion
from .rotor import Exit, route_to_sink, zero_config, zero_period
from .sandpile import count_spanning_trees_bruteforce, det_bigint, reduced_laplacian
from .verify import BUDGETS, run_verification

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_VERIFY = 4

DET_VERTEX_GATE = 400


@dataclass(frozen=True)
class RunConfig:
    """Options shared by the report-producing commands."""

    graph_spec: str
    command: str
    fmt: str = "table"
    output: str | None = None
    figure: str | None = None


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(body):
    """Map library errors onto the documented exit codes."""
    try:
        return body()
    except (GraphInputError, UnsupportedRegimeError, ConvergenceError, ValueError) as exc:
        _fail(EXIT_INPUT, str(exc))
    except CapExceededError as exc:
        _fail(EXIT_CAP, str(exc))


def _emit(cfg: RunConfig, report: Report):
    text = render(report, cfg.fmt)
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        click.echo(text, nl=False)


def _parse_heights(height, heights):
    if (height is None) == (heights is None):
        raise GraphInputError("give exactly one of --height or --heights A..B")
    if height is not None:
        if height < 1:
            raise GraphInputError("height must be at least 1")
        return height, height
    lo, sep, hi = heights.partition("..")
    if not sep:
        raise GraphInputError(f"--heights wants A..B, got {heights!r}")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise GraphInputError(f"--heights wants integers, got {heights!r}") from None
    if a < 1 or b < a:
        raise GraphInputError(f"--heights needs 1 <= A <= B, got {heights!r}")
    return a, b


def _types(g, type_label):
    if type_label is None:
        return list(range(g.m))
    if not 1 <= type_label <= g.m:
        raise GraphInputError(f"--type {type_label} outside 1..{g.m}")
    return [type_label - 1]


def _graph_option(f):
    return click.option("--graph", "graph_spec", required=True, metavar="PATH|PRESET", help="Graph document path or preset (fibonacci, biregular:a,b).")(f)


def _format_option(f):
    return click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]), default="table", show_default=True, help="Report format.")(f)


def _output_option(f):
    return click.option("--output", type=click.Path(dir_okay=False, writable=True), default=None, help="Write the report here instead of stdout.")(f)


def _figure_option(f):
    return click.option("--figure", type=click.Path(dir_okay=False, writable=True), default=None, help="Render a figure of the report to this file.")(f)


@click.group()
@click.version_option(package_name="rotorcover")
def main():
    """Rotor-router group orders, root periods and hitting probabilities
    on truncated directed covers."""


@main.command(name="group-order")
@_graph_option
@click.option("--type", "type_label", type=int, default=None, help="1-based root type; all types when omitted.")
@click.option("--height", type=int, default=None)
@click.option("--heights", type=str, default=None, metavar="A..B")
@click.option("--cap", type=int, default=10**7, show_default=True, help="Brute-force search space cap.")
@click.option("--oracles/--no-oracles", default=True, show_default=True, help="Confirm with determinant and brute force where they fit the caps.")
@_format_option
@_output_option
@_figure_option
def group_order_cmd(graph_spec, type_label, height, heights, cap, oracles, fmt, output, figure):
    """Order of the rotor-router group of the wired cover.

    Computed by the exact forest recursion, confirmed against the reduced
    Laplacian determinant and, within the cap, brute-force spanning tree
    enumeration.  A disagreement exits with code 4.
    """

    def body():
        g = resolve_graph(graph_spec)
        lo, hi = _parse_heights(height, heights)
        types = _types(g, type_label)
        table = forest_recursion(g, hi)
        rows = []
        mismatches = []
        for h in range(lo, hi + 1):
            for i in types:
                order = table.order(i, h)
                det_cell = None
                brute_cell = None
                if oracles:
                    w = wire(build_cover(g, i, h))
                    if w.n <= DET_VERTEX_GATE:
                        det_cell = det_bigint(reduced_laplacian(w))
                        if det_cell != order:
                            mismatches.append(f"type {i + 1} h {h}: determinant {det_cell} != recursion {order}")
                    space = 1
                    for deg in w.degrees:
                        space *= deg
                    if space <= cap:
                        brute_cell = count_spanning_trees_bruteforce(w, cap=cap)
                        if brute_cell != order:
                            mismatches.append(f"type {i + 1} h {h}: brute force {brute_cell} != recursion {order}")
                rows.append((i + 1, h, table.f_down(i, h), table.f_up(i, h), order, det_cell, brute_cell))
        report = Report(
            columns=(
                Column("type", "int"),
                Column("h", "int"),
                Column("F_down", "bigint"),
                Column("F_up", "bigint"),
                Column("order", "bigint"),
                Column("determinant", "bigint"),
                Column("bruteforce", "bigint"),
            ),
            rows=tuple(rows),
            meta=(("graph", graph_spec), ("command", "group-order")),
        )
        _emit(RunConfig(graph_spec, "group-order", fmt, output, figure), report)
        if figure:
            plot_growth(g, log_forest_table(g, hi), figure)
        if mismatches:
            _fail(EXIT_VERIFY, "; ".join(mismatches))

    _guarded(body)


@main.command(name="root-order")
@_graph_option
@click.option("--type", "type_label", type=int, default=None, help="1-based root type; all types when omitted.")
@click.option("--height", type=int, default=None)
@click.option("--heights", type=str, default=None, metavar="A..B")
@click.option("--cap", type=int, default=10**6, show_default=True, help="Largest period the simulation check will run.")
@click.option("--simulate/--no-simulate", "confirm", default=True, show_default=True, help="Confirm each period by routing particles.")
@_format_option
@_output_option
@_figure_option
def root_order_cmd(graph_spec, type_label, height, heights, cap, confirm, fmt, output, figure):
    """Order of the root element: the lcm recursion for R, S_down, S_up.

    The gcd column reports gcd(S_down, R) as an observation, with no
    correctness claim attached.  With simulation on, periods within the
    cap are confirmed by routing particles; a mismatch exits with code 4.
    """

    def body():
        g = resolve_graph(graph_spec)
        lo, hi = _parse_heights(height, heights)
        types = _types(g, type_label)
        table = root_order_recursion(g, hi)
        rows = []
        mismatches = []
        for h in range(lo, hi + 1):
            for i in types:
                r = table.r(i, h)
                sim_cell = None
                if confirm and r <= cap:
                    sim = zero_period(wire(build_cover(g, i, h)), particle_cap=r + 1, collect_bits=False)
                    sim_cell = "match" if (sim.period, sim.downs, sim.ups) == (r, table.down(i, h), table.up(i, h)) else f"period {sim.period}"
                    if sim_cell != "match":
                        mismatches.append(f"type {i + 1} h {h}: simulated {sim_cell} != recursion {r}")
                rows.append((i + 1, h, table.down(i, h), table.up(i, h), r, table.down_gcd(i, h), sim_cell))
        report = Report(
            columns=(
                Column("type", "int"),
                Column("h", "int"),
                Column("S_down", "bigint"),
                Column("S_up", "bigint"),
                Column("R", "bigint"),
                Column("gcd_down", "bigint"),
                Column("simulated", "str"),
            ),
            rows=tuple(rows),
            meta=(("graph", graph_spec), ("command", "root-order")),
        )
        _emit(RunConfig(graph_spec, "root-order", fmt, output, figure), report)
        if figure:
            plot_root_orders(g, table, figure)
        if mismatches:
            _fail(EXIT_VERIFY, "; ".join(mismatches))

    _guarded(body)


@main.command(name="gamma")
@_graph_option
@click.option("--height", type=int, default=None)
@click.option("--heights", type=str, default=None, metavar="A..B")
@_format_option
@_output_option
@_figure_option
def gamma_cmd(graph_spec, height, heights, fmt, output, figure):
    """Exact forest counts and their up/down ratio gamma by height.

    Columns follow the delimited schema (type, h, F_down, F_up, order,
    gamma_num, gamma_den).  Exact arithmetic: heights past 30 on growing
    graphs produce entries with megabytes of digits.
    """

    def body():
        g = resolve_graph(graph_spec)
        lo, hi = _parse_heights(height, heights)
        table = forest_recursion(g, hi)
        rows = []
        for h in range(lo, hi + 1):
            for i in range(g.m):
                gam = table.gamma(i, h)
                rows.append((i + 1, h, table.f_down(i, h), table.f_up(i, h), table.order(i, h), gam.numerator, gam.denominator))
        report = Report(
            columns=(
                Column("type", "int"),
                Column("h", "int"),
                Column("F_down", "bigint"),
                Column("F_up", "bigint"),
                Column("order", "bigint"),
                Column("gamma_num", "bigint"),
                Column("gamma_den", "bigint"),
            ),
            rows=tuple(rows),
            meta=(("graph", graph_spec), ("command", "gamma")),
        )
        _emit(RunConfig(graph_spec, "gamma", fmt, output, figure), report)
        if figure:
            gammas = [[table.gamma(i, h) for i in range(g.m)] for h in range(1, hi + 1)]
            fixed = None
            try:
                fixed = fixed_point(g, tolerance=1e-9, max_iter=10**5)
            except ConvergenceError:
                pass
            plot_gamma(g, gammas, figure, fixed=fixed)

    _guarded(body)


@main.command(name="fixed-point")
@_graph_option
@click.option("--tolerance", type=float, default=1e-12, show_default=True, help="Sup-norm stopping tolerance.")
@click.option("--max-iter", type=int, default=10**6, show_default=True)
@_format_option
@_output_option
@_figure_option
def fixed_point_cmd(graph_spec, tolerance, max_iter, fmt, output, figure):
    """Limit of the gamma sequence: the fixed point of its defining map.

    Positive exactly when the adjacency spectral radius exceeds one.  At
    spectral radius one the decay is only algebraic and tight tolerances
    may exhaust the iteration budget.
    """

    def body():
        g = resolve_graph(graph_spec)
        fp = fixed_point(g, tolerance=tolerance, max_iter=max_iter)
        rows = [(i + 1, fp.upsilon[i]) for i in range(g.m)]
        report = Report(
            columns=(Column("type", "int"), Column("upsilon", "real")),
            rows=tuple(rows),
            meta=(
                ("graph", graph_spec),
                ("command", "fixed-point"),
                ("residual", f"{fp.residual:.3e}"),
                ("iterations", str(fp.iterations)),
                ("converged", str(fp.converged).lower()),
            ),
        )
        _emit(RunConfig(graph_spec, "fixed-point", fmt, output, figure), report)
        if figure:
            depth = 20
            logs = log_forest_table(g, depth)
            plot_gamma(g, [list(row) for row in logs.gamma], figure, fixed=fp)

    _guarded(body)


@main.command(name="slope")
@_graph_option
@click.option("--heights", type=str, default="10..25", show_default=True, metavar="A..B", help="Fit window.")
@_format_option
@_output_option
@_figure_option
def slope_cmd(graph_spec, heights, fmt, output, figure):
    """Doubly exponential growth rate of group orders.

    Fits log log order against height per type in the log domain and
    compares with log of the spectral radius.
    """

    def body():
        g = resolve_graph(graph_spec)
        lo, hi = _parse_heights(None, heights)
        rep = slope_report(g, lo, hi)
        rows = [(str(i + 1), rep.slopes[i], rep.target, abs(rep.slopes[i] - rep.target) / rep.target) for i in range(g.m)]
        rows.append(("mean", rep.mean_slope, rep.target, rep.rel_error))
        report = Report(
            columns=(
                Column("type", "str"),
                Column("slope", "real"),
                Column("log_rho", "real"),
                Column("rel_error", "real"),
            ),
            rows=tuple(rows),
            meta=(
                ("graph", graph_spec),
                ("command", "slope"),
                ("window", f"{lo}..{hi}"),
                ("rho", f"{spectral_radius(g).rho:.12g}"),
            ),
        )
        _emit(RunConfig(graph_spec, "slope", fmt, output, figure), report)
        if figure:
            plot_growth(g, log_forest_table(g, hi), figure, report=rep)

    _guarded(body)


@main.command(name="simulate")
@_graph_option
@click.option("--type", "type_label", type=int, required=True, help="1-based root type.")
@click.option("--height", type=int, required=True)
@click.option("--particles", type=int, default=None, help="Particles to route; defaults to one full period.")
@click.option("--cap", type=int, default=10**6, show_default=True, help="Cap on the default particle count.")
@click.option("--trace", type=click.Path(dir_okay=False, writable=True), default=None, help="Write one CSV line per particle (particle, exit, steps).")
@_format_option
@_output_option
def simulate_cmd(graph_spec, type_label, height, particles, cap, trace, fmt, output):
    """Route particles from the root of the zero configuration.

    Reports the up/down exit split, total rotor steps and whether the
    configuration returned to all zeros.  The optional trace file records
    every particle's exit side and step count.
    """

    def body():
        g = resolve_graph(graph_spec)
        (i,) = _types(g, type_label)
        if height < 1:
            raise GraphInputError("height must be at least 1")
        n = particles
        if n is None:
            n = root_order_recursion(g, height).r(i, height)
            if n > cap:
                raise CapExceededError(f"one period is {n} particles, above the cap {cap}; pass --particles")
        if n < 1:
            raise GraphInputError("--particles must be positive")
        w = wire(build_cover(g, i, height))
        config = zero_config(w)
        ups = downs = total_steps = 0
        trace_rows = []
        for p in range(1, n + 1):
            res = route_to_sink(w, config)
            config = res.config
            total_steps += res.steps
            if res.exit is Exit.UP:
                ups += 1
            else:
                downs += 1
            if trace is not None:
                trace_rows.append(f"{p},{res.exit.value},{res.steps}")
        if trace is not None:
            Path(trace).write_text("particle,exit,steps\n" + "\n".join(trace_rows) + "\n")
        report = Report(
            columns=(
                Column("particles", "int"),
                Column("ups", "int"),
                Column("downs", "int"),
                Column("steps", "bigint"),
                Column("back_to_zero", "str"),
            ),
            rows=((n, ups, downs, total_steps, str(config == zero_config(w)).lower()),),
            meta=(
                ("graph", graph_spec),
                ("command", "simulate"),
                ("type", str(type_label)),
                ("height", str(height)),
            ),
        )
        _emit(RunConfig(graph_spec, "simulate", fmt, output, None), report)

    _guarded(body)


@main.command(name="escape")
@_graph_option
@click.option("--type", "type_label", type=int, default=None, help="1-based root type; all types when omitted.")
@click.option("--height", type=int, required=True)
@click.option("--cap", type=int, default=10**6, show_default=True, help="Largest period to print or check.")
@click.option("--check/--no-check", default=False, show_default=True, help="Also simulate and compare bit for bit.")
@_output_option
def escape_cmd(graph_spec, type_label, height, cap, check, output):
    """One period of the escape sequence per type, as 0/1 lines.

    Built by the explosion formula from the zero configuration; 1 means
    the particle crossed the height boundary, 0 that it left through the
    root's ancestor entry.  With --check the period is also simulated and
    compared, exiting 4 on any difference.
    """

    def body():
        g = resolve_graph(graph_spec)
        types = _types(g, type_label)
        if height < 1:
            raise GraphInputError("height must be at least 1")
        table = root_order_recursion(g, height)
        lines = []
        mismatches = []
        for i in types:
            r = table.r(i, height)
            if r > cap:
                raise CapExceededError(f"period for type {i + 1} is {r}, above the cap {cap}")
            bits = explosion_escape(g, i, height, cap=max(cap, 10**7))
            if check:
                sim = zero_period(wire(build_cover(g, i, height)), particle_cap=r + 1)
                if sim.bits != bits:
                    mismatches.append(f"type {i + 1}: formula and simulation differ")
            lines.append("".join(str(b) for b in bits))
        text = "\n".join(lines) + "\n"
        if output:
            Path(output).write_text(text)
        else:
            click.echo(text, nl=False)
        if mismatches:
            _fail(EXIT_VERIFY, "; ".join(mismatches))

    _guarded(body)


@main.command(name="hitting")
@_graph_option
@click.option("--height", type=int, default=None)
@click.option("--heights", type=str, default=None, metavar="A..B")
@_format_option
@_output_option
@_figure_option
def hitting_cmd(graph_spec, height, heights, fmt, output, figure):
    """Probability of draining down before the height boundary.

    Exact rationals from the hitting recursion, reported next to the root
    order columns; the identity H_down = S_down / R is checked on every
    row and a violation exits with code 4.
    """

    def body():
        g = resolve_graph(graph_spec)
        lo, hi = _parse_heights(height, heights)
        ht = hitting_probabilities(g, hi)
        ro = root_order_recursion(g, hi)
        from fractions import Fraction

        rows = []
        mismatches = []
        for h in range(lo, hi + 1):
            for i in range(g.m):
                hd = ht.h_down(i, h)
                if hd != Fraction(ro.down(i, h), ro.r(i, h)):
                    mismatches.append(f"type {i + 1} h {h}: recursion {hd} != S_down/R")
                rows.append((i + 1, h, ro.down(i, h), ro.up(i, h), ro.r(i, h), hd))
        report = Report(
            columns=(
                Column("type", "int"),
                Column("h", "int"),
                Column("S_down", "bigint"),
                Column("S_up", "bigint"),
                Column("R", "bigint"),
                Column("H_down", "fraction"),
            ),
            rows=tuple(rows),
            meta=(("graph", graph_spec), ("command", "hitting")),
        )
        _emit(RunConfig(graph_spec, "hitting", fmt, output, figure), report)
        if figure:
            plot_hitting(g, ht, figure)
        if mismatches:
            _fail(EXIT_VERIFY, "; ".join(mismatches))

    _guarded(body)


@main.command(name="verify")
@click.option("--budget", type=click.Choice(sorted(BUDGETS)), default="small", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_format_option
@_output_option
def verify_cmd(budget, seed, fmt, output):
    """Run the cross-oracle verification matrix.

    Each check compares two or more independent routes to the same
    quantity: recursion against determinant against brute force, formula
    words against simulated words, closed forms against recursions, and
    the rotor-group axioms on every small tree.  Any failure exits 4.
    """

    def body():
        results = run_verification(budget=budget, seed=seed)
        passed = sum(1 for r in results if r.passed)
        meta = (
            ("command", "verify"),
            ("budget", budget),
            ("seed", str(seed)),
            ("passed", f"{passed}/{len(results)}"),
        )
        if fmt == "table":
            lines = [f"{key}: {val}" for key, val in meta]
            lines.append("")
            for r in results:
                lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}  {r.detail}")
            text = "\n".join(lines) + "\n"
        else:
            report = Report(
                columns=(Column("check", "str"), Column("passed", "str"), Column("detail", "str")),
                rows=tuple((r.name, str(r.passed).lower(), r.detail) for r in results),
                meta=meta,
            )
            text = render(report, fmt)
        if output:
            Path(output).write_text(text)
        else:
            click.echo(text, nl=False)
        if passed != len(results):
            sys.exit(EXIT_VERIFY)

    _guarded(body)


if __name__ == "__main__":
    main()
