"""Cross-oracle verification matrix.

Every quantity the package computes has at least two independent routes:

  group order      forest recursion / Laplacian determinant / enumeration
  root order       lcm recursion / particle simulation
  escape period    explosion formula / particle simulation, bit for bit
  hitting chance   rational recursion / exact S_down over R
  growth rate      log-domain slope / spectral radius
  closed forms     alternating-tree formula / the general recursion

run_verification assembles one named check per cell, runs them over the
two bundled example graphs plus seeded random graphs, and reports a flat
list of pass/fail results.  The "small" budget holds the standing matrix;
"full" widens the height ranges and random counts.  Identical seed and
budget always produce identical results in the same order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .basegraph import BaseGraph, biregular_graph, fibonacci_graph, graph_from_adjacency, spectral_radius
from .cover import build_cover, level_counts, wire
from .errors import GraphInputError
from .forests import forest_recursion, fixed_point, gamma_strictly_decreasing, log_forest_table, slope_report
from .rootorder import (
    biregular_closed_form,
    escape_prefix_formula,
    explosion_escape,
    hitting_probabilities,
    root_order_recursion,
)
from .rotor import apply_generator, enumerate_recurrent, escape_sequence, orbit_of_zero, zero_config, zero_period
from .sandpile import count_spanning_trees_bruteforce, det_bigint, reduced_laplacian, sink_multiplicities, stabilize


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class Budget:
    order_height: int
    period_height: int
    word_height: int
    random_graphs: int
    random_prefixes: int
    gamma_height: int
    hitting_height: int
    det_vertex_cap: int = 400
    bruteforce_cap: int = 10**7
    sim_cap: int = 10**6
    axiom_vertex_cap: int = 12
    abelian_exhaustive_cap: int = 200
    abelian_samples: int = 20
    chip_configs: int = 20
    topple_orders: int = 5


BUDGETS = {
    "small": Budget(
        order_height=6,
        period_height=5,
        word_height=4,
        random_graphs=20,
        random_prefixes=20,
        gamma_height=30,
        hitting_height=8,
    ),
    "full": Budget(
        order_height=8,
        period_height=6,
        word_height=5,
        random_graphs=40,
        random_prefixes=40,
        gamma_height=32,
        hitting_height=10,
    ),
}

GOLDEN_RHO = {"fibonacci": (1 + math.sqrt(5)) / 2, "biregular:2,3": math.sqrt(6)}
GOLDEN_UPSILON = {
    "fibonacci": (math.sqrt(2) - 1, math.sqrt(2) / 2),
    "biregular:2,3": (5 / 4, 5 / 3),
}


def example_graphs() -> tuple[tuple[str, BaseGraph], ...]:
    return (("fibonacci", fibonacci_graph()), ("biregular:2,3", biregular_graph(2, 3)))


def random_graph(rng: Random, max_m: int = 3, max_entry: int = 2) -> BaseGraph:
    """Draw adjacency matrices until one validates (strongly connected,
    no dead type)."""
    while True:
        m = rng.randint(1, max_m)
        adj = [[rng.randint(0, max_entry) for _ in range(m)] for _ in range(m)]
        try:
            return graph_from_adjacency(adj)
        except GraphInputError:
            continue


def _adj_label(g: BaseGraph) -> str:
    return "[" + ",".join("[" + ",".join(str(e) for e in row) + "]" for row in g.adjacency) + "]"


def _nonsink_count(g: BaseGraph, i: int, h: int) -> int:
    counts = level_counts(g, i, h)
    return sum(sum(row) for row in counts[:-1])


def check_group_orders(label: str, g: BaseGraph, b: Budget) -> list[CheckResult]:
    """Forest recursion against determinant and brute-force enumeration."""
    out = []
    table = forest_recursion(g, b.order_height)
    for h in range(1, b.order_height + 1):
        for i in range(g.m):
            rec = table.order(i, h)
            w = wire(build_cover(g, i, h))
            oracles = []
            ok = True
            if w.n <= b.det_vertex_cap:
                det = det_bigint(reduced_laplacian(w))
                ok = ok and det == rec
                oracles.append("det" if det == rec else f"det={det}")
            space = 1
            for deg in w.degrees:
                space *= deg
            if space <= b.bruteforce_cap:
                bf = count_spanning_trees_bruteforce(w, cap=b.bruteforce_cap)
                ok = ok and bf == rec
                oracles.append("brute" if bf == rec else f"brute={bf}")
            detail = f"recursion={rec} confirmed by {'+'.join(oracles) if oracles else 'none in cap'}"
            out.append(CheckResult(f"order:{label}:t{i + 1}:h{h}", ok, detail))
    return out


def check_golden_orders() -> list[CheckResult]:
    """Pinned example values for the two-type golden-ratio graph."""
    g = fibonacci_graph()
    ft = forest_recursion(g, 2)
    ro = root_order_recursion(g, 4)
    cells = [
        ("order(1,2)", ft.order(0, 2), 5),
        ("order(2,2)", ft.order(1, 2), 13),
        ("S_down(2,2)", ro.down(1, 2), 6),
        ("S_up(2,2)", ro.up(1, 2), 7),
        ("R(2,2)", ro.r(1, 2), 13),
        ("S_down(2,3)", ro.down(1, 3), 65),
        ("S_up(2,3)", ro.up(1, 3), 61),
        ("R(2,3)", ro.r(1, 3), 126),
        ("S_down(2,4)", ro.down(1, 4), 1260),
        ("S_up(2,4)", ro.up(1, 4), 1051),
        ("R(2,4)", ro.r(1, 4), 2311),
    ]
    bad = [f"{name}={got}, want {want}" for name, got, want in cells if got != want]
    return [
        CheckResult(
            "golden:fibonacci",
            not bad,
            "; ".join(bad) if bad else f"{len(cells)} pinned values match",
        )
    ]


def check_root_periods(label: str, g: BaseGraph, b: Budget) -> list[CheckResult]:
    """lcm recursion against simulated first return of the zero config."""
    out = []
    table = root_order_recursion(g, b.period_height)
    for h in range(1, b.period_height + 1):
        for i in range(g.m):
            want = (table.r(i, h), table.down(i, h), table.up(i, h))
            name = f"period:{label}:t{i + 1}:h{h}"
            if want[0] > b.sim_cap:
                out.append(CheckResult(name, True, f"skipped: R={want[0]} above sim cap"))
                continue
            w = wire(build_cover(g, i, h))
            sim = zero_period(w, particle_cap=want[0] + 1, collect_bits=False)
            got = (sim.period, sim.downs, sim.ups)
            out.append(
                CheckResult(
                    name,
                    got == want,
                    f"recursion (R,S_down,S_up)={want} simulated={got}",
                )
            )
    return out


def check_escape_words(label: str, g: BaseGraph, b: Budget) -> list[CheckResult]:
    """Explosion-formula period against the simulated bit sequence."""
    out = []
    table = root_order_recursion(g, b.word_height)
    for h in range(1, b.word_height + 1):
        for i in range(g.m):
            name = f"word:{label}:t{i + 1}:h{h}"
            r = table.r(i, h)
            if r > b.sim_cap:
                out.append(CheckResult(name, True, f"skipped: R={r} above sim cap"))
                continue
            formula = explosion_escape(g, i, h)
            sim = zero_period(wire(build_cover(g, i, h)), particle_cap=r + 1)
            ok = sim.bits == formula
            out.append(CheckResult(name, ok, f"period {r}, bits {'match' if ok else 'differ'}"))
    return out


def check_random_words(b: Budget, rng: Random) -> list[CheckResult]:
    """Explosion formula on seeded random graphs, heights 1..3."""
    out = []
    for k in range(b.random_graphs):
        g = random_graph(rng)
        table = root_order_recursion(g, 3)
        ok = True
        worst = ""
        for h in range(1, 4):
            for i in range(g.m):
                r = table.r(i, h)
                if r > b.sim_cap:
                    continue
                formula = explosion_escape(g, i, h)
                sim = zero_period(wire(build_cover(g, i, h)), particle_cap=r + 1)
                if sim.bits != formula:
                    ok = False
                    worst = f" first mismatch t{i + 1} h{h}"
        out.append(
            CheckResult(
                f"word:random{k}", ok, f"adjacency {_adj_label(g)} h<=3{worst}"
            )
        )
    return out


def check_random_prefixes(b: Budget, rng: Random) -> list[CheckResult]:
    """Prefix formula against simulation for arbitrary rotor configurations."""
    out = []
    for k in range(b.random_prefixes):
        g = random_graph(rng)
        i = rng.randrange(g.m)
        h = rng.randint(1, 4)
        t = build_cover(g, i, h)
        w = wire(t)
        config = tuple(rng.randrange(deg) for deg in w.degrees)
        n = rng.randint(1, 200)
        formula = escape_prefix_formula(t, config, n)
        sim = escape_sequence(w, config, n)
        ok = sim.bits == formula
        out.append(
            CheckResult(
                f"prefix:random{k}",
                ok,
                f"adjacency {_adj_label(g)} t{i + 1} h{h} n={n} {'match' if ok else 'differ'}",
            )
        )
    return out


def check_fixed_points() -> list[CheckResult]:
    out = []
    for label, g in example_graphs():
        want = GOLDEN_UPSILON[label]
        fp = fixed_point(g)
        err = max(abs(a - b) for a, b in zip(fp.upsilon, want))
        ok = err <= 1e-9 and fp.residual < 1e-12
        out.append(
            CheckResult(
                f"fixedpoint:{label}",
                ok,
                f"upsilon err {err:.2e}, residual {fp.residual:.2e}",
            )
        )
    return out


def check_gamma_monotone(b: Budget) -> list[CheckResult]:
    out = []
    plans = (("fibonacci", fibonacci_graph(), b.gamma_height), ("biregular:2,3", biregular_graph(2, 3), 12))
    for label, g, height in plans:
        table = forest_recursion(g, height)
        ok = gamma_strictly_decreasing(table)
        out.append(
            CheckResult(
                f"gamma:monotone:{label}", ok, f"strict decrease through h={height}"
            )
        )
    return out


def check_spectral() -> list[CheckResult]:
    out = []
    for label, g in example_graphs():
        want = GOLDEN_RHO[label]
        res = spectral_radius(g)
        err = abs(res.rho - want)
        ok = err <= 1e-9 and res.residual < 1e-12
        out.append(
            CheckResult(
                f"spectral:{label}",
                ok,
                f"rho={res.rho:.12f} err {err:.2e} residual {res.residual:.2e}",
            )
        )
    return out


def check_slopes() -> list[CheckResult]:
    out = []
    for label, g in example_graphs():
        rep = slope_report(g, 10, 25)
        errs = [abs(s - rep.target) / rep.target for s in rep.slopes + (rep.mean_slope,)]
        ok = max(errs) <= 0.05
        out.append(
            CheckResult(
                f"slope:{label}",
                ok,
                f"slopes {[f'{s:.5f}' for s in rep.slopes]} vs log rho {rep.target:.5f}, "
                f"worst rel err {max(errs):.4%}",
            )
        )
    return out


def check_backends() -> list[CheckResult]:
    """Exact and log-domain forest tables must agree to 10 digits, h <= 8."""
    out = []
    for label, g in example_graphs():
        exact = forest_recursion(g, 8)
        logs = log_forest_table(g, 8)
        worst = 0.0
        for h in range(1, 9):
            for i in range(g.m):
                worst = max(
                    worst,
                    abs(logs.log_order(i, h) - math.log(exact.order(i, h))),
                )
        ok = worst <= 5e-10
        out.append(
            CheckResult(
                f"backend:{label}", ok, f"max |log order drift| {worst:.2e} over h<=8"
            )
        )
    return out


def check_hitting(b: Budget) -> list[CheckResult]:
    out = []
    for label, g in example_graphs():
        hmax = b.hitting_height
        ht = hitting_probabilities(g, hmax)
        ro = root_order_recursion(g, hmax)
        degs = g.degrees
        d = g.adjacency
        bad = []
        for h in range(1, hmax + 1):
            for i in range(g.m):
                ratio = Fraction(ro.down(i, h), ro.r(i, h))
                if ht.h_down(i, h) != ratio:
                    bad.append(f"t{i + 1} h{h}: recursion {ht.h_down(i, h)} != ratio {ratio}")
                if h >= 2:
                    drift = ratio * (
                        degs[i]
                        + 1
                        - sum(
                            (
                                d[i][j] * Fraction(ro.down(j, h - 1), ro.r(j, h - 1))
                                for j in range(g.m)
                            ),
                            start=Fraction(0),
                        )
                    )
                    if drift != 1:
                        bad.append(f"t{i + 1} h{h}: system identity gives {drift}")
        if label == "fibonacci":
            if ht.h_down(0, 2) != Fraction(3, 5):
                bad.append(f"H_down(1,2) = {ht.h_down(0, 2)}, want 3/5")
            if ht.h_down(1, 2) != Fraction(6, 13):
                bad.append(f"H_down(2,2) = {ht.h_down(1, 2)}, want 6/13")
        out.append(
            CheckResult(
                f"hitting:{label}",
                not bad,
                "; ".join(bad) if bad else f"identities exact through h={hmax}",
            )
        )
    return out


def check_closed_forms() -> list[CheckResult]:
    """Alternating-tree closed form, sweep over parameters up to 4."""
    out = []
    for alpha in range(1, 5):
        for beta in range(1, 5):
            g = biregular_graph(alpha, beta)
            table = root_order_recursion(g, 12)
            bad = []
            if biregular_closed_form(alpha, beta, 0) != (1, 1):
                bad.append("h0 != (1,1)")
            if biregular_closed_form(alpha, beta, 1) != (1 + alpha, 1 + beta):
                bad.append("h1 != (1+alpha, 1+beta)")
            closed = {h: biregular_closed_form(alpha, beta, h) for h in range(13)}
            for h in range(1, 13):
                want = (table.r(0, h), table.r(1, h))
                if closed[h] != want:
                    bad.append(f"h{h}: closed {closed[h]} != recursion {want}")
            for h in range(2, 13):
                r1 = closed[h - 1][1] * (alpha + 1) - alpha * closed[h - 2][0]
                r2 = closed[h - 1][0] * (beta + 1) - beta * closed[h - 2][1]
                if (r1, r2) != closed[h]:
                    bad.append(f"h{h}: two-term recurrence gives ({r1},{r2})")
            out.append(
                CheckResult(
                    f"closedform:biregular:{alpha},{beta}",
                    not bad,
                    "; ".join(bad) if bad else "closed form, recursion and recurrence agree, h<=12",
                )
            )
    return out


def small_trees(b: Budget) -> list[tuple[str, BaseGraph, int, int]]:
    """Every (graph, type, height) whose wired tree has at most the cap
    of non-sink vertices."""
    out = []
    for label, g in example_graphs():
        for i in range(g.m):
            h = 1
            while _nonsink_count(g, i, h) <= b.axiom_vertex_cap:
                out.append((label, g, i, h))
                h += 1
    return out


def check_rotor_axioms(b: Budget, rng: Random) -> list[CheckResult]:
    """Group structure of particle routing on all small wired trees.

    Per tree: the recurrent count equals the determinant; routing from any
    vertex permutes the recurrent set (closure and injectivity); routings
    from different vertices commute; and the zero configuration's orbit is
    the whole recurrent set (transitivity).
    """
    out = []
    for label, g, i, h in small_trees(b):
        tag = f"{label}:t{i + 1}:h{h}"
        w = wire(build_cover(g, i, h))
        rec_list = enumerate_recurrent(w)
        rec_set = frozenset(rec_list)
        det = det_bigint(reduced_laplacian(w))
        out.append(
            CheckResult(
                f"axiom:count:{tag}",
                len(rec_list) == det,
                f"|Rec|={len(rec_list)} det={det}",
            )
        )

        bijective = True
        for x in range(w.n):
            image = {apply_generator(w, c, x) for c in rec_list}
            if len(image) != len(rec_list) or not image <= rec_set:
                bijective = False
                break
        out.append(
            CheckResult(
                f"axiom:bijection:{tag}",
                bijective,
                f"{w.n} generators permute {len(rec_list)} configurations",
            )
        )

        if len(rec_list) <= b.abelian_exhaustive_cap:
            configs = rec_list
            scope = f"all {len(configs)} recurrent configs"
        else:
            configs = [zero_config(w)] + rng.sample(rec_list, b.abelian_samples)
            scope = f"{len(configs)} sampled configs"
        commutes = True
        for c in configs:
            for x in range(w.n):
                cx = apply_generator(w, c, x)
                for y in range(x + 1, w.n):
                    if apply_generator(w, cx, y) != apply_generator(w, apply_generator(w, c, y), x):
                        commutes = False
                        break
                if not commutes:
                    break
            if not commutes:
                break
        out.append(CheckResult(f"axiom:abelian:{tag}", commutes, f"{scope}, all vertex pairs"))

        orbit = orbit_of_zero(w)
        out.append(
            CheckResult(
                f"axiom:transitive:{tag}",
                orbit == rec_set,
                f"orbit of zero config has {len(orbit)} of {len(rec_set)} recurrent configs",
            )
        )
    return out


def check_toppling(b: Budget, rng: Random) -> list[CheckResult]:
    """Abelian stabilization: order independence plus the burning identity."""
    out = []
    for label, g, i, h in small_trees(b):
        tag = f"toppling:{label}:t{i + 1}:h{h}"
        w = wire(build_cover(g, i, h))
        degs = w.degrees
        bad = []

        maximal = tuple(deg - 1 for deg in degs)
        burn = tuple(m + s for m, s in zip(maximal, sink_multiplicities(w)))
        stable, odometer = stabilize(w, burn)
        if stable != maximal or any(c != 1 for c in odometer):
            bad.append("burning identity failed")

        for _ in range(b.chip_configs):
            chips = tuple(rng.randrange(0, 2 * deg + 1) for deg in degs)
            base = stabilize(w, chips)
            for _ in range(b.topple_orders):
                shuffled = stabilize(w, chips, rng=Random(rng.randrange(2**32)))
                if shuffled != base:
                    bad.append(f"order dependence on chips {chips}")
                    break
        out.append(
            CheckResult(
                tag,
                not bad,
                "; ".join(bad)
                if bad
                else f"burning ok, {b.chip_configs} configs x {b.topple_orders} orders stable",
            )
        )
    return out


def run_verification(budget: str = "small", seed: int = 0) -> list[CheckResult]:
    """Run the whole matrix; deterministic for a given budget and seed."""
    if budget not in BUDGETS:
        raise ValueError(f"unknown budget {budget!r}, pick one of {sorted(BUDGETS)}")
    b = BUDGETS[budget]
    rng = Random(seed)
    results: list[CheckResult] = []
    for label, g in example_graphs():
        results.extend(check_group_orders(label, g, b))
    results.extend(check_golden_orders())
    for label, g in example_graphs():
        results.extend(check_root_periods(label, g, b))
    for label, g in example_graphs():
        results.extend(check_escape_words(label, g, b))
    results.extend(check_random_words(b, rng))
    results.extend(check_random_prefixes(b, rng))
    results.extend(check_fixed_points())
    results.extend(check_gamma_monotone(b))
    results.extend(check_spectral())
    results.extend(check_slopes())
    results.extend(check_backends())
    results.extend(check_hitting(b))
    results.extend(check_closed_forms())
    results.extend(check_rotor_axioms(b, rng))
    results.extend(check_toppling(b, rng))
    return results
