"""Order of the root element, escape periods and hitting probabilities.

Routing one particle from the root of a wired cover acts invertibly on
recurrent rotor configurations.  The order R(i, h) of that action is the
number of particles after which the zero configuration first recurs, and
the exit bits over one period split into S_down(i, h) particles leaving
through the root's ancestor entry and S_up(i, h) through the height-h
boundary.  These satisfy

    S_down(i, h) = lcm of R(chi_i(k), h-1) over the root's children
    S_up(i, h)   = S_down(i, h) * sum_j d[i][j] * S_up(j, h-1) / R(j, h-1)
    R(i, h)      = S_down(i, h) + S_up(i, h)

with S_down(i, 1) = 1 and S_up(i, 1) = d_i.  The divisions are exact
because every child period divides the lcm; the code asserts that.

The exit bits themselves obey the explosion construction.  Exploding a
nonnegative integer sequence (a_1, a_2, ...) yields the bit sequence
1^a_1 0 1^a_2 0 ...; the period of a height-h tree is the explosion of
the elementwise sum of its principal branches' periods, each repeated
lcm / R(child) times so all repeats share one length.  A height-0 tree
contributes the all-ones sequence.  For a general rotor configuration the
same recursion holds on sequence prefixes, except that branches the root
rotor has already passed contribute their sequence shifted by one leading
zero.

The probability that a simple random walk started at the root hits the
root's ancestor before the boundary equals S_down(i, h) / R(i, h).  It
also satisfies a self-contained rational recursion

    H(i, h) = 1 / (d_i + 1 - sum_j d[i][j] * H(j, h-1))

with H(i, 1) = 1 / (d_i + 1), which the package keeps as an independent
route to the same number.

For the alternating two-type tree (type 1 begets alpha type-2 children,
type 2 begets beta type-1 children) the root order has a closed form in
the geometric sums of alpha * beta, implemented at the bottom of this
module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .basegraph import BaseGraph
from .cover import CoverTree, build_cover, wire
from .errors import CapExceededError
from .rotor import PeriodResult, zero_period

DEFAULT_WORD_CAP = 10**7


def explosion(a) -> tuple[int, ...]:
    """Explode integers into bits: each entry e becomes e ones and a zero."""
    bits: list[int] = []
    for e in a:
        if e < 0:
            raise ValueError(f"explosion needs nonnegative entries, got {e}")
        bits.extend([1] * e)
        bits.append(0)
    return tuple(bits)


def shift(a) -> tuple[int, ...]:
    """Prepend one zero; the escape sequence of a branch already passed."""
    return (0,) + tuple(a)


@dataclass(frozen=True)
class RootOrderTable:
    """Exact root-element orders for heights 1..height, indexed [h-1][type]."""

    graph: BaseGraph
    height: int
    s_down: tuple[tuple[int, ...], ...]
    s_up: tuple[tuple[int, ...], ...]

    def down(self, i: int, h: int) -> int:
        return self.s_down[h - 1][i]

    def up(self, i: int, h: int) -> int:
        return self.s_up[h - 1][i]

    def r(self, i: int, h: int) -> int:
        return self.s_down[h - 1][i] + self.s_up[h - 1][i]

    def down_gcd(self, i: int, h: int) -> int:
        """gcd of S_down and R, reported without any coprimality claim."""
        return math.gcd(self.down(i, h), self.r(i, h))


def root_order_recursion(g: BaseGraph, height: int) -> RootOrderTable:
    """Evaluate the lcm recursion for root orders up to the given height."""
    if height < 1:
        raise ValueError(f"height must be at least 1, got {height}")
    m = g.m
    d = g.adjacency
    down_rows = [tuple(1 for _ in range(m))]
    up_rows = [tuple(g.degrees)]
    for _ in range(2, height + 1):
        prev_down = down_rows[-1]
        prev_up = up_rows[-1]
        prev_r = [prev_down[j] + prev_up[j] for j in range(m)]
        down_h = []
        up_h = []
        for i in range(m):
            sd = math.lcm(*(prev_r[j] for j in range(m) if d[i][j]))
            acc = 0
            for j in range(m):
                if d[i][j]:
                    quotient, rem = divmod(sd, prev_r[j])
                    assert rem == 0, "child period does not divide the lcm"
                    acc += d[i][j] * prev_up[j] * quotient
            down_h.append(sd)
            up_h.append(acc)
        down_rows.append(tuple(down_h))
        up_rows.append(tuple(up_h))
    return RootOrderTable(graph=g, height=height, s_down=tuple(down_rows), s_up=tuple(up_rows))


def root_order(g: BaseGraph, root_type: int, height: int) -> int:
    """Order of the root element in the rotor-router group."""
    return root_order_recursion(g, height).r(root_type, height)


def root_order_simulated(
    g: BaseGraph,
    root_type: int,
    height: int,
    particle_cap: int = 10**7,
    collect_bits: bool = False,
) -> PeriodResult:
    """Measure the root order by actually routing particles.

    Builds the wired cover, starts from the zero configuration and routes
    from the root until the configuration recurs.  The period and its
    down/up split are the simulated counterparts of the lcm recursion.
    """
    w = wire(build_cover(g, root_type, height))
    return zero_period(w, particle_cap=particle_cap, collect_bits=collect_bits)


def explosion_escape(
    g: BaseGraph, root_type: int, height: int, cap: int = DEFAULT_WORD_CAP
) -> tuple[int, ...]:
    """One period of the zero-configuration escape sequence, by formula.

    Builds period words bottom up: the height-0 word is (1) with period 1,
    and each level repeats the child words up to the lcm of their periods,
    sums them elementwise and explodes the result.  No tree is ever
    materialized and no particle routed, so this is the independent
    counterpart of simulating R(i, h) particles.
    """
    if height < 1:
        raise ValueError(f"height must be at least 1, got {height}")
    table = root_order_recursion(g, height)
    # Intermediate levels build words for every type, so cap on the largest
    # period the construction will touch, not only the requested cell.
    widest = max(
        max(table.r(j, h) for j in range(g.m)) for h in range(1, height)
    ) if height > 1 else 1
    widest = max(widest, table.r(root_type, height))
    if widest > cap:
        raise CapExceededError(f"period words reach length {widest}, cap is {cap}")
    m = g.m
    words: list[list[int]] = [[1] for _ in range(m)]
    periods = [1] * m
    for h in range(1, height + 1):
        wanted = range(m) if h < height else (root_type,)
        next_words: list[list[int] | None] = [None] * m
        next_periods = [0] * m
        for i in wanted:
            child_periods = [periods[c] for c in g.chi[i]]
            span = math.lcm(*child_periods)
            total = [0] * span
            for c in g.chi[i]:
                word = words[c]
                reps = span // periods[c]
                pos = 0
                for _ in range(reps):
                    for b in word:
                        total[pos] += b
                        pos += 1
            exploded: list[int] = []
            for e in total:
                exploded.extend([1] * e)
                exploded.append(0)
            next_words[i] = exploded
            next_periods[i] = len(exploded)
            assert next_periods[i] == span + sum(total), "explosion length drifted"
        words = next_words  # type: ignore[assignment]
        periods = next_periods
    bits = tuple(words[root_type])
    assert len(bits) == table.r(root_type, height)
    assert sum(bits) == table.up(root_type, height)
    return bits


def escape_prefix_formula(t: CoverTree, config, n: int) -> tuple[int, ...]:
    """First n escape bits for an arbitrary rotor configuration, by formula.

    Works directly on the cover: the prefix of a vertex's sequence is the
    explosion of the summed child prefixes, where children the rotor has
    already passed (child k with k <= rotor index) enter shifted by one
    leading zero.  Depth-height vertices contribute all-ones.  Matches
    routing n particles on the wired tree bit for bit, for any
    configuration, recurrent or not.
    """
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    boundary = t.height

    def prefix(v: int, want: int) -> list[int]:
        if t.depths[v] == boundary:
            return [1] * want
        rotor = config[v]
        total = [0] * want
        for k, c in enumerate(t.children[v], start=1):
            child = prefix(c, want if k > rotor else want - 1)
            if k <= rotor:
                child = [0] + child
            for pos in range(want):
                total[pos] += child[pos]
        bits: list[int] = []
        for e in total:
            bits.extend([1] * e)
            bits.append(0)
            if len(bits) >= want:
                break
        return bits[:want]

    return tuple(prefix(0, n))


@dataclass(frozen=True)
class HittingTable:
    """Probabilities of draining down before the boundary, indexed [h-1][type]."""

    graph: BaseGraph
    height: int
    down_rows: tuple[tuple[Fraction, ...], ...]

    def h_down(self, i: int, h: int) -> Fraction:
        return self.down_rows[h - 1][i]

    def h_up(self, i: int, h: int) -> Fraction:
        return 1 - self.down_rows[h - 1][i]


def hitting_probabilities(g: BaseGraph, height: int) -> HittingTable:
    """Exact hitting probabilities by the rational recursion."""
    if height < 1:
        raise ValueError(f"height must be at least 1, got {height}")
    m = g.m
    d = g.adjacency
    degs = g.degrees
    rows = [tuple(Fraction(1, degs[i] + 1) for i in range(m))]
    for _ in range(2, height + 1):
        prev = rows[-1]
        rows.append(
            tuple(
                1 / (degs[i] + 1 - sum((d[i][j] * prev[j] for j in range(m)), start=Fraction(0)))
                for i in range(m)
            )
        )
    return HittingTable(graph=g, height=height, down_rows=tuple(rows))


def biregular_closed_form(alpha: int, beta: int, height: int) -> tuple[int, int]:
    """Root orders (R_1, R_2) of the alternating tree in closed form.

    With q = alpha * beta and geom(k) = 1 + q + ... + q^(k-1):

        R_1(2k)     = geom(k) * (alpha + 1) * beta + 1
        R_1(2k + 1) = geom(k + 1) * (alpha + 1)

    and R_2 with alpha and beta exchanged.  The geometric sum is expanded
    term by term so q = 1 needs no special casing, and height 0 lands on
    R = 1 for both types.
    """
    if alpha < 1 or beta < 1:
        raise ValueError("alternating tree parameters must be positive")
    if height < 0:
        raise ValueError("height must be nonnegative")
    q = alpha * beta

    def geom(k: int) -> int:
        return sum(q**t for t in range(k))

    k, odd = divmod(height, 2)
    if odd:
        r1 = geom(k + 1) * (alpha + 1)
        r2 = geom(k + 1) * (beta + 1)
    else:
        r1 = geom(k) * (alpha + 1) * beta + 1
        r2 = geom(k) * (beta + 1) * alpha + 1
    return r1, r2
