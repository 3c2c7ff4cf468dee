"""Rotor-router walks on wired trees.

Every non-sink vertex x carries a rotor: an index into its ordered
neighbor list.  A particle at x first advances the rotor one position
(cyclically) and then moves along the entry the rotor now points to.
Routing a particle from x means stepping until the sink absorbs it.

A rotor configuration is recurrent when the rotor edges x -> c(x)[rotor
x] contain no directed cycle, in other words when they form an oriented
spanning tree rooted at the sink.  The all-zeros configuration, with every
rotor on its ancestor entry, is recurrent (every rotor edge points toward
the root and then the sink) and serves as the canonical base point for
periods and escape sequences throughout the package.

A particle reaching the sink exits DOWN when its final step left the root
through the ancestor entry, and UP when it crossed the contracted height-h
boundary.  The escape sequence records one bit per routed particle: 1 for
UP, 0 for DOWN.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .cover import SINK, WiredTree
from .errors import CapExceededError

DEFAULT_STEP_CAP = 10**9


class Exit(Enum):
    DOWN = "down"
    UP = "up"


@dataclass(frozen=True)
class RoutingResult:
    config: tuple[int, ...]
    exit: Exit
    steps: int


@dataclass(frozen=True)
class EscapeResult:
    """Bits of the escape sequence plus the configuration they lead to."""

    bits: tuple[int, ...]
    config: tuple[int, ...]
    steps: int

    @property
    def ups(self) -> int:
        return sum(self.bits)

    @property
    def downs(self) -> int:
        return len(self.bits) - self.ups


@dataclass(frozen=True)
class PeriodResult:
    """First return of the zero configuration to itself under root routing."""

    period: int
    downs: int
    ups: int
    bits: tuple[int, ...] | None


def zero_config(w: WiredTree) -> tuple[int, ...]:
    return (0,) * w.n


def step(
    w: WiredTree, config, pos: int
) -> tuple[tuple[int, ...], int]:
    """One rotor step: advance the rotor at pos, then move the particle."""
    rotors = list(config)
    e = rotors[pos] + 1
    if e == len(w.entries[pos]):
        e = 0
    rotors[pos] = e
    return tuple(rotors), w.entries[pos][e]


def _route(entries, rotors, pos: int, step_cap: int) -> tuple[bool, int]:
    """Route one particle to the sink on a mutable rotor list.

    Returns (went_down, steps).  The step cap is a tripwire: on a wired
    tree every particle provably reaches the sink, so hitting the cap
    means the tree or the engine is broken.
    """
    steps = 0
    while True:
        row = entries[pos]
        e = rotors[pos] + 1
        if e == len(row):
            e = 0
        rotors[pos] = e
        nxt = row[e]
        steps += 1
        if nxt < 0:
            return (pos == 0 and e == 0), steps
        pos = nxt
        if steps >= step_cap:
            raise CapExceededError(f"particle exceeded {step_cap} steps without reaching the sink")


def route_to_sink(
    w: WiredTree, config, start: int = 0, step_cap: int = DEFAULT_STEP_CAP
) -> RoutingResult:
    """Route a single particle from start until absorption."""
    rotors = list(config)
    down, steps = _route(w.entries, rotors, start, step_cap)
    return RoutingResult(
        config=tuple(rotors), exit=Exit.DOWN if down else Exit.UP, steps=steps
    )


def escape_sequence(
    w: WiredTree, config, n: int, step_cap: int = DEFAULT_STEP_CAP
) -> EscapeResult:
    """Route n particles from the root, recording one exit bit per particle."""
    rotors = list(config)
    entries = w.entries
    bits = []
    total = 0
    for _ in range(n):
        down, steps = _route(entries, rotors, 0, step_cap)
        bits.append(0 if down else 1)
        total += steps
    return EscapeResult(bits=tuple(bits), config=tuple(rotors), steps=total)


def zero_period(
    w: WiredTree,
    particle_cap: int = 10**7,
    step_cap: int = DEFAULT_STEP_CAP,
    collect_bits: bool = True,
) -> PeriodResult:
    """Route particles from the root, zero configuration, until it recurs.

    The zero configuration is recurrent, so root routing must bring it
    back; the particle count of the first return is the root element's
    order in the rotor-router group.  Exit bits are collected unless the
    caller only needs the counts.
    """
    entries = w.entries
    rotors = [0] * w.n
    zeros = [0] * w.n
    bits = [] if collect_bits else None
    downs = 0
    particles = 0
    while True:
        down, _ = _route(entries, rotors, 0, step_cap)
        particles += 1
        if down:
            downs += 1
        if bits is not None:
            bits.append(0 if down else 1)
        if rotors == zeros:
            return PeriodResult(
                period=particles,
                downs=downs,
                ups=particles - downs,
                bits=tuple(bits) if bits is not None else None,
            )
        if particles >= particle_cap:
            raise CapExceededError(
                f"zero configuration did not recur within {particle_cap} particles"
            )


def apply_generator(
    w: WiredTree, config, x: int, step_cap: int = DEFAULT_STEP_CAP
) -> tuple[int, ...]:
    """Action of routing one particle from x; configurations only."""
    rotors = list(config)
    _route(w.entries, rotors, x, step_cap)
    return tuple(rotors)


def is_recurrent(w: WiredTree, config) -> bool:
    """True when the rotor edges are free of directed cycles.

    Each vertex has exactly one rotor edge, so following rotor targets
    from every start either reaches the sink or closes a cycle.  Vertices
    are stamped with their start; meeting the current stamp means a cycle,
    meeting an older stamp means a path already known to drain.
    """
    entries = w.entries
    n = w.n
    target = [entries[x][config[x]] for x in range(n)]
    stamp = [-1] * n
    for s in range(n):
        v = s
        while v >= 0 and stamp[v] == -1:
            stamp[v] = s
            v = target[v]
        if v >= 0 and stamp[v] == s:
            # walked back into the current trail: directed cycle
            return False
    return True


def enumerate_recurrent(w: WiredTree, cap: int = 10**7) -> list[tuple[int, ...]]:
    """All recurrent configurations, by exhaustive search over rotor tuples.

    The search space has prod(deg_x) elements and is capped; callers that
    need counts on larger trees should use the determinant instead.
    """
    degs = w.degrees
    space = 1
    for d in degs:
        space *= d
    if space > cap:
        raise CapExceededError(f"rotor space holds {space} configurations, cap is {cap}")
    found = []
    for config in itertools.product(*(range(d) for d in degs)):
        if is_recurrent(w, config):
            found.append(config)
    return found


def orbit_of_zero(w: WiredTree, cap: int = 10**7) -> set[tuple[int, ...]]:
    """Closure of the zero configuration under routing from every vertex."""
    start = zero_config(w)
    seen = {start}
    queue = [start]
    while queue:
        config = queue.pop()
        for x in range(w.n):
            nxt = apply_generator(w, config, x)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
                if len(seen) > cap:
                    raise CapExceededError(f"orbit exceeded cap {cap}")
    return seen
