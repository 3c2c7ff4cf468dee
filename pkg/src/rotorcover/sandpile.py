"""Chip-firing dynamics and spanning-tree oracles on wired trees.

A chip configuration places a nonnegative number of chips on each non-sink
vertex.  A vertex x holding at least deg_x chips may topple: it sends one
chip along every entry of its neighbor list, so internal neighbors gain
chips and the sink swallows the rest.  Repeated toppling terminates
because the sink drains every connected piece, and both the stable result
and the per-vertex topple counts are independent of the order in which
unstable vertices fire.

The reduced Laplacian of the wired tree (delete the sink row and column)
has determinant equal to the number of oriented spanning trees rooted at
the sink, where each non-sink vertex picks exactly one of its deg_x
entries and no directed cycle forms.  That count is also the order of the
rotor-router group, which makes the determinant and the explicit
enumeration here the two independent oracles the rest of the package is
checked against.
"""

from __future__ import annotations

import itertools
from collections import deque
from random import Random

from .cover import SINK, WiredTree
from .errors import CapExceededError

ChipConfig = tuple[int, ...]


def sink_multiplicities(w: WiredTree) -> tuple[int, ...]:
    """Number of sink entries in each vertex's neighbor list."""
    return tuple(sum(1 for e in row if e == SINK) for row in w.entries)


def topple(w: WiredTree, chips, x: int) -> ChipConfig:
    """Fire x once.  Requires chips[x] >= deg_x."""
    row = w.entries[x]
    if chips[x] < len(row):
        raise ValueError(f"vertex {x} holds {chips[x]} chips, needs {len(row)} to topple")
    out = list(chips)
    out[x] -= len(row)
    for e in row:
        if e != SINK:
            out[e] += 1
    return tuple(out)


def stabilize(
    w: WiredTree, chips, rng: Random | None = None, topple_cap: int = 10**9
) -> tuple[ChipConfig, tuple[int, ...]]:
    """Topple until no vertex can fire; returns (stable chips, topple counts).

    The default order is a FIFO queue.  Passing an rng picks a random
    unstable vertex at every step instead, which the tests use to confirm
    order independence.  The topple cap is a tripwire for engine bugs;
    stabilization on a wired tree always terminates.
    """
    state = list(chips)
    if len(state) != w.n:
        raise ValueError(f"chip vector has length {len(state)}, tree has {w.n} vertices")
    if any(c < 0 for c in state):
        raise ValueError("chip counts must be nonnegative")
    entries = w.entries
    degs = w.degrees
    counts = [0] * w.n
    fired = 0

    if rng is None:
        queue = deque(x for x in range(w.n) if state[x] >= degs[x])
        queued = [x in queue for x in range(w.n)]
        while queue:
            x = queue.popleft()
            queued[x] = False
            while state[x] >= degs[x]:
                state[x] -= degs[x]
                counts[x] += 1
                fired += 1
                for e in entries[x]:
                    if e != SINK:
                        state[e] += 1
                        if state[e] >= degs[e] and not queued[e]:
                            queue.append(e)
                            queued[e] = True
            if fired > topple_cap:
                raise CapExceededError(f"stabilization exceeded {topple_cap} topplings")
    else:
        while True:
            unstable = [x for x in range(w.n) if state[x] >= degs[x]]
            if not unstable:
                break
            x = rng.choice(unstable)
            state[x] -= degs[x]
            counts[x] += 1
            fired += 1
            for e in entries[x]:
                if e != SINK:
                    state[e] += 1
            if fired > topple_cap:
                raise CapExceededError(f"stabilization exceeded {topple_cap} topplings")

    return tuple(state), tuple(counts)


def reduced_laplacian(w: WiredTree) -> list[list[int]]:
    """Laplacian over non-sink vertices: degree on the diagonal, minus
    the entry multiplicity off it.  Row sums equal the sink multiplicity."""
    n = w.n
    lap = [[0] * n for _ in range(n)]
    for x, row in enumerate(w.entries):
        lap[x][x] = len(row)
        for e in row:
            if e != SINK:
                lap[x][e] -= 1
    return lap


def det_bigint(matrix) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination.

    Bareiss' algorithm: every division below is exact over the integers,
    so no rounding ever occurs and the result is a true big integer.
    """
    a = [[int(e) for e in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def count_spanning_trees_bruteforce(w: WiredTree, cap: int = 10**7) -> int:
    """Count oriented spanning trees rooted at the sink by enumeration.

    Each non-sink vertex chooses one entry of its neighbor list; the
    choice is a spanning tree when no directed cycle forms.  Cycles are
    detected with union-find, deliberately not sharing code with the rotor
    engine's recurrence test so the two stay independent oracles.
    """
    degs = w.degrees
    space = 1
    for d in degs:
        space *= d
    if space > cap:
        raise CapExceededError(f"choice space holds {space} configurations, cap is {cap}")
    entries = w.entries
    n = w.n
    count = 0
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for choice in itertools.product(*(range(d) for d in degs)):
        for v in range(n):
            parent[v] = v
        ok = True
        for x in range(n):
            t = entries[x][choice[x]]
            if t == SINK:
                continue
            rx, rt = find(x), find(t)
            if rx == rt:
                ok = False
                break
            parent[rx] = rt
        if ok:
            count += 1
    return count
