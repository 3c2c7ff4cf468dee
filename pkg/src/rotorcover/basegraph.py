"""Finite directed base graphs for periodic tree constructions.

A base graph on m vertex types is given by a nonnegative integer adjacency
matrix d, where d[i][j] counts the edges from type i to type j.  Every type
must have out-degree at least one and the graph must be strongly connected,
so that the directed cover built over any root type branches forever.

Each type i also carries a generation function chi_i: an ordered tuple of
child types of length d_i = sum_j d[i][j] containing j exactly d[i][j]
times.  The generation function fixes the left-to-right order of children
in the cover and therefore the rotor order used downstream.  When a graph
document does not specify chi, the canonical synthesis lists child types in
non-decreasing order.

Types are 0-based in memory.  Graph documents and command-line output use
1-based labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConvergenceError, GraphInputError


@dataclass(frozen=True)
class BaseGraph:
    """Validated base graph: adjacency counts plus generation functions."""

    adjacency: tuple[tuple[int, ...], ...]
    chi: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.adjacency)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.adjacency)

    def describe(self) -> str:
        rows = ", ".join("[" + " ".join(str(e) for e in row) + "]" for row in self.adjacency)
        return f"BaseGraph(m={self.m}, adjacency={rows})"


@dataclass(frozen=True)
class SpectralResult:
    """Perron root estimate with the iteration count and final residual."""

    rho: float
    iterations: int
    residual: float


def canonical_chi(adjacency: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Generation functions listing child types in non-decreasing order."""
    m = len(adjacency)
    return tuple(
        tuple(j for j in range(m) for _ in range(adjacency[i][j])) for i in range(m)
    )


def is_strongly_connected(adjacency: tuple[tuple[int, ...], ...]) -> bool:
    """True when every type reaches every other along directed edges.

    Runs one forward and one reverse traversal from type 0.  Both must
    visit every vertex.
    """
    m = len(adjacency)

    def reaches_all(neighbors: list[list[int]]) -> bool:
        seen = [False] * m
        seen[0] = True
        stack = [0]
        while stack:
            v = stack.pop()
            for w in neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        return all(seen)

    forward = [[j for j in range(m) if adjacency[i][j] > 0] for i in range(m)]
    reverse = [[j for j in range(m) if adjacency[j][i] > 0] for i in range(m)]
    return reaches_all(forward) and reaches_all(reverse)


def graph_from_adjacency(
    adjacency, chi=None
) -> BaseGraph:
    """Build and validate a BaseGraph from raw nested sequences (0-based chi)."""
    try:
        adj = tuple(tuple(int(e) for e in row) for row in adjacency)
    except (TypeError, ValueError) as exc:
        raise GraphInputError(f"adjacency entries must be integers: {exc}") from None
    m = len(adj)
    if m == 0:
        raise GraphInputError("adjacency matrix is empty")
    for row in adj:
        if len(row) != m:
            raise GraphInputError(f"adjacency matrix is not square: {m} rows, row of length {len(row)}")
    for i, row in enumerate(adj):
        for j, e in enumerate(row):
            if e < 0:
                raise GraphInputError(f"adjacency[{i+1}][{j+1}] is negative")
    degrees = [sum(row) for row in adj]
    for i, d in enumerate(degrees):
        if d == 0:
            raise GraphInputError(f"type {i+1} has out-degree 0; every type must branch")
    if not is_strongly_connected(adj):
        raise GraphInputError("base graph is not strongly connected")

    if chi is None:
        chi_t = canonical_chi(adj)
    else:
        chi_t = tuple(tuple(int(c) for c in row) for row in chi)
        if len(chi_t) != m:
            raise GraphInputError(f"chi must list {m} generation functions, got {len(chi_t)}")
        for i, seq in enumerate(chi_t):
            if len(seq) != degrees[i]:
                raise GraphInputError(
                    f"chi for type {i+1} has length {len(seq)}, expected out-degree {degrees[i]}"
                )
            for j in range(m):
                if seq.count(j) != adj[i][j]:
                    raise GraphInputError(
                        f"chi for type {i+1} uses type {j+1} {seq.count(j)} times, "
                        f"adjacency demands {adj[i][j]}"
                    )
            if any(c < 0 or c >= m for c in seq):
                raise GraphInputError(f"chi for type {i+1} names a type outside 1..{m}")
    return BaseGraph(adjacency=adj, chi=chi_t)


def parse_graph(text: str) -> BaseGraph:
    """Parse a JSON graph document.

    Expected fields: "m" (int), "adjacency" (m x m nonnegative ints) and
    optionally "chi" mapping 1-based type labels to lists of 1-based child
    labels.  Missing chi falls back to the canonical synthesis.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"graph document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphInputError("graph document must be a JSON object")
    if "m" not in doc or "adjacency" not in doc:
        raise GraphInputError('graph document needs "m" and "adjacency" fields')
    m = doc["m"]
    adjacency = doc["adjacency"]
    if not isinstance(m, int) or not isinstance(adjacency, list):
        raise GraphInputError('"m" must be an integer and "adjacency" a list of rows')
    if len(adjacency) != m:
        raise GraphInputError(f'"m" is {m} but adjacency has {len(adjacency)} rows')
    chi = None
    if "chi" in doc and doc["chi"] is not None:
        raw = doc["chi"]
        if not isinstance(raw, dict):
            raise GraphInputError('"chi" must map type labels to lists of child labels')
        chi_rows = []
        for i in range(1, m + 1):
            key = str(i)
            if key not in raw:
                raise GraphInputError(f'"chi" is missing type label "{key}"')
            row = raw[key]
            if not isinstance(row, list):
                raise GraphInputError(f'"chi" entry for type {key} must be a list')
            chi_rows.append([int(c) - 1 for c in row])
        chi = chi_rows
    return graph_from_adjacency(adjacency, chi)


def load_graph(path) -> BaseGraph:
    """Read and parse a graph document from disk."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise GraphInputError(f"cannot read graph file {p}: {exc}") from None
    return parse_graph(text)


def fibonacci_graph() -> BaseGraph:
    """Two types: type 1 begets one type 2, type 2 begets one of each."""
    return graph_from_adjacency(((0, 1), (1, 1)))


def biregular_graph(alpha: int, beta: int) -> BaseGraph:
    """Alternating tree: type 1 begets alpha type-2 children and vice versa."""
    if alpha < 1 or beta < 1:
        raise GraphInputError("biregular parameters must be positive integers")
    return graph_from_adjacency(((0, alpha), (beta, 0)))


def resolve_graph(spec: str) -> BaseGraph:
    """Resolve a CLI graph argument: a preset name or a document path.

    Presets: "fibonacci" and "biregular:a,b" with positive integers a, b.
    Anything else is treated as a path to a JSON graph document.
    """
    if spec == "fibonacci":
        return fibonacci_graph()
    if spec.startswith("biregular:"):
        params = spec[len("biregular:"):]
        parts = params.split(",")
        if len(parts) != 2:
            raise GraphInputError("biregular preset takes two parameters, e.g. biregular:2,3")
        try:
            alpha, beta = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"biregular parameters must be integers, got {params!r}") from None
        return biregular_graph(alpha, beta)
    return load_graph(spec)


def spectral_radius(
    g: BaseGraph, tolerance: float = 1e-12, max_iter: int = 10**6
) -> SpectralResult:
    """Perron root of the adjacency matrix by power iteration.

    Iterates on d + I rather than d itself.  The shift leaves eigenvectors
    alone, moves every eigenvalue up by one, and makes the iteration matrix
    primitive even when d is periodic (the alternating two-type tree has
    eigenvalues +/- sqrt(alpha beta), which would cycle forever unshifted).
    Starts from the all-ones vector and stops once the residual
    ||d v - rho v||_inf / ||v||_inf drops below the tolerance.
    """
    d = np.array(g.adjacency, dtype=float)
    m = g.m
    shifted = d + np.eye(m)
    v = np.ones(m)
    for it in range(1, max_iter + 1):
        w = shifted @ v
        lam = np.max(np.abs(w))
        v = w / lam
        rho = lam - 1.0
        residual = float(np.max(np.abs(d @ v - rho * v)) / np.max(np.abs(v)))
        if residual < tolerance:
            return SpectralResult(rho=float(rho), iterations=it, residual=residual)
    raise ConvergenceError(
        f"power iteration did not reach residual {tolerance} in {max_iter} iterations"
    )
