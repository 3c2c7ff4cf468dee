"""Truncated directed covers and their wired trees.

The directed cover of a base graph, rooted at type i and truncated at
height h, is the finite tree T in which the root has type i and every
vertex of type j has exactly d_j children, typed and ordered by the
generation function chi_j.  Vertices are numbered breadth first, so a
vertex's children sit after it and all depth-h vertices come last.

Wiring the truncation closes the tree off for particle dynamics: the
height-h vertices and the root's extra ancestor edge are contracted into a
single absorbing sink, keeping edge multiplicities.  Every surviving vertex
x of type j then has degree d_j + 1 and an ordered neighbor list that
begins with its ancestor (the sink, for the root) followed by its children
in generation order.  Children at depth h collapse to the sink.  The
neighbor list order is the rotor order used by the walk engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basegraph import BaseGraph
from .errors import CapExceededError, GraphInputError

# Sink marker inside wired neighbor lists.
SINK = -1

DEFAULT_VERTEX_CAP = 10**7


@dataclass(frozen=True)
class CoverTree:
    """Truncated cover with breadth-first vertex arrays."""

    graph: BaseGraph
    root_type: int
    height: int
    types: tuple[int, ...]
    parents: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    depths: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.types)


@dataclass(frozen=True)
class WiredTree:
    """Wired truncation: ordered neighbor lists over the non-sink vertices.

    Non-sink vertices are the cover vertices of depth < height; breadth
    first numbering guarantees they occupy indices 0..n-1.  entries[x][0]
    is the ancestor entry and entries[x][1:] the child entries, with SINK
    standing for the absorbing vertex.
    """

    tree: CoverTree
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(e) for e in self.entries)


def level_counts(g: BaseGraph, root_type: int, height: int) -> list[list[int]]:
    """Per-depth type counts, computed before any vertex is materialized.

    Row l gives the number of depth-l vertices of each type; row 0 is the
    root indicator.  Depth l+1 counts follow by pushing counts through the
    adjacency matrix.
    """
    m = g.m
    counts = [[0] * m]
    counts[0][root_type] = 1
    for _ in range(height):
        prev = counts[-1]
        nxt = [0] * m
        for i in range(m):
            if prev[i]:
                for j in range(m):
                    nxt[j] += prev[i] * g.adjacency[i][j]
        counts.append(nxt)
    return counts


def build_cover(
    g: BaseGraph, root_type: int, height: int, cap: int = DEFAULT_VERTEX_CAP
) -> CoverTree:
    """Materialize the truncated cover rooted at root_type.

    The projected vertex count is checked against the cap before anything
    is allocated, so an over-sized request fails fast and cheaply.
    """
    if not 0 <= root_type < g.m:
        raise GraphInputError(f"root type {root_type + 1} outside 1..{g.m}")
    if height < 0:
        raise GraphInputError(f"height must be nonnegative, got {height}")
    projected = sum(sum(row) for row in level_counts(g, root_type, height))
    if projected > cap:
        raise CapExceededError(
            f"cover would hold {projected} vertices, cap is {cap}"
        )

    types = [root_type]
    parents = [-1]
    depths = [0]
    children: list[tuple[int, ...]] = []
    frontier = [0]
    for depth in range(height):
        next_frontier = []
        for v in frontier:
            kids = []
            for child_type in g.chi[types[v]]:
                idx = len(types)
                types.append(child_type)
                parents.append(v)
                depths.append(depth + 1)
                kids.append(idx)
            children.append(tuple(kids))
            next_frontier.extend(kids)
        frontier = next_frontier
    for _ in frontier:
        children.append(())

    return CoverTree(
        graph=g,
        root_type=root_type,
        height=height,
        types=tuple(types),
        parents=tuple(parents),
        children=tuple(children),
        depths=tuple(depths),
    )


def wire(t: CoverTree) -> WiredTree:
    """Contract the height-h boundary and the root's ancestor into a sink."""
    if t.height < 1:
        raise GraphInputError("wiring needs height at least 1")
    h = t.height
    entries = []
    for x in range(len(t.types)):
        if t.depths[x] == h:
            break
        ancestor = t.parents[x] if x != 0 else SINK
        row = [ancestor]
        for c in t.children[x]:
            row.append(SINK if t.depths[c] == h else c)
        entries.append(tuple(row))
    return WiredTree(tree=t, entries=tuple(entries))


def cone(t: CoverTree, x: int) -> CoverTree:
    """Standalone subtree hanging below x, renumbered breadth first.

    The cone at a type-j vertex of depth l is itself a truncated cover of
    root type j and height h - l; this extracts it from the parent tree
    rather than rebuilding it, so structural comparisons against a fresh
    build are meaningful.
    """
    if not 0 <= x < len(t.types):
        raise GraphInputError(f"vertex {x} outside tree")
    base_depth = t.depths[x]
    if base_depth == t.height:
        raise GraphInputError("cone at a boundary vertex is empty")
    order = [x]
    index_of = {x: 0}
    for v in order:
        for c in t.children[v]:
            index_of[c] = len(order)
            order.append(c)
    types = tuple(t.types[v] for v in order)
    parents = tuple(-1 if v == x else index_of[t.parents[v]] for v in order)
    children = tuple(tuple(index_of[c] for c in t.children[v]) for v in order)
    depths = tuple(t.depths[v] - base_depth for v in order)
    return CoverTree(
        graph=t.graph,
        root_type=t.types[x],
        height=t.height - base_depth,
        types=types,
        parents=parents,
        children=children,
        depths=depths,
    )


def export_tree(t: CoverTree) -> str:
    """Line-oriented dump: index, 1-based type, parent, comma-joined children.

    The root's parent prints as -1 and a childless vertex prints "-" in the
    children column.  Used for golden tests and debugging.
    """
    lines = ["# index type parent children"]
    for v in range(len(t.types)):
        kids = ",".join(str(c) for c in t.children[v]) if t.children[v] else "-"
        lines.append(f"{v} {t.types[v] + 1} {t.parents[v]} {kids}")
    return "\n".join(lines) + "\n"
