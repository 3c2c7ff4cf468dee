"""Cover tree construction, wiring, subtree extraction and export."""

import pytest

from rotorcover import (
    SINK,
    CapExceededError,
    GraphInputError,
    build_cover,
    cone,
    export_tree,
    level_counts,
    wire,
)

EXPORT_FIB_T2_H2 = """\
# index type parent children
0 2 -1 1,2
1 1 0 3
2 2 0 4,5
3 2 1 -
4 1 2 -
5 2 2 -
"""


def test_level_counts(fib):
    assert level_counts(fib, 1, 3) == [[0, 1], [1, 1], [1, 2], [2, 3]]
    assert level_counts(fib, 0, 3) == [[1, 0], [0, 1], [1, 1], [1, 2]]


def test_build_cover_fibonacci(fib):
    t = build_cover(fib, 1, 2)
    assert len(t) == 6
    assert t.types == (1, 0, 1, 1, 0, 1)
    assert t.parents == (-1, 0, 0, 1, 2, 2)
    assert t.depths == (0, 1, 1, 2, 2, 2)
    assert t.children == ((1, 2), (3,), (4, 5), (), (), ())


@pytest.mark.parametrize("root_type,height", [(0, 1), (1, 1), (0, 4), (1, 4)])
def test_bfs_invariants(fib, root_type, height):
    t = build_cover(fib, root_type, height)
    assert len(t) == sum(sum(row) for row in level_counts(fib, root_type, height))
    for v in range(len(t)):
        # BFS numbering: depths never decrease, children come after parents
        if v > 0:
            assert t.depths[v] >= t.depths[v - 1]
            assert t.parents[v] < v
        # generation order follows chi for the vertex type
        kinds = tuple(t.types[c] for c in t.children[v])
        if t.depths[v] < height:
            assert kinds == fib.chi[t.types[v]]
        else:
            assert kinds == ()


def test_vertex_cap(fib):
    with pytest.raises(CapExceededError):
        build_cover(fib, 1, 40, cap=10**4)


def test_bad_arguments(fib):
    with pytest.raises(GraphInputError):
        build_cover(fib, 1, -1)
    with pytest.raises(GraphInputError):
        build_cover(fib, 2, 3)
    # height zero is the degenerate tree whose root already sits on the boundary
    assert len(build_cover(fib, 1, 0)) == 1


def test_wire_fibonacci(fib):
    w = wire(build_cover(fib, 1, 2))
    assert w.n == 3
    assert w.degrees == (3, 2, 3)
    assert w.entries == ((SINK, 1, 2), (0, SINK), (0, SINK, SINK))


def test_wire_single_vertex(fib):
    w = wire(build_cover(fib, 1, 1))
    assert w.n == 1
    assert w.entries == ((SINK, SINK, SINK),)


def test_entry_zero_is_ancestor(bir):
    w = wire(build_cover(bir, 0, 3))
    t = w.tree
    for v in range(1, w.n):
        assert w.entries[v][0] == t.parents[v]
        assert w.entries[v][1:] == tuple(
            c if t.depths[c] < t.height else SINK for c in t.children[v]
        )


def test_cone_extracts_subtrees(fib):
    t = build_cover(fib, 1, 3)
    assert cone(t, 0) == t
    assert cone(t, 1) == build_cover(fib, 0, 2)
    assert cone(t, 2) == build_cover(fib, 1, 2)


def test_cone_boundary_is_empty(fib):
    t = build_cover(fib, 1, 2)
    with pytest.raises(GraphInputError):
        cone(t, 3)


def test_export_golden(fib):
    assert export_tree(build_cover(fib, 1, 2)) == EXPORT_FIB_T2_H2
