"""Chip toppling, the abelian stabilization and spanning tree counts."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotorcover import (
    CapExceededError,
    build_cover,
    count_spanning_trees_bruteforce,
    det_bigint,
    enumerate_recurrent,
    reduced_laplacian,
    sink_multiplicities,
    stabilize,
    topple,
    wire,
)


@pytest.fixture
def w22(fib):
    return wire(build_cover(fib, 1, 2))


def test_sink_multiplicities(w22):
    assert sink_multiplicities(w22) == (1, 1, 2)


def test_topple_golden(w22):
    assert topple(w22, (3, 0, 0), 0) == (0, 1, 1)
    assert topple(w22, (0, 2, 0), 1) == (1, 0, 0)
    with pytest.raises(ValueError):
        topple(w22, (2, 0, 0), 0)


def test_stabilize_burning(w22):
    # one chip per incoming edge on top of the maximal stable config:
    # every vertex topples exactly once and the heap returns to it
    sigma = tuple(d - 1 for d in w22.degrees)
    chips = tuple(s + m for s, m in zip(sigma, sink_multiplicities(w22)))
    assert stabilize(w22, chips) == (sigma, (1, 1, 1))


def test_stabilize_of_stable_is_identity(w22):
    sigma = tuple(d - 1 for d in w22.degrees)
    assert stabilize(w22, sigma) == (sigma, (0, 0, 0))


def test_stabilize_order_independent(w22):
    chips = (7, 3, 5)
    baseline = stabilize(w22, chips)
    for seed in range(5):
        assert stabilize(w22, chips, rng=random.Random(seed)) == baseline


def test_topple_cap(w22):
    with pytest.raises(CapExceededError):
        stabilize(w22, (100, 100, 100), topple_cap=3)


def test_reduced_laplacian(w22):
    assert reduced_laplacian(w22) == [[3, -1, -1], [-1, 2, 0], [-1, 0, 3]]


def test_det_golden(w22):
    assert det_bigint(reduced_laplacian(w22)) == 13


@pytest.mark.parametrize(
    "matrix,value",
    [
        ([[1, 0], [0, 1]], 1),
        ([[0, 1], [1, 0]], -1),
        ([[1, 1], [1, 1]], 0),
        ([[2]], 2),
    ],
)
def test_det_small(matrix, value):
    assert det_bigint(matrix) == value


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4
    )
)
def test_det_matches_float(matrix):
    exact = det_bigint([row[:] for row in matrix])
    approx = np.linalg.det(np.array(matrix, dtype=float))
    assert exact == round(approx)


def test_bruteforce_count(w22, bir):
    assert count_spanning_trees_bruteforce(w22) == 13
    w = wire(build_cover(bir, 0, 1))
    assert count_spanning_trees_bruteforce(w) == det_bigint(reduced_laplacian(w)) == 3


def test_bruteforce_matches_recurrents(w22):
    assert count_spanning_trees_bruteforce(w22) == len(enumerate_recurrent(w22))


def test_bruteforce_cap(w22):
    with pytest.raises(CapExceededError):
        count_spanning_trees_bruteforce(w22, cap=5)
