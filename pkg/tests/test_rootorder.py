"""Root element orders, escape words, hitting probabilities, closed forms."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotorcover import (
    CapExceededError,
    biregular_closed_form,
    biregular_graph,
    build_cover,
    escape_prefix_formula,
    escape_sequence,
    explosion,
    explosion_escape,
    group_order,
    hitting_probabilities,
    root_order,
    root_order_recursion,
    root_order_simulated,
    shift,
    wire,
    zero_config,
)

# (type, h) -> (S_down, S_up, R) for the fibonacci base graph
FIB_ROOT_ORDERS = {
    (0, 1): (1, 1, 2),
    (0, 2): (3, 2, 5),
    (0, 3): (13, 7, 20),
    (0, 4): (126, 61, 187),
    (0, 5): (2311, 1051, 3362),
    (1, 1): (1, 2, 3),
    (1, 2): (6, 7, 13),
    (1, 3): (65, 61, 126),
    (1, 4): (1260, 1051, 2311),
    (1, 5): (432157, 337508, 769665),
}


def test_explosion_golden():
    assert explosion(()) == ()
    assert explosion((0,)) == (0,)
    assert explosion((2,)) == (1, 1, 0)
    assert explosion((1, 2)) == (1, 0, 1, 1, 0)
    with pytest.raises(ValueError):
        explosion((-1,))


def test_shift():
    assert shift((1, 0, 1)) == (0, 1, 0, 1)
    assert shift(()) == (0,)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 6), max_size=8))
def test_explosion_counts(a):
    word = explosion(tuple(a))
    assert len(word) == sum(a) + len(a)
    assert sum(word) == sum(a)
    # ones come in maximal runs given by the entries
    runs, current = [], 0
    for bit in word:
        if bit:
            current += 1
        else:
            runs.append(current)
            current = 0
    assert runs == list(a)


def test_root_order_golden(fib):
    table = root_order_recursion(fib, 5)
    for (i, h), (down, up, r) in FIB_ROOT_ORDERS.items():
        assert (table.down(i, h), table.up(i, h), table.r(i, h)) == (down, up, r)
    assert root_order(fib, 1, 4) == 2311


def test_root_order_divides_group_order(fib, bir):
    for g in (fib, bir):
        for i in range(g.m):
            for h in range(1, 6):
                assert group_order(g, i, h) % root_order(g, i, h) == 0


@pytest.mark.parametrize("root_type,height", [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3)])
def test_simulated_period(fib, root_type, height):
    sim = root_order_simulated(fib, root_type, height, collect_bits=True)
    table = root_order_recursion(fib, height)
    assert sim.period == table.r(root_type, height)
    assert (sim.downs, sim.ups) == (table.down(root_type, height), table.up(root_type, height))
    assert sim.bits == explosion_escape(fib, root_type, height)


def test_explosion_escape_biregular(bir):
    for i in range(2):
        for h in range(1, 4):
            sim = root_order_simulated(bir, i, h, collect_bits=True)
            assert sim.bits == explosion_escape(bir, i, h)


def test_word_structure(fib):
    word = explosion_escape(fib, 1, 2)
    assert "".join(map(str, word)) == "1101010101100"
    table = root_order_recursion(fib, 2)
    assert len(word) == table.r(1, 2)
    assert sum(word) == table.up(1, 2)


def test_word_cap(fib):
    with pytest.raises(CapExceededError):
        explosion_escape(fib, 1, 8, cap=100)


def test_prefix_formula_on_zero(fib):
    t = build_cover(fib, 1, 3)
    w = wire(t)
    n = 40
    assert escape_prefix_formula(t, zero_config(w), n) == explosion_escape(fib, 1, 3)[:n]


def test_prefix_formula_random_configs(fib, bir):
    rng = random.Random(11)
    for g, i, h in [(fib, 1, 3), (fib, 0, 4), (bir, 0, 2), (bir, 1, 2)]:
        t = build_cover(g, i, h)
        w = wire(t)
        for _ in range(5):
            config = tuple(rng.randrange(d) for d in w.degrees)
            n = rng.randrange(1, 60)
            assert escape_prefix_formula(t, config, n) == escape_sequence(w, config, n).bits


def test_hitting_recursion(fib):
    table = hitting_probabilities(fib, 3)
    assert table.h_down(0, 1) == Fraction(1, 2)
    assert table.h_down(1, 1) == Fraction(1, 3)
    assert table.h_down(0, 2) == Fraction(3, 5)
    assert table.h_down(1, 2) == Fraction(6, 13)
    assert table.h_up(1, 2) == Fraction(7, 13)


def test_hitting_equals_sink_ratio(fib, bir):
    for g in (fib, bir):
        ht = hitting_probabilities(g, 8)
        ro = root_order_recursion(g, 8)
        for h in range(1, 9):
            for i in range(g.m):
                assert ht.h_down(i, h) == Fraction(ro.down(i, h), ro.r(i, h))


def test_closed_form_golden():
    values = [biregular_closed_form(2, 3, h) for h in range(6)]
    assert values == [(1, 1), (3, 4), (10, 9), (21, 28), (64, 57), (129, 172)]


@pytest.mark.parametrize("alpha,beta", [(1, 1), (1, 3), (2, 3), (4, 4), (3, 2)])
def test_closed_form_matches_recursion(alpha, beta):
    g = biregular_graph(alpha, beta)
    table = root_order_recursion(g, 10)
    for h in range(1, 11):
        assert biregular_closed_form(alpha, beta, h) == (table.r(0, h), table.r(1, h))


@pytest.mark.parametrize("alpha,beta", [(1, 1), (2, 3), (4, 2)])
def test_closed_form_two_term_recurrence(alpha, beta):
    for h in range(2, 12):
        r1, _ = biregular_closed_form(alpha, beta, h)
        _, prev2 = biregular_closed_form(alpha, beta, h - 1)
        prev1, _ = biregular_closed_form(alpha, beta, h - 2)
        assert r1 == (alpha + 1) * prev2 - alpha * prev1
