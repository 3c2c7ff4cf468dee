"""Rotor walk routing, escape sequences and the recurrent class."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotorcover import (
    CapExceededError,
    Exit,
    apply_generator,
    build_cover,
    enumerate_recurrent,
    escape_sequence,
    fibonacci_graph,
    is_recurrent,
    orbit_of_zero,
    route_to_sink,
    step,
    wire,
    zero_config,
    zero_period,
)


@pytest.fixture
def w22(fib):
    return wire(build_cover(fib, 1, 2))


def test_step_increments_then_moves(w22):
    assert step(w22, zero_config(w22), 0) == ((1, 0, 0), 1)
    assert step(w22, (1, 0, 0), 1) == ((1, 1, 0), -1)
    # wrap back to entry 0, the ancestor
    assert step(w22, (2, 1, 1), 0) == ((0, 1, 1), -1)


def test_route_first_particles(w22):
    config = zero_config(w22)
    expect = [
        (Exit.UP, 2, (1, 1, 0)),
        (Exit.UP, 2, (2, 1, 1)),
        (Exit.DOWN, 1, (0, 1, 1)),
    ]
    for exit_, steps, after in expect:
        res = route_to_sink(w22, config)
        assert (res.exit, res.steps, res.config) == (exit_, steps, after)
        config = res.config


def test_route_down_in_one_step(w22):
    # last entry everywhere: the root wraps to its ancestor immediately
    config = tuple(d - 1 for d in w22.degrees)
    res = route_to_sink(w22, config)
    assert res.exit is Exit.DOWN
    assert res.steps == 1
    assert res.config == (0,) + config[1:]


def test_height_one_escape(fib):
    w = wire(build_cover(fib, 1, 1))
    res = escape_sequence(w, zero_config(w), 3)
    assert res.bits == (1, 1, 0)
    assert (res.ups, res.downs) == (2, 1)
    assert res.config == zero_config(w)


def test_zero_period_golden(w22):
    res = zero_period(w22)
    assert (res.period, res.downs, res.ups) == (13, 6, 7)
    assert "".join(map(str, res.bits)) == "1101010101100"


def test_step_cap(w22):
    with pytest.raises(CapExceededError):
        route_to_sink(w22, zero_config(w22), step_cap=1)


def test_particle_cap(w22):
    with pytest.raises(CapExceededError):
        zero_period(w22, particle_cap=5)


def test_recurrent_class_is_the_group(w22):
    rec = enumerate_recurrent(w22)
    assert len(rec) == 13
    assert zero_config(w22) in rec
    assert all(is_recurrent(w22, c) for c in rec)
    # two rotors pointing at each other form a cycle avoiding the sink
    assert not is_recurrent(w22, (1, 0, 0))


def test_orbit_is_transitive(w22):
    assert orbit_of_zero(w22) == set(enumerate_recurrent(w22))


def test_generators_permute_recurrents(w22):
    rec = enumerate_recurrent(w22)
    for x in range(w22.n):
        image = {apply_generator(w22, c, x) for c in rec}
        assert image == set(rec)


def test_generators_commute(w22):
    rng = random.Random(7)
    configs = [tuple(rng.randrange(d) for d in w22.degrees) for _ in range(10)]
    for config in configs:
        for x, y in itertools.combinations(range(w22.n), 2):
            xy = apply_generator(w22, apply_generator(w22, config, x), y)
            yx = apply_generator(w22, apply_generator(w22, config, y), x)
            assert xy == yx


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_routing_terminates(data):
    w = wire(build_cover(fibonacci_graph(), 1, 2))
    config = tuple(data.draw(st.integers(0, d - 1)) for d in w.degrees)
    res = route_to_sink(w, config)
    assert res.exit in (Exit.DOWN, Exit.UP)
    # no pair (position, rotor state) can repeat before the sink
    bound = w.n
    for d in w.degrees:
        bound *= d
    assert 1 <= res.steps <= bound
    assert all(0 <= r < d for r, d in zip(res.config, w.degrees))
