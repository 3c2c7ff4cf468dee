import pytest

from rotorcover import biregular_graph, fibonacci_graph


@pytest.fixture
def fib():
    return fibonacci_graph()


@pytest.fixture
def bir():
    return biregular_graph(2, 3)
