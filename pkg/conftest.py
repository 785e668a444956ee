"""Shared fixtures: the named example graphs."""

import pytest

from graphs.generators import (
    complete_bipartite, complete_graph, complete_minus_edge, cycle_graph, figure1_graph,
    figure2a_graph, figure2b_graph, path_graph, ring_of_k5, wheel_graph,
)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def k4_minus_edge():
    return complete_minus_edge(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def tree():
    return path_graph(5)


@pytest.fixture
def wheel5():
    return wheel_graph(5)


@pytest.fixture(scope="session")
def k55():
    return complete_bipartite(5, 5)


@pytest.fixture(scope="session")
def ring6():
    return ring_of_k5(6)


@pytest.fixture(scope="session")
def figure1():
    return figure1_graph()


@pytest.fixture(scope="session")
def figure2a():
    return figure2a_graph()


@pytest.fixture(scope="session")
def figure2b():
    return figure2b_graph()
