# tests/conftest.py
import random

import pytest

from graphs.families import (
    complete_graph, cycle_graph, g_n, g_one, g_star_1, g_star_2, path_graph, star_graph,
)
from graphs.graph import Graph


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def claw():
    return star_graph(3)


@pytest.fixture
def barbell():
    """Two triangles joined by the bridge 2-3"""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])


@pytest.fixture
def g1():
    return g_one()


@pytest.fixture
def g8():
    return g_n(8)


@pytest.fixture
def gstar1():
    return g_star_1()


@pytest.fixture
def gstar2():
    return g_star_2()
