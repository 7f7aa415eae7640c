import functools

import pytest

from walkdom.graph import Graph, cycle_graph, path_graph
from walkdom.patterns import pattern
from walkdom.theorems import generate_corpus


@functools.lru_cache(maxsize=None)
def corpus(max_n):
    return tuple(generate_corpus(max_n))


@pytest.fixture(scope="session")
def corpus5():
    return corpus(5)


@pytest.fixture(scope="session")
def corpus6():
    return corpus(6)


@pytest.fixture(scope="session")
def corpus7():
    return corpus(7)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def house():
    return pattern("house").graph


@pytest.fixture
def domino():
    return pattern("D").graph


@pytest.fixture
def x5():
    return pattern("X5").graph


@pytest.fixture
def f_graph():
    return pattern("F").graph


@pytest.fixture
def c4():
    # u=0, a=1, v=2, b=3
    return cycle_graph(4)


@pytest.fixture
def pendant_path():
    # u=0, a=1, b=2, v=3 with edges ua, ab, av
    return Graph.from_edge_list(4, [(0, 1), (1, 2), (1, 3)])


@pytest.fixture
def p5():
    return path_graph(5)
