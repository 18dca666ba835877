import pytest

from isd_indices import Graph, from_edge_list


@pytest.fixture
def p2() -> Graph:
    return from_edge_list(2, [(0, 1)])


@pytest.fixture
def p3() -> Graph:
    return from_edge_list(3, [(0, 1), (1, 2)])


@pytest.fixture
def c4() -> Graph:
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def k13() -> Graph:
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k23() -> Graph:
    return from_edge_list(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])


@pytest.fixture
def two_p2() -> Graph:
    return from_edge_list(4, [(0, 1), (2, 3)])
