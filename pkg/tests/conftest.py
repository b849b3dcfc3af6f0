import pytest

from deltasets import from_edge_list


def _complete(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture
def c5():
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def star4():
    """K_{1,3}: center 0, leaves 1..3."""
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4():
    return _complete(4)


@pytest.fixture
def k4_minus_edge():
    """Degrees (3, 3, 2, 2): the missing edge is (2, 3)."""
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def edgeless6():
    return from_edge_list(6, [])


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)


@pytest.fixture
def zoo(c5, star4, k4, k4_minus_edge, edgeless6, petersen):
    return {
        "c5": c5,
        "star4": star4,
        "k4": k4,
        "k4_minus_edge": k4_minus_edge,
        "edgeless6": edgeless6,
        "petersen": petersen,
        "k6": _complete(6),
        "path4": from_edge_list(4, [(0, 1), (1, 2), (2, 3)]),
    }
