import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest
from hypothesis import settings

from sqfpow import Graph

# exhaustive scans inside single examples make wall-clock deadlines noisy
settings.register_profile("sqfpow", deadline=None)
settings.load_profile("sqfpow")


@pytest.fixture
def fig1():
    """A 17-vertex block graph exercising every block flavor."""
    edges = [
        (0, 1), (0, 2), (1, 2),
        (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
        (5, 6), (5, 7), (6, 7),
        (5, 8), (5, 9),
        (9, 10), (9, 11), (9, 12), (10, 11), (10, 12), (11, 12),
        (12, 13), (12, 14),
        (15, 16),
    ]
    return Graph(17, edges)


@pytest.fixture
def p4():
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k4():
    return Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


@pytest.fixture
def c5():
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])
