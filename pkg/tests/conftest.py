from pathlib import Path

import pytest

from matroidkit import Graphic, Multigraph, Partition, Uniform, build

FIXTURES = Path(__file__).parent / "fixtures"


def triangle_graph() -> Multigraph:
    return Multigraph.from_labels(
        ["u", "v", "w"], [("e1", "u", "v"), ("e2", "v", "w"), ("e3", "w", "u")]
    )


def path3_graph() -> Multigraph:
    return Multigraph.from_labels(["a", "b", "c"], [("e0", "a", "b"), ("e1", "b", "c")])


def k22_graph() -> Multigraph:
    return Multigraph.from_labels(
        ["u1", "u2", "w1", "w2"],
        [("e0", "u1", "w1"), ("e1", "u1", "w2"), ("e2", "u2", "w1"), ("e3", "u2", "w2")],
    )


def k4_graph() -> Multigraph:
    pairs = [("1", "2"), ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4")]
    return Multigraph.from_labels(
        ["1", "2", "3", "4"], [(f"e{i}", a, b) for i, (a, b) in enumerate(pairs)]
    )


def crossing_pair():
    """Two partition matroids whose blocks cross; max common independent = 2."""
    m1 = build(Partition((("a", "b"), ("c", "d")), (1, 1)))
    m2 = build(Partition((("a", "c"), ("b", "d")), (1, 1)))
    return m1, m2


@pytest.fixture
def triangle():
    return triangle_graph()


@pytest.fixture
def path3():
    return path3_graph()


@pytest.fixture
def k22():
    return k22_graph()


@pytest.fixture
def u24():
    return build(Uniform(4, 2, labels=("a", "b", "c", "d")))


@pytest.fixture
def graphic_triangle(triangle):
    return build(Graphic(triangle))


@pytest.fixture
def crossing():
    return crossing_pair()
