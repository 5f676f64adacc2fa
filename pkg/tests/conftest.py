import itertools

import pytest
from hypothesis import settings, strategies as st

from youngcm.diagram import Diagram, Partition, partition_to_diagram
from youngcm.ideal import VariableList

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def partitions(max_parts=8, max_part=8, min_parts=0):
    return st.lists(st.integers(1, max_part), min_size=min_parts, max_size=max_parts).map(
        lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def diagrams2d(max_parts=6, max_part=6):
    return partitions(max_parts, max_part).map(partition_to_diagram)


@st.composite
def diagrams(draw, dim=None, side=4):
    """Downward closure of a few random boxes."""
    if dim is None:
        dim = draw(st.integers(1, 4))
    tops = draw(st.lists(st.tuples(*[st.integers(0, side - 1)] * dim), max_size=4))
    boxes = set()
    for top in tops:
        boxes.update(itertools.product(*(range(c + 1) for c in top)))
    return Diagram(dim, frozenset(boxes))


def P(*parts):
    return partition_to_diagram(Partition(parts))


@pytest.fixture
def xyzw():
    return VariableList(("x", "y", "z", "w"), 2)


@pytest.fixture
def xy():
    return VariableList(("x", "y"), 2)
