import pytest
from hypothesis import given, strategies as st

from conftest import P, diagrams, diagrams2d, partitions
from youngcm.diagram import (
    Diagram,
    Partition,
    box_weight,
    diagonal_profile,
    diagram_intersection,
    diagram_to_partition,
    diagram_union,
    inner_corners,
    outer_corners,
    partition_sum,
    partition_to_diagram,
    partitions_of,
    three_dim_diagram,
    thicken,
    truncate_at_diagonal,
)
from youngcm.errors import DimensionError, NotAnInnerCorner, ParseError


@pytest.mark.parametrize("box, weight", [((0, 0), 0), ((1, 2), 3), ((2, 1, 1), 4)])
def test_box_weight(box, weight):
    assert box_weight(box) == weight


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.parse("[7,7,4,2]") == Partition((7, 7, 4, 2))
    assert Partition.parse(" 3, 1 ") == Partition((3, 1))
    assert Partition.parse("()") == Partition(())
    with pytest.raises(ParseError):
        Partition.parse("3;1")


def test_diagram_rejects_non_young_sets():
    with pytest.raises(ValueError):
        Diagram(2, frozenset({(1, 0)}))
    with pytest.raises(DimensionError):
        Diagram(2, frozenset({(0, 0, 0)}))


def test_partition_to_diagram():
    d = P(4, 4, 3, 1)
    assert len(d) == 12
    assert [sum(1 for b in d.boxes if b[1] == j) for j in range(4)] == [4, 4, 3, 1]
    assert P() == Diagram.empty(2)
    assert P(2, 1).boxes == {(0, 0), (1, 0), (0, 1)}


def test_diagram_to_partition():
    assert diagram_to_partition(Diagram(2, frozenset({(0, 0), (1, 0), (0, 1)}))) == Partition((2, 1))
    assert diagram_to_partition(Diagram.empty(2)) == Partition(())
    assert diagram_to_partition(P(4, 4, 3, 2)) == Partition((4, 4, 3, 2))
    with pytest.raises(DimensionError):
        diagram_to_partition(Diagram(3, frozenset({(0, 0, 0)})))


@given(partitions())
def test_partition_round_trip(p):
    assert diagram_to_partition(partition_to_diagram(p)) == p


@given(diagrams2d())
def test_diagram_round_trip(d):
    assert partition_to_diagram(diagram_to_partition(d)) == d


def test_union_intersection_example():
    assert diagram_intersection(P(2, 2, 1), P(4, 1)) == P(2, 1)
    assert diagram_union(P(2, 2, 1), P(4, 1)) == P(4, 2, 1)
    t = P(3, 1)
    assert diagram_union(t, t) == t
    with pytest.raises(DimensionError):
        diagram_union(t, Diagram.empty(3))


@given(st.integers(1, 4).flatmap(lambda m: st.tuples(diagrams(m), diagrams(m))))
def test_union_intersection_stay_young(pair):
    a, b = pair
    # construction re-validates closure
    assert diagram_union(a, b).boxes == a.boxes | b.boxes
    assert diagram_intersection(a, b).boxes == a.boxes & b.boxes


def test_diagonal_profile():
    assert diagonal_profile(P(5, 4)) == (1, 2, 2, 2, 2)
    assert diagonal_profile(P(6, 2, 1)) == (1, 2, 3, 1, 1, 1)
    assert diagonal_profile(Diagram.empty(2)) == ()


def test_truncate_at_diagonal():
    assert truncate_at_diagonal(P(4, 1), 1) == P(2, 1)
    assert truncate_at_diagonal(P(4, 1), 3) == P(4, 1)


@given(diagrams(), st.integers(0, 20))
def test_truncate_saturates(d, k):
    t = truncate_at_diagonal(d, k)
    assert t.boxes <= d.boxes
    if k >= d.max_weight:
        assert t == d


def brute_inner_corners(d, bound):
    import itertools
    out = set()
    for c in itertools.product(range(bound), repeat=d.dim):
        if c in d.boxes:
            continue
        ok = True
        for t in range(d.dim):
            if c[t] > 0:
                below = list(c)
                below[t] -= 1
                ok &= tuple(below) in d.boxes
        if ok:
            out.add(c)
    return out


def test_inner_corners():
    assert inner_corners(P(4, 4, 3, 2)) == {(4, 0), (3, 2), (2, 3), (0, 4)}
    assert inner_corners(Diagram.empty(2)) == {(0, 0)}
    assert inner_corners(Diagram.empty(3)) == {(0, 0, 0)}
    assert inner_corners(P(3, 1)) == {(3, 0), (1, 1), (0, 2)}


@given(diagrams())
def test_inner_corners_match_definition(d):
    assert inner_corners(d) == brute_inner_corners(d, 6)


def test_outer_corners():
    assert outer_corners(P(5, 4)) == {(5, 1), (4, 2)}
    assert outer_corners(P(3, 1)) == {(3, 1), (1, 2)}
    assert outer_corners(P(1)) == {(1, 1)}
    with pytest.raises(DimensionError):
        outer_corners(Diagram.empty(3))


@given(diagrams2d())
def test_outer_corners_one_fewer(d):
    if d:
        assert len(outer_corners(d)) == len(inner_corners(d)) - 1


def test_thicken():
    single = P(1)
    assert thicken(single, inner_corners(single)) == P(2, 1)
    assert thicken(P(2, 1), {(2, 0)}) == P(3, 1)
    assert thicken(P(2, 1), set()) == P(2, 1)
    with pytest.raises(NotAnInnerCorner):
        thicken(P(2, 1), {(3, 0)})


@given(diagrams(), st.data())
def test_thicken_any_subset_is_young(d, data):
    corners = sorted(inner_corners(d))
    chosen = data.draw(st.sets(st.sampled_from(corners))) if corners else set()
    assert thicken(d, chosen).boxes == d.boxes | chosen


def test_partition_sum():
    assert partition_sum(Partition((4, 4, 3, 2)), Partition((3, 3, 1))) == Partition((7, 7, 4, 2))
    assert partition_sum(Partition((3, 1)), Partition(())) == Partition((3, 1))
    assert Partition((2, 1)) + Partition((1, 1)) == Partition((3, 2))


@given(partitions(), partitions(), partitions())
def test_sum_is_commutative_monoid(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + Partition(()) == a
    assert (a + b).size == a.size + b.size


@given(partitions())
def test_partition_is_sum_of_columns(p):
    total = Partition(())
    for col in p.columns():
        total = total + col
    assert total == p


def test_three_dim_diagram_4432_331():
    d = three_dim_diagram(Partition((4, 4, 3, 2)), Partition((3, 3, 1)))
    assert len(d) == 27
    assert [diagram_to_partition(layer) for layer in d.layers()] == [
        Partition((3, 3, 1))] * 3 + [Partition((3, 3))]
    assert three_dim_diagram(Partition((1,)), Partition((1,))).boxes == {(0, 0, 0)}


@given(partitions(), partitions())
def test_three_dim_diagram_properties(lam, mu):
    d = three_dim_diagram(lam, mu)
    assert len(d) == sum(lam.part(j) * mu.part(j) for j in range(max(len(lam), len(mu))))
    assert three_dim_diagram(mu, lam) == d.permute_axes((2, 1, 0))


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(13)] == [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
