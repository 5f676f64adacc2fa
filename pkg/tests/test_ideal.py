import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import P, diagrams, diagrams2d
from youngcm.cli import parse_ideal
from youngcm.diagram import (
    Diagram,
    diagram_intersection,
    diagram_union,
    inner_corners,
    thicken,
    truncate_at_diagonal,
)
from youngcm.errors import DimensionError, NotCofinite, NotSupportedIdeal, VariableMismatch
from youngcm.ideal import (
    MonomialIdeal,
    VariableList,
    diagram_from_ideal,
    filtration_layers,
    ideal_from_diagram,
    ideal_intersection,
    ideal_sum,
    infinitesimal_neighbourhood,
    is_cm_structure,
    minimalize,
    product_with_support_ideal,
    s1_filtration,
)


def test_minimalize():
    assert minimalize({(2, 0), (3, 0), (0, 1)}) == {(2, 0), (0, 1)}
    assert minimalize({(4, 1), (4, 0), (0, 1)}) == {(4, 0), (0, 1)}
    gens = {(4, 0), (3, 2), (2, 3), (0, 4)}
    assert minimalize(gens) == gens
    assert minimalize(minimalize({(1, 1), (2, 2), (0, 3)})) == minimalize({(1, 1), (2, 2), (0, 3)})


def test_variable_list_validation():
    with pytest.raises(ValueError):
        VariableList(("x", "x"), 1)
    with pytest.raises(ValueError):
        VariableList(("x", "y"), 0)


def test_ideal_from_diagram(xy):
    assert ideal_from_diagram(P(4, 4, 3, 2), xy) == parse_ideal("x^4, x^3*y^2, x^2*y^3, y^4", xy)
    assert ideal_from_diagram(Diagram.empty(2), xy).is_unit
    assert ideal_from_diagram(P(3, 1), xy) == parse_ideal("x^3, x*y, y^2", xy)
    with pytest.raises(DimensionError):
        ideal_from_diagram(Diagram.empty(3), xy)


def test_ideal_from_diagram_pads_support(xyzw):
    assert ideal_from_diagram(P(5, 4), xyzw).gens == {(5, 0, 0, 0), (4, 1, 0, 0), (0, 2, 0, 0)}


def test_diagram_from_ideal(xy, xyzw):
    assert diagram_from_ideal(parse_ideal("x^4, x^3*y^2, x^2*y^3, y^4", xy)) == P(4, 4, 3, 2)
    assert diagram_from_ideal(parse_ideal("x, y", xy)) == P(1)
    assert diagram_from_ideal(parse_ideal("x^5, x^4*y, y^2", xyzw)) == P(5, 4)
    with pytest.raises(NotCofinite):
        diagram_from_ideal(parse_ideal("x^2*y, y^3", xy))
    with pytest.raises(NotSupportedIdeal):
        diagram_from_ideal(parse_ideal("x^2, x*z, y", xyzw))


def test_is_cm_structure():
    v = VariableList(("x", "y", "z0", "w"), 2)
    assert is_cm_structure(parse_ideal("x^5, x^4*y, y^2", v))
    assert not is_cm_structure(parse_ideal("x^2, x*z0, y", v))
    assert not is_cm_structure(parse_ideal("x^2*y", v))


@given(st.integers(1, 3).flatmap(diagrams))
def test_dictionary_round_trip(d):
    v = VariableList.standard(d.dim, 1)
    ideal = ideal_from_diagram(d, v)
    assert diagram_from_ideal(ideal) == d
    assert ideal_from_diagram(diagram_from_ideal(ideal), v) == ideal


def test_sum_and_intersection_example(xy):
    i = parse_ideal("x^2, x*y^2, y^3", xy)
    j = parse_ideal("x^4, x*y, y^2", xy)
    assert ideal_sum(i, j) == parse_ideal("x^2, x*y, y^2", xy)
    assert ideal_intersection(i, j) == parse_ideal("x^4, x^2*y, x*y^2, y^3", xy)
    assert ideal_intersection(i, i) == i
    with pytest.raises(VariableMismatch):
        ideal_sum(i, parse_ideal("x", VariableList(("x", "y", "z"), 2)))


def _standard_set(ideal, max_deg):
    k = len(ideal.vars)
    return {e for e in itertools.product(range(max_deg + 1), repeat=k)
            if sum(e) <= max_deg and not ideal.contains(e)}


@given(diagrams2d(5, 6), diagrams2d(5, 6))
def test_sum_intersection_against_membership(t, s):
    # standard monomials of I+J and I cap J by divisibility, all degrees <= 12
    v = VariableList(("x", "y"), 2)
    i, j = ideal_from_diagram(t, v), ideal_from_diagram(s, v)
    assert _standard_set(ideal_sum(i, j), 12) == set(diagram_intersection(t, s).boxes)
    assert _standard_set(ideal_intersection(i, j), 12) == set(diagram_union(t, s).boxes)
    assert diagram_from_ideal(ideal_sum(i, j)) == diagram_intersection(t, s)
    assert diagram_from_ideal(ideal_intersection(i, j)) == diagram_union(t, s)


@given(st.integers(1, 3).flatmap(lambda m: st.tuples(diagrams(m), diagrams(m))))
def test_inclusion_reversing(pair):
    t, s = pair
    v = VariableList.standard(t.dim)
    i, j = ideal_from_diagram(t, v), ideal_from_diagram(s, v)
    contains = all(i.contains(g) for g in j.gens)  # J inside I
    assert contains == (t.boxes <= s.boxes)


def test_product_with_support_ideal(xy):
    assert product_with_support_ideal(parse_ideal("x, y", xy)) == parse_ideal("x^2, x*y, y^2", xy)
    prod = product_with_support_ideal(parse_ideal("x^2, x*y, y^2", xy))
    assert prod == parse_ideal("x^3, x^2*y, x*y^2, y^3", xy)
    d = P(4, 4, 3, 2)
    prod = product_with_support_ideal(ideal_from_diagram(d, xy))
    assert diagram_from_ideal(prod) == thicken(d, {(4, 0), (3, 2), (2, 3), (0, 4)})


@given(st.integers(1, 3).flatmap(diagrams))
def test_product_is_thicken_all(d):
    v = VariableList.standard(d.dim)
    prod = product_with_support_ideal(ideal_from_diagram(d, v))
    assert diagram_from_ideal(prod) == thicken(d, inner_corners(d))


def test_infinitesimal_neighbourhood(xy):
    assert infinitesimal_neighbourhood(2, 0) == P(1)
    assert infinitesimal_neighbourhood(2, 1, xy) == P(2, 1)
    assert len(infinitesimal_neighbourhood(3, 1)) == 4
    assert ideal_from_diagram(infinitesimal_neighbourhood(2, 2), xy) == parse_ideal(
        "x^3, x^2*y, x*y^2, y^3", xy)


def test_s1_filtration():
    assert s1_filtration(P(4, 1)) == [P(1), P(2, 1), P(3, 1), P(4, 1)]
    assert s1_filtration(P(1)) == [P(1)]
    assert s1_filtration(P(2, 2)) == [P(1), P(2, 1), P(2, 2)]


@given(st.integers(1, 3).flatmap(diagrams))
def test_s1_filtration_increasing(d):
    terms = s1_filtration(d)
    for a, b in zip(terms, terms[1:]):
        assert a.boxes <= b.boxes
    if d:
        assert terms[-1] == d
    for k, t in enumerate(terms):
        assert t.boxes == d.boxes & infinitesimal_neighbourhood(d.dim, k).boxes
        assert t == truncate_at_diagonal(d, k)


def test_filtration_layers():
    assert [layer.twists for layer in filtration_layers(P(4, 1))] == [(1, 1), (2,), (3,)]
    assert filtration_layers(P(1)) == []
    assert [layer.twists for layer in filtration_layers(P(2, 1))] == [(1, 1)]
    for layer in filtration_layers(P(6, 2, 1)):
        assert set(layer.twists) <= {layer.level + 1}
