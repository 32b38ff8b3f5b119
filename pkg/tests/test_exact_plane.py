from fractions import Fraction

import pytest
from hypothesis import given

from taxiapollo.exact_plane import (
    INF,
    DegenerateFociError,
    GeometryError,
    Point,
    as_ratio,
    midpoint,
    parse_point,
    parse_ratio,
    parse_scalar,
    pt,
    ratio,
    reciprocal,
    taxi_circle,
    taxi_distance,
)

from conftest import distinct_pairs, points, rationals


@pytest.mark.parametrize(
    "a, b, expected",
    [((0, 0), (3, 1), 4), ((2, 6), (2, 2), 4), ((5, -7), (5, -7), 0)],
)
def test_taxi_distance_examples(a, b, expected):
    assert taxi_distance(pt(*a), pt(*b)) == expected


@pytest.mark.parametrize(
    "p, q, expected",
    [
        ((0, 0), (3, 1), ("3/2", "1/2")),
        ((-1, 2), (1, -2), (0, 0)),
        ((0, 0), (0, 0), (0, 0)),
    ],
)
def test_midpoint_examples(p, q, expected):
    assert midpoint(pt(*p), pt(*q)) == pt(*expected)


def test_ratio_examples():
    p, q = pt(0, 0), pt(2, 2)
    assert ratio(p, p, q) == 0
    assert ratio(q, p, q) is INF
    # d((2,6),p) = 8 and d((2,6),q) = 4
    assert ratio(pt(2, 6), p, q) == 2


def test_ratio_rejects_equal_foci():
    with pytest.raises(DegenerateFociError):
        ratio(pt(1, 1), pt(0, 0), pt(0, 0))


def test_taxi_circle_examples():
    unit = taxi_circle(pt(0, 0), 1)
    assert set(unit.vertices) == {pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}
    assert set(taxi_circle(pt(2, 3), 2).vertices) == {pt(4, 3), pt(2, 5), pt(0, 3), pt(2, 1)}
    with pytest.raises(GeometryError):
        taxi_circle(pt(0, 0), 0)


def test_circle_is_canonical():
    c = taxi_circle(pt(0, 0), 1)
    assert c.vertices[0] == min(c.vertices)
    assert c.signed_area2() > 0


@given(points(), points(), points())
def test_metric_axioms(x, y, z):
    assert taxi_distance(x, y) >= 0
    assert (taxi_distance(x, y) == 0) == (x == y)
    assert taxi_distance(x, y) == taxi_distance(y, x)
    assert taxi_distance(x, z) <= taxi_distance(x, y) + taxi_distance(y, z)


@given(points(), distinct_pairs())
def test_ratio_reciprocal_product(x, pq):
    p, q = pq
    r, s = ratio(x, p, q), ratio(x, q, p)
    if r not in (0, INF):
        assert r * s == 1


@given(points(), rationals(0, 10).filter(lambda r: r > 0))
def test_circle_vertices_and_edges_at_radius(center, r):
    circle = taxi_circle(center, r)
    for a, b in circle.edges():
        for t in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            x = Point(a.x1 + t * (b.x1 - a.x1), a.x2 + t * (b.x2 - a.x2))
            assert taxi_distance(x, center) == r


def test_parsers():
    assert parse_scalar("-3/2") == Fraction(-3, 2)
    assert parse_scalar("+4") == 4
    assert parse_point("1/2,-3") == pt("1/2", -3)
    assert parse_ratio("inf") is INF
    assert parse_ratio("3/2") == Fraction(3, 2)
    for bad in ("1.5", "1/0", "a", "", "1/-2"):
        with pytest.raises(ValueError):
            parse_scalar(bad)
    with pytest.raises(ValueError):
        as_ratio("-1")


def test_floats_are_refused():
    with pytest.raises(TypeError):
        Point(0.5, 1)


def test_infinity_ordering():
    assert INF > Fraction(10**9)
    assert Fraction(10**9) < INF
    assert INF >= INF and not INF > INF
    assert reciprocal(INF) == 0 and reciprocal(Fraction(0)) is INF
    assert reciprocal(Fraction(2, 3)) == Fraction(3, 2)
