"""Constructive Apollonian sets A(p, q; k) and filled sets B(p, q; k).

For p, q on a common guide line and k > 1 the set is an isosceles trapezoid
built from four line intersections. Every other filled set with k != 1 is the
union of the two filled trapezoids at the guide complements g+ and g-; the
unfilled set is the boundary of that union. k = 1 gives a barbell or a
lightning bolt, and k in {0, inf} gives a single focus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .exact_plane import (
    INF,
    ExtRatio,
    GeometryError,
    Point,
    SimplePolygon,
    as_ratio,
    as_scalar,
    midpoint,
    ratio,
    reciprocal,
    require_distinct,
)
from .isometries import apply, normalize_standard
from .polygon_ops import in_convex, union_boundary
from .reference_objects import (
    Barbell,
    LightningBolt,
    barbell,
    coordinate_complements,
    guide_complements,
    lightning_bolt,
    shares_guide_line,
    straight_bolt,
)


# A line {x : a x1 + b x2 = c}.
LinEq = Tuple[Fraction, Fraction, Fraction]


def _meet(l1: LinEq, l2: LinEq) -> Point:
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise GeometryError("parallel lines do not meet")
    return Point((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)


def trapezoid(p: Point, q: Point, k) -> SimplePolygon:
    """A(p, q; k) for p, q sharing a guide line and finite k > 1.

    Works in standard position, where q = (t, t): the inner base is the
    slope -1 line through the ratio-k point (kt/(k+1), kt/(k+1)) of segment
    pq, the legs are the lines through p with slopes (k+1)/(k-1) and
    (k-1)/(k+1), and the vertices are where these meet the coordinate lines
    of q. The result is mapped back by the inverse isometry.
    """
    if k is INF:
        raise GeometryError("trapezoid needs a finite k")
    k = as_scalar(k)
    require_distinct(p, q)
    if not shares_guide_line(p, q):
        raise GeometryError(f"{p} and {q} do not share a guide line")
    if k <= 1:
        raise GeometryError(f"trapezoid needs k > 1, got {k}")
    phi, _, q_std = normalize_standard(p, q)
    t = q_std.x1
    one, zero = Fraction(1), Fraction(0)
    inner_base = (one, one, 2 * k * t / (k + 1))
    steep_leg = (k + 1, -(k - 1), zero)
    shallow_leg = (k - 1, -(k + 1), zero)
    q_vertical = (one, zero, t)
    q_horizontal = (zero, one, t)
    corners = [
        _meet(inner_base, q_horizontal),
        _meet(inner_base, q_vertical),
        _meet(shallow_leg, q_horizontal),
        _meet(steep_leg, q_vertical),
    ]
    inverse = phi.inverse()
    return SimplePolygon.from_vertices(apply(inverse, v) for v in corners)


@dataclass(frozen=True)
class PointSet:
    point: Point


@dataclass(frozen=True)
class QuadUnion:
    quads: Tuple[SimplePolygon, ...]


@dataclass(frozen=True)
class FilledSet:
    body: Union[PointSet, QuadUnion]
    p: Point
    q: Point
    k: ExtRatio

    def contains(self, x: Point) -> bool:
        """Geometric membership, decided from the constructed quads."""
        if isinstance(self.body, PointSet):
            return x == self.body.point
        return any(in_convex(x, quad) for quad in self.body.quads)


def filled(p: Point, q: Point, k) -> FilledSet:
    """B(p, q; k) as a point or a union of at most two filled trapezoids."""
    k = as_ratio(k)
    require_distinct(p, q)
    if k == 1:
        raise GeometryError("the filled set is not defined for k = 1")
    if k is INF:
        return FilledSet(PointSet(q), p, q, k)
    if k == 0:
        return FilledSet(PointSet(p), p, q, k)
    if k < 1:
        inner = filled(q, p, reciprocal(k))
        return FilledSet(inner.body, p, q, k)
    if shares_guide_line(p, q):
        return FilledSet(QuadUnion((trapezoid(p, q, k),)), p, q, k)
    g_plus, g_minus = guide_complements(p, q)
    quads = (trapezoid(g_plus, q, k), trapezoid(g_minus, q, k))
    return FilledSet(QuadUnion(quads), p, q, k)


def boundary_of_union(f: FilledSet) -> SimplePolygon:
    if not isinstance(f.body, QuadUnion):
        raise GeometryError("a single point has no polygonal boundary")
    return union_boundary(f.body.quads)


@dataclass(frozen=True)
class SinglePoint:
    point: Point


@dataclass(frozen=True)
class Polygon:
    polygon: SimplePolygon


@dataclass(frozen=True)
class Bolt:
    bolt: LightningBolt


@dataclass(frozen=True)
class BarbellRegion:
    barbell: Barbell


ApollonianShape = Union[SinglePoint, Polygon, Bolt, BarbellRegion]


def _sgn(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def bisector(p: Point, q: Point) -> Union[Bolt, BarbellRegion]:
    """A(p, q; 1)."""
    require_distinct(p, q)
    if shares_guide_line(p, q):
        c1, c2 = coordinate_complements(p, q)
        return BarbellRegion(barbell(c1, c2))
    w = abs(q.x1 - p.x1)
    h = abs(q.x2 - p.x2)
    m = midpoint(p, q)
    # rays run perpendicular to the long side of the coordinate rectangle
    bolt_type = 1 if w > h else 2
    if w == 0 or h == 0:
        return Bolt(straight_bolt(m, bolt_type))
    # guide line through m with slope sign opposite to that of pq
    slope = -_sgn(q.x1 - p.x1) * _sgn(q.x2 - p.x2)
    e = min(w, h) / 2
    a = Point(m.x1 - e, m.x2 - slope * e)
    b = Point(m.x1 + e, m.x2 + slope * e)
    return Bolt(lightning_bolt(a, b, bolt_type))


def apollonian_set(p: Point, q: Point, k) -> ApollonianShape:
    k = as_ratio(k)
    require_distinct(p, q)
    if k == 0:
        return SinglePoint(p)
    if k is INF:
        return SinglePoint(q)
    if k == 1:
        return bisector(p, q)
    return Polygon(boundary_of_union(filled(p, q, k)))


def in_filled(x: Point, p: Point, q: Point, k) -> bool:
    """Membership in B(p, q; k) straight from the distance-ratio definition."""
    k = as_ratio(k)
    if k == 1:
        raise GeometryError("the filled set is not defined for k = 1")
    r = ratio(x, p, q)
    if k > 1:
        return r >= k
    return r <= k


def canonical_bolt(bolt: LightningBolt) -> LightningBolt:
    """Orient a bolt so its first vertex is the lexicographically smaller one."""
    a, b = bolt.vertices
    if a == b:
        return straight_bolt(a, bolt.bolt_type)
    if a <= b:
        return bolt
    return LightningBolt(bolt.end_ray_direction, (b, a), bolt.start_ray_direction, bolt.slope, bolt.bolt_type)


def canonical_shape(shape: ApollonianShape) -> ApollonianShape:
    if isinstance(shape, Bolt):
        return Bolt(canonical_bolt(shape.bolt))
    if isinstance(shape, BarbellRegion):
        bb = shape.barbell
        a, b = sorted((bb.a, bb.b))
        return BarbellRegion(barbell(a, b))
    if isinstance(shape, Polygon):
        return Polygon(SimplePolygon.from_vertices(shape.polygon.vertices))
    return shape
