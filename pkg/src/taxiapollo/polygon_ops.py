"""Exact predicates and the union boundary of convex polygons."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Sequence

from .exact_plane import GeometryError, Point, SimplePolygon, cross

INSIDE, BOUNDARY, OUTSIDE = 1, 0, -1


def locate_in_convex(x: Point, poly: SimplePolygon) -> int:
    """INSIDE, BOUNDARY or OUTSIDE for a counterclockwise convex polygon."""
    on_edge = False
    for a, b in poly.edges():
        c = cross(a, b, x)
        if c < 0:
            return OUTSIDE
        if c == 0:
            on_edge = True
    return BOUNDARY if on_edge else INSIDE


def in_convex(x: Point, poly: SimplePolygon) -> bool:
    return locate_in_convex(x, poly) != OUTSIDE


def is_convex(poly: SimplePolygon) -> bool:
    vs = poly.vertices
    n = len(vs)
    return all(cross(vs[i - 1], vs[i], vs[(i + 1) % n]) > 0 for i in range(n))


def on_segment(x: Point, a: Point, b: Point) -> bool:
    if cross(a, b, x) != 0:
        return False
    return (
        min(a.x1, b.x1) <= x.x1 <= max(a.x1, b.x1)
        and min(a.x2, b.x2) <= x.x2 <= max(a.x2, b.x2)
    )


def segment_intersection(a: Point, b: Point, c: Point, d: Point):
    """Crossing point of segments ab and cd if they meet in exactly one point
    and are not parallel; None otherwise (collinear overlaps are handled by
    the caller through vertex-on-edge tests)."""
    r = (b.x1 - a.x1, b.x2 - a.x2)
    s = (d.x1 - c.x1, d.x2 - c.x2)
    denom = r[0] * s[1] - r[1] * s[0]
    if denom == 0:
        return None
    w = (c.x1 - a.x1, c.x2 - a.x2)
    t = (w[0] * s[1] - w[1] * s[0]) / denom
    u = (w[0] * r[1] - w[1] * r[0]) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return Point(a.x1 + t * r[0], a.x2 + t * r[1])
    return None


def _param(a: Point, b: Point, x: Point) -> Fraction:
    if b.x1 != a.x1:
        return (x.x1 - a.x1) / (b.x1 - a.x1)
    return (x.x2 - a.x2) / (b.x2 - a.x2)


def _split_edges(poly: SimplePolygon, other: SimplePolygon):
    pieces = []
    for a, b in poly.edges():
        cuts = {a, b}
        for v in other.vertices:
            if on_segment(v, a, b):
                cuts.add(v)
        for c, d in other.edges():
            x = segment_intersection(a, b, c, d)
            if x is not None:
                cuts.add(x)
        ordered = sorted(cuts, key=lambda x: _param(a, b, x))
        pieces.extend(zip(ordered, ordered[1:]))
    return pieces


def _same_direction_edge(a: Point, b: Point, poly: SimplePolygon) -> bool:
    """Whether the directed piece a->b lies along an edge of ``poly`` with the
    same orientation."""
    for c, d in poly.edges():
        if cross(c, d, a) == 0 and cross(c, d, b) == 0:
            return (b.x1 - a.x1) * (d.x1 - c.x1) + (b.x2 - a.x2) * (d.x2 - c.x2) > 0
    return False


def union_boundary(polys: Sequence[SimplePolygon]) -> SimplePolygon:
    """Boundary of the union of one or two convex polygons with overlapping
    interiors, as a canonical simple polygon."""
    if len(polys) == 1:
        return SimplePolygon.from_vertices(polys[0].vertices)
    if len(polys) != 2:
        raise GeometryError("union of more than two polygons is not supported")
    first, second = polys
    kept: List[tuple] = []
    for poly, other, keep_shared in ((first, second, True), (second, first, False)):
        for a, b in _split_edges(poly, other):
            mid = Point((a.x1 + b.x1) / 2, (a.x2 + b.x2) / 2)
            where = locate_in_convex(mid, other)
            if where == OUTSIDE:
                kept.append((a, b))
            elif where == BOUNDARY and keep_shared and _same_direction_edge(a, b, other):
                # shared edge with equal orientation: keep exactly one copy
                kept.append((a, b))
    nxt: Dict[Point, List[Point]] = defaultdict(list)
    for a, b in kept:
        nxt[a].append(b)
    if any(len(v) != 1 for v in nxt.values()):
        raise GeometryError("union boundary is not a simple closed curve")
    start = min(nxt)
    chain = [start]
    cur = nxt[start][0]
    while cur != start:
        chain.append(cur)
        if len(chain) > len(kept):
            raise GeometryError("union boundary walk did not close")
        cur = nxt[cur][0]
    if len(chain) != len(kept):
        raise GeometryError("union boundary has more than one component")
    return SimplePolygon.from_vertices(chain)
