"""Coordinate and guide lines, the nine-region grid, barbells and lightning bolts."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from .exact_plane import GeometryError, Point, require_distinct


class LineKind(enum.Enum):
    VERTICAL = "vertical"  # x1 = c
    HORIZONTAL = "horizontal"  # x2 = c
    SLOPE_PLUS_ONE = "slope+1"  # x2 - x1 = c
    SLOPE_MINUS_ONE = "slope-1"  # x2 + x1 = c


@dataclass(frozen=True)
class AxisLine:
    kind: LineKind
    offset: Fraction

    @classmethod
    def through(cls, kind: LineKind, x: Point) -> "AxisLine":
        return cls(kind, _line_value(kind, x))

    def contains(self, x: Point) -> bool:
        return _line_value(self.kind, x) == self.offset

    def value(self, x: Point) -> Fraction:
        """The defining linear form evaluated at ``x``."""
        return _line_value(self.kind, x)

    @property
    def slope(self) -> Optional[int]:
        """Slope of the line, ``None`` for vertical lines."""
        return {
            LineKind.VERTICAL: None,
            LineKind.HORIZONTAL: 0,
            LineKind.SLOPE_PLUS_ONE: 1,
            LineKind.SLOPE_MINUS_ONE: -1,
        }[self.kind]


def _line_value(kind: LineKind, x: Point) -> Fraction:
    if kind is LineKind.VERTICAL:
        return x.x1
    if kind is LineKind.HORIZONTAL:
        return x.x2
    if kind is LineKind.SLOPE_PLUS_ONE:
        return x.x2 - x.x1
    return x.x2 + x.x1


def coordinate_lines(p: Point) -> Tuple[AxisLine, AxisLine]:
    """(cl1, cl2): the vertical and the horizontal line through ``p``."""
    return AxisLine.through(LineKind.VERTICAL, p), AxisLine.through(LineKind.HORIZONTAL, p)


def guide_lines(p: Point) -> Tuple[AxisLine, AxisLine]:
    """(gl+, gl-): the slope +1 and slope -1 lines through ``p``."""
    return (
        AxisLine.through(LineKind.SLOPE_PLUS_ONE, p),
        AxisLine.through(LineKind.SLOPE_MINUS_ONE, p),
    )


def coordinate_complements(p: Point, q: Point) -> Tuple[Point, Point]:
    return Point(p.x1, q.x2), Point(q.x1, p.x2)


def shares_guide_line(p: Point, q: Point) -> bool:
    return abs(q.x1 - p.x1) == abs(q.x2 - p.x2)


def shares_coordinate_line(p: Point, q: Point) -> bool:
    return p.x1 == q.x1 or p.x2 == q.x2


def shared_guide_line(a: Point, b: Point) -> AxisLine:
    """The guide line through two distinct points; raises if there is none."""
    if a == b or not shares_guide_line(a, b):
        raise GeometryError(f"{a} and {b} do not share a guide line")
    if (b.x1 - a.x1) * (b.x2 - a.x2) > 0:
        return AxisLine.through(LineKind.SLOPE_PLUS_ONE, a)
    return AxisLine.through(LineKind.SLOPE_MINUS_ONE, a)


def guide_complements(p: Point, q: Point) -> Tuple[Point, Point]:
    """Return (g+, g-) where g+ = gl+(p) n gl-(q) and g- = gl-(p) n gl+(q).

    When p and q share a guide line these are p and q themselves.
    """
    require_distinct(p, q)
    # gl+(p): x2 - x1 = p2 - p1, gl-(q): x2 + x1 = q2 + q1
    u = p.x2 - p.x1
    v = q.x2 + q.x1
    g_plus = Point((v - u) / 2, (v + u) / 2)
    u = q.x2 - q.x1
    v = p.x2 + p.x1
    g_minus = Point((v - u) / 2, (v + u) / 2)
    return g_plus, g_minus


def in_coordinate_rectangle(z: Point, p: Point, q: Point) -> bool:
    return (
        min(p.x1, q.x1) <= z.x1 <= max(p.x1, q.x1)
        and min(p.x2, q.x2) <= z.x2 <= max(p.x2, q.x2)
    )


# Closed intervals of the three columns/rows; None means unbounded.
Interval = Tuple[Optional[Fraction], Optional[Fraction]]


def _bands(lo: Fraction, hi: Fraction, x: Fraction) -> FrozenSet[int]:
    """Indices 0 (below), 1 (between), 2 (above) of the closed bands containing x."""
    out = set()
    if x <= lo:
        out.add(0)
    if lo <= x <= hi:
        out.add(1)
    if x >= hi:
        out.add(2)
    return frozenset(out)


def classify_region(x: Point, p: Point, q: Point) -> FrozenSet[int]:
    """All closed regions R1..R9 containing ``x``.

    Numbering is in reading order: R1 top-left, R5 the coordinate rectangle,
    R9 bottom-right, regardless of which focus is left or lower.
    """
    cols = _bands(min(p.x1, q.x1), max(p.x1, q.x1), x.x1)
    rows = {2 - b for b in _bands(min(p.x2, q.x2), max(p.x2, q.x2), x.x2)}
    return frozenset(3 * r + c + 1 for r in rows for c in cols)


def region_box(i: int, p: Point, q: Point) -> Tuple[Interval, Interval]:
    """The closed region R_i as a product of two (possibly unbounded) intervals."""
    if not 1 <= i <= 9:
        raise ValueError(f"region index must be in 1..9, got {i}")
    row, col = divmod(i - 1, 3)
    lo1, hi1 = min(p.x1, q.x1), max(p.x1, q.x1)
    lo2, hi2 = min(p.x2, q.x2), max(p.x2, q.x2)
    cols = [(None, lo1), (lo1, hi1), (hi1, None)]
    rows = [(hi2, None), (lo2, hi2), (None, lo2)]
    return cols[col], rows[row]


def _sgn(v: Fraction) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Quadrant:
    """Closed quadrant {x : s1 (x1 - a1) >= 0 and s2 (x2 - a2) >= 0}."""

    apex: Point
    s1: int
    s2: int

    def contains(self, x: Point) -> bool:
        return self.s1 * (x.x1 - self.apex.x1) >= 0 and self.s2 * (x.x2 - self.apex.x2) >= 0

    def contains_strictly(self, x: Point) -> bool:
        return self.s1 * (x.x1 - self.apex.x1) > 0 and self.s2 * (x.x2 - self.apex.x2) > 0


@dataclass(frozen=True)
class Barbell:
    a: Point
    b: Point
    quadrant_a: Quadrant
    quadrant_b: Quadrant
    gl: AxisLine

    def contains(self, x: Point) -> bool:
        return barbell_membership(x, self)

    def on_boundary(self, x: Point) -> bool:
        return self.contains(x) and not (
            self.quadrant_a.contains_strictly(x) or self.quadrant_b.contains_strictly(x)
        )


def barbell(a: Point, b: Point) -> Barbell:
    """bb(a, b): the a-quadrant holding the half of gl away from b, the
    b-quadrant holding the half away from a, and gl itself."""
    gl = shared_guide_line(a, b)
    s1, s2 = _sgn(a.x1 - b.x1), _sgn(a.x2 - b.x2)
    return Barbell(a, b, Quadrant(a, s1, s2), Quadrant(b, -s1, -s2), gl)


def barbell_membership(x: Point, bb: Barbell) -> bool:
    return bb.quadrant_a.contains(x) or bb.quadrant_b.contains(x) or bb.gl.contains(x)


UNIT_STEPS = (
    (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1),
)


@dataclass(frozen=True)
class LightningBolt:
    """Ray into ``vertices[0]``, segment to ``vertices[1]``, ray out of it.

    ``start_ray_direction`` points away from ``vertices[0]`` along the first
    ray; ``end_ray_direction`` points away from ``vertices[1]``. The two
    vertices coincide only for the straight-line bisector of two points on a
    common coordinate line; such bolts carry ``slope == 0``.
    """

    start_ray_direction: Tuple[int, int]
    vertices: Tuple[Point, Point]
    end_ray_direction: Tuple[int, int]
    slope: int
    bolt_type: int

    def contains(self, x: Point) -> bool:
        a, b = self.vertices
        return (
            _on_ray(x, a, self.start_ray_direction)
            or _on_ray(x, b, self.end_ray_direction)
            or _on_segment_axis(x, a, b)
        )


def _on_ray(x: Point, origin: Point, d: Tuple[int, int]) -> bool:
    dx1, dx2 = x.x1 - origin.x1, x.x2 - origin.x2
    if dx1 * d[1] - dx2 * d[0] != 0:
        return False
    return dx1 * d[0] + dx2 * d[1] >= 0


def _on_segment_axis(x: Point, a: Point, b: Point) -> bool:
    if (b.x1 - a.x1) * (x.x2 - a.x2) != (b.x2 - a.x2) * (x.x1 - a.x1):
        return False
    return (
        min(a.x1, b.x1) <= x.x1 <= max(a.x1, b.x1)
        and min(a.x2, b.x2) <= x.x2 <= max(a.x2, b.x2)
    )


def lightning_bolt(a: Point, b: Point, bolt_type: int) -> LightningBolt:
    """lb^1(a, b) (vertical rays) or lb^2(a, b) (horizontal rays).

    The bolt is the barbell bb(a, b) cut down to the closed strip spanned by
    a and b: vertical strip for type 1, horizontal strip for type 2.
    """
    if bolt_type not in (1, 2):
        raise ValueError(f"bolt type must be 1 or 2, got {bolt_type}")
    gl = shared_guide_line(a, b)
    s1, s2 = _sgn(a.x1 - b.x1), _sgn(a.x2 - b.x2)
    if bolt_type == 1:
        start, end = (0, s2), (0, -s2)
    else:
        start, end = (s1, 0), (-s1, 0)
    return LightningBolt(start, (a, b), end, gl.slope, bolt_type)


def straight_bolt(m: Point, bolt_type: int) -> LightningBolt:
    """Degenerate bolt with both vertices at ``m``: a full vertical (type 1)
    or horizontal (type 2) line."""
    if bolt_type == 1:
        return LightningBolt((0, 1), (m, m), (0, -1), 0, 1)
    return LightningBolt((-1, 0), (m, m), (1, 0), 0, 2)


def in_P_component(x: Point, a: Point, b: Point, which: int) -> bool:
    """Membership in the open component P_{a,b}(c^which) of the barbell complement."""
    if which not in (1, 2):
        raise ValueError(f"which must be 1 or 2, got {which}")
    bb = barbell(a, b)
    if bb.contains(x):
        return False
    c = coordinate_complements(a, b)[which - 1]
    # the complement splits along gl; each open side is one component
    return _sgn(bb.gl.value(x) - bb.gl.offset) == _sgn(bb.gl.value(c) - bb.gl.offset)
