"""Solve alpha d(x,p) + beta d(x,q) = gamma one region at a time.

On each closed region R_i of the nine-region grid the absolute values in the
taxicab distances have a fixed sign, so the equation becomes linear,
A x1 + B x2 = C. Intersecting that line with the region gives an empty set,
a segment, a ray, a line, or (when the equation is vacuous) the region.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .exact_plane import Point, as_scalar, require_distinct, taxi_distance
from .reference_objects import Interval, region_box


@dataclass(frozen=True)
class AffineParams:
    p: Point
    q: Point
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        require_distinct(self.p, self.q)
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def lhs(self, x: Point) -> Fraction:
        return self.alpha * taxi_distance(x, self.p) + self.beta * taxi_distance(x, self.q)

    def satisfied_by(self, x: Point) -> bool:
        return self.lhs(x) == self.gamma


@dataclass(frozen=True)
class Empty:
    def contains(self, x: Point) -> bool:
        return False


@dataclass(frozen=True)
class Segment:
    """Closed segment; the endpoints may coincide (a single point)."""

    endpoints: Tuple[Point, Point]

    def contains(self, x: Point) -> bool:
        a, b = self.endpoints
        if (b.x1 - a.x1) * (x.x2 - a.x2) != (b.x2 - a.x2) * (x.x1 - a.x1):
            return False
        return (
            min(a.x1, b.x1) <= x.x1 <= max(a.x1, b.x1)
            and min(a.x2, b.x2) <= x.x2 <= max(a.x2, b.x2)
        )

    @property
    def direction(self) -> Tuple[Fraction, Fraction]:
        a, b = self.endpoints
        return b.x1 - a.x1, b.x2 - a.x2


@dataclass(frozen=True)
class Ray:
    origin: Point
    direction: Tuple[Fraction, Fraction]

    def contains(self, x: Point) -> bool:
        d1, d2 = self.direction
        dx1, dx2 = x.x1 - self.origin.x1, x.x2 - self.origin.x2
        return dx1 * d2 == dx2 * d1 and dx1 * d1 + dx2 * d2 >= 0


@dataclass(frozen=True)
class Line:
    """A full line, stored as two opposite rays from a common point."""

    rays: Tuple[Ray, Ray]

    def contains(self, x: Point) -> bool:
        return self.rays[0].contains(x) or self.rays[1].contains(x)


@dataclass(frozen=True)
class FullRegion:
    region: int
    box: Tuple[Interval, Interval]

    def contains(self, x: Point) -> bool:
        return _in_box(x, self.box)


RegionPiece = Union[Empty, Segment, Ray, Line, FullRegion]


def _in_interval(v: Fraction, iv: Interval) -> bool:
    lo, hi = iv
    return (lo is None or v >= lo) and (hi is None or v <= hi)


def _in_box(x: Point, box: Tuple[Interval, Interval]) -> bool:
    return _in_interval(x.x1, box[0]) and _in_interval(x.x2, box[1])


def _unit_direction(d1: Fraction, d2: Fraction) -> Tuple[Fraction, Fraction]:
    # scale so the larger coordinate has magnitude one; axis and diagonal
    # directions come out as one of the eight unit steps
    m = max(abs(d1), abs(d2))
    return d1 / m, d2 / m


def _absolute_signs(band: int, p_is_low: bool):
    """Signs (sp, sq) with |x - p| = sp (x - p), |x - q| = sq (x - q) on a band."""
    if band == 0:
        return -1, -1
    if band == 2:
        return 1, 1
    return (1, -1) if p_is_low else (-1, 1)


def resolved_equation(params: AffineParams, i: int) -> Tuple[Fraction, Fraction, Fraction]:
    """Coefficients (A, B, C) of the linear form of the equation valid on R_i."""
    p, q = params.p, params.q
    row, col = divmod(i - 1, 3)
    bands = (col, 2 - row)
    A_B = []
    C = params.gamma
    for axis, band in enumerate(bands):
        pj = p.x1 if axis == 0 else p.x2
        qj = q.x1 if axis == 0 else q.x2
        sp, sq = _absolute_signs(band, pj <= qj)
        A_B.append(params.alpha * sp + params.beta * sq)
        C += params.alpha * sp * pj + params.beta * sq * qj
    return A_B[0], A_B[1], C


def _clip_line(A, B, C, box) -> RegionPiece:
    """Intersect {A x1 + B x2 = C} (A, B not both zero) with a closed box."""
    if B != 0:
        base = Point(0, C / B)
    else:
        base = Point(C / A, 0)
    d = (B, -A)
    tmin: Optional[Fraction] = None
    tmax: Optional[Fraction] = None
    for axis in (0, 1):
        lo, hi = box[axis]
        b0 = base.x1 if axis == 0 else base.x2
        dk = d[axis]
        if dk == 0:
            if not _in_interval(b0, (lo, hi)):
                return Empty()
            continue
        # b0 + t dk in [lo, hi]
        bounds = []
        if lo is not None:
            bounds.append(((lo - b0) / dk, dk > 0))
        if hi is not None:
            bounds.append(((hi - b0) / dk, dk < 0))
        for t, is_lower in bounds:
            if is_lower:
                tmin = t if tmin is None else max(tmin, t)
            else:
                tmax = t if tmax is None else min(tmax, t)
    if tmin is not None and tmax is not None and tmin > tmax:
        return Empty()

    def at(t):
        return Point(base.x1 + t * d[0], base.x2 + t * d[1])

    unit = _unit_direction(*d)
    neg = (-unit[0], -unit[1])
    if tmin is not None and tmax is not None:
        a, b = sorted((at(tmin), at(tmax)))
        return Segment((a, b))
    if tmin is not None:
        return Ray(at(tmin), unit)
    if tmax is not None:
        return Ray(at(tmax), neg)
    return Line((Ray(base, unit), Ray(base, neg)))


def _box_is_full_dimensional(box) -> bool:
    return all(lo is None or hi is None or lo < hi for lo, hi in box)


def _degenerate_region_piece(box) -> RegionPiece:
    """The region itself when it has collapsed to a point, segment or ray."""
    (lo1, hi1), (lo2, hi2) = box
    if lo1 is not None and lo1 == hi1:
        x = lo1
        if lo2 is not None and hi2 is not None:
            return Segment((Point(x, lo2), Point(x, hi2)))
        if lo2 is not None:
            return Ray(Point(x, lo2), (Fraction(0), Fraction(1)))
        return Ray(Point(x, hi2), (Fraction(0), Fraction(-1)))
    y = lo2
    if lo1 is not None and hi1 is not None:
        return Segment((Point(lo1, y), Point(hi1, y)))
    if lo1 is not None:
        return Ray(Point(lo1, y), (Fraction(1), Fraction(0)))
    return Ray(Point(hi1, y), (Fraction(-1), Fraction(0)))


def restrict_affine(params: AffineParams, i: int) -> RegionPiece:
    """The part of the affine set lying in the closed region R_i."""
    box = region_box(i, params.p, params.q)
    A, B, C = resolved_equation(params, i)
    (lo1, hi1), (lo2, hi2) = box
    # on a collapsed axis the coordinate is a constant, so fold it into C
    if lo1 is not None and lo1 == hi1:
        C -= A * lo1
        A = Fraction(0)
    if lo2 is not None and lo2 == hi2:
        C -= B * lo2
        B = Fraction(0)
    if A == 0 and B == 0:
        if C != 0:
            return Empty()
        if _box_is_full_dimensional(box):
            return FullRegion(i, box)
        return _degenerate_region_piece(box)
    return _clip_line(A, B, C, box)


def affine_set(params: AffineParams) -> List[Tuple[int, RegionPiece]]:
    return [(i, restrict_affine(params, i)) for i in range(1, 10)]


def on_affine_set(x: Point, pieces: List[Tuple[int, RegionPiece]]) -> bool:
    return any(piece.contains(x) for _, piece in pieces)


def piece_slope(piece: RegionPiece) -> Optional[Fraction]:
    """Slope of a one-dimensional piece; None for vertical or undefined."""
    if isinstance(piece, Segment):
        d1, d2 = piece.direction
    elif isinstance(piece, Ray):
        d1, d2 = piece.direction
    elif isinstance(piece, Line):
        d1, d2 = piece.rays[0].direction
    else:
        return None
    if d1 == 0:
        return None
    return d2 / d1


def describe_piece(piece: RegionPiece) -> str:
    if isinstance(piece, Empty):
        return "empty"
    if isinstance(piece, Segment):
        a, b = piece.endpoints
        return f"segment {a} -- {b}" if a != b else f"point {a}"
    if isinstance(piece, Ray):
        d = piece.direction
        return f"ray from {piece.origin} direction ({d[0]},{d[1]})"
    if isinstance(piece, Line):
        r = piece.rays[0]
        return f"line through {r.origin} direction ({r.direction[0]},{r.direction[1]})"
    return "full region"
