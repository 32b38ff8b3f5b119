"""Taxicab isometries x -> L x + t with L a signed permutation matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .exact_plane import Point, SimplePolygon, require_distinct
from .reference_objects import (
    AxisLine,
    Barbell,
    LightningBolt,
    LineKind,
    barbell,
    straight_bolt,
)

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]

IDENTITY_MATRIX: Matrix = ((1, 0), (0, 1))

# The dihedral group of the square, as 2x2 signed permutation matrices.
LINEAR_PARTS: Tuple[Matrix, ...] = (
    ((1, 0), (0, 1)),
    ((0, -1), (1, 0)),  # quarter turn counterclockwise
    ((-1, 0), (0, -1)),
    ((0, 1), (-1, 0)),
    ((1, 0), (0, -1)),  # negate x2
    ((-1, 0), (0, 1)),  # negate x1
    ((0, 1), (1, 0)),  # swap: reflection across x2 = x1
    ((0, -1), (-1, 0)),  # reflection across x2 = -x1
)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _matvec(m: Matrix, x: Point) -> Point:
    return Point(m[0][0] * x.x1 + m[0][1] * x.x2, m[1][0] * x.x1 + m[1][1] * x.x2)


def _transpose(m: Matrix) -> Matrix:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


@dataclass(frozen=True)
class Isometry:
    linear: Matrix
    translation: Point

    def __post_init__(self):
        if self.linear not in LINEAR_PARTS:
            raise ValueError(f"{self.linear} is not a signed permutation matrix")

    def __call__(self, x: Point) -> Point:
        return apply(self, x)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return compose(self, other)

    def inverse(self) -> "Isometry":
        # orthogonal linear part: inverse is the transpose
        lt = _transpose(self.linear)
        t = _matvec(lt, self.translation)
        return Isometry(lt, Point(-t.x1, -t.x2))

    @property
    def is_orientation_preserving(self) -> bool:
        m = self.linear
        return m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1


_ORIGIN = Point(0, 0)

IDENTITY = Isometry(IDENTITY_MATRIX, _ORIGIN)


def translation(v: Point) -> Isometry:
    return Isometry(IDENTITY_MATRIX, v)


def linear(m: Matrix) -> Isometry:
    return Isometry(m, _ORIGIN)


NEGATE_X1 = linear(((-1, 0), (0, 1)))
NEGATE_X2 = linear(((1, 0), (0, -1)))
SWAP = linear(((0, 1), (1, 0)))
ANTI_SWAP = linear(((0, -1), (-1, 0)))
QUARTER_TURN = linear(((0, -1), (1, 0)))


def apply(phi: Isometry, x: Point) -> Point:
    return _matvec(phi.linear, x) + phi.translation


def compose(phi: Isometry, psi: Isometry) -> Isometry:
    """phi after psi."""
    return Isometry(
        _matmul(phi.linear, psi.linear),
        _matvec(phi.linear, psi.translation) + phi.translation,
    )


def about(phi_linear: Isometry, center: Point) -> Isometry:
    """Conjugate a linear isometry so that it fixes ``center``."""
    return compose(translation(center), compose(phi_linear, translation(Point(-center.x1, -center.x2))))


def rotation_pi_about(m: Point) -> Isometry:
    """x -> 2m - x."""
    return Isometry(((-1, 0), (0, -1)), Point(2 * m.x1, 2 * m.x2))


def rotation_quarter_about(c: Point, turns: int = 1) -> Isometry:
    rot = IDENTITY
    for _ in range(turns % 4):
        rot = compose(QUARTER_TURN, rot)
    return about(rot, c)


def reflection_across(line: AxisLine) -> Isometry:
    """Reflection across a coordinate line or guide line."""
    c = line.offset
    if line.kind is LineKind.VERTICAL:
        return Isometry(NEGATE_X1.linear, Point(2 * c, 0))
    if line.kind is LineKind.HORIZONTAL:
        return Isometry(NEGATE_X2.linear, Point(0, 2 * c))
    if line.kind is LineKind.SLOPE_PLUS_ONE:
        # x2 = x1 + c: (x1, x2) -> (x2 - c, x1 + c)
        return Isometry(SWAP.linear, Point(-c, c))
    # x2 = -x1 + c: (x1, x2) -> (c - x2, c - x1)
    return Isometry(ANTI_SWAP.linear, Point(c, c))


def normalize_standard(p: Point, q: Point) -> Tuple[Isometry, Point, Point]:
    """Find phi with phi(p) = (0, 0) and phi(q) = (a, b), 0 <= b <= a.

    Translate by -p, then negate x2 if needed, then negate x1 if needed, then
    swap coordinates if the second exceeds the first.
    """
    require_distinct(p, q)
    phi = translation(Point(-p.x1, -p.x2))
    image = apply(phi, q)
    if image.x2 < 0:
        phi = compose(NEGATE_X2, phi)
    image = apply(phi, q)
    if image.x1 < 0:
        phi = compose(NEGATE_X1, phi)
    image = apply(phi, q)
    if image.x2 > image.x1:
        phi = compose(SWAP, phi)
    return phi, apply(phi, p), apply(phi, q)


def apply_polygon(phi: Isometry, poly: SimplePolygon) -> SimplePolygon:
    return SimplePolygon.from_vertices(apply(phi, v) for v in poly.vertices)


def _dir(phi: Isometry, d: Tuple[int, int]) -> Tuple[int, int]:
    v = _matvec(phi.linear, Point(d[0], d[1]))
    return int(v.x1), int(v.x2)


def apply_bolt(phi: Isometry, bolt: LightningBolt) -> LightningBolt:
    a, b = (apply(phi, v) for v in bolt.vertices)
    start = _dir(phi, bolt.start_ray_direction)
    end = _dir(phi, bolt.end_ray_direction)
    bolt_type = 1 if start[0] == 0 else 2
    if a == b:
        return straight_bolt(a, bolt_type)
    slope = 1 if (b.x1 - a.x1) * (b.x2 - a.x2) > 0 else -1
    return LightningBolt(start, (a, b), end, slope, bolt_type)


def apply_barbell(phi: Isometry, bb: Barbell) -> Barbell:
    return barbell(apply(phi, bb.a), apply(phi, bb.b))
