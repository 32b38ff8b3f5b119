"""Exact rational points, the taxicab metric and distance ratios.

Every coordinate is a :class:`fractions.Fraction`; nothing in the kernel
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

Scalar = Fraction


class GeometryError(ValueError):
    """Raised when a construction is asked for outside its domain."""


class DegenerateFociError(GeometryError):
    """Raised when the two foci coincide."""


def as_scalar(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ints, Fractions and "a/b" strings to an exact Fraction.

    Floats are rejected so that inexact values cannot leak into the kernel.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean scalar {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"-3"``, ``"7/2"`` or ``"+1/4"``; decimals are not accepted."""
    s = text.strip()
    body = s[1:] if s[:1] in "+-" else s
    num, sep, den = body.partition("/")
    if not num.isdigit() or (sep and not den.isdigit()):
        raise ValueError(f"malformed scalar {text!r}")
    if sep and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(s)


@dataclass(frozen=True, order=True)
class Point:
    x1: Fraction
    x2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x1", as_scalar(self.x1))
        object.__setattr__(self, "x2", as_scalar(self.x2))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x1 - other.x1, self.x2 - other.x2)

    def scale(self, c: Fraction) -> "Point":
        return Point(self.x1 * c, self.x2 * c)

    def __iter__(self):
        yield self.x1
        yield self.x2

    def __str__(self) -> str:
        return f"({self.x1},{self.x2})"


def pt(x1, x2) -> Point:
    """Shorthand constructor accepting ints, Fractions or strings."""
    return Point(as_scalar(x1), as_scalar(x2))


def parse_point(text: str) -> Point:
    """Parse ``"x1,x2"`` where each coordinate uses :func:`parse_scalar` syntax."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x1,x2', got {text!r}")
    return Point(parse_scalar(parts[0]), parse_scalar(parts[1]))


class _Infinity:
    """The point at infinity of the extended ratio range [0, inf]."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("taxiapollo.INF")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

ExtRatio = Union[Fraction, _Infinity]


def as_ratio(value) -> ExtRatio:
    """Coerce to an extended ratio, accepting ``"inf"`` and nonnegative scalars."""
    if value is INF:
        return INF
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    k = as_scalar(value)
    if k < 0:
        raise ValueError(f"ratio must be nonnegative, got {k}")
    return k


def parse_ratio(text: str) -> ExtRatio:
    return as_ratio(text)


def reciprocal(k: ExtRatio) -> ExtRatio:
    """1/k with 1/0 = inf and 1/inf = 0."""
    k = as_ratio(k)
    if k is INF:
        return Fraction(0)
    if k == 0:
        return INF
    return 1 / k


def taxi_distance(a: Point, b: Point) -> Fraction:
    return abs(a.x1 - b.x1) + abs(a.x2 - b.x2)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x1 + q.x1) / 2, (p.x2 + q.x2) / 2)


def require_distinct(p: Point, q: Point) -> None:
    if p == q:
        raise DegenerateFociError(f"degenerate foci: p = q = {p}")


def ratio(x: Point, p: Point, q: Point) -> ExtRatio:
    """Return d(x, p) / d(x, q), which is INF exactly when x = q."""
    require_distinct(p, q)
    dq = taxi_distance(x, q)
    if dq == 0:
        return INF
    return taxi_distance(x, p) / dq


def taxi_circle(center: Point, r) -> "SimplePolygon":
    """The taxicab circle of radius ``r``: a diamond with four vertices."""
    r = as_scalar(r)
    if r <= 0:
        raise GeometryError(f"radius must be positive, got {r}")
    c1, c2 = center.x1, center.x2
    return SimplePolygon.from_vertices(
        [Point(c1 + r, c2), Point(c1, c2 + r), Point(c1 - r, c2), Point(c1, c2 - r)]
    )


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Twice the signed area of triangle oab; positive for a left turn."""
    return (a.x1 - o.x1) * (b.x2 - o.x2) - (a.x2 - o.x2) * (b.x1 - o.x1)


@dataclass(frozen=True)
class SimplePolygon:
    """Closed simple polygon in canonical form.

    Vertices run counterclockwise, start at the lexicographically smallest
    vertex and contain no three consecutive collinear points. Build instances
    through :meth:`from_vertices`, which enforces all of that.
    """

    vertices: Tuple[Point, ...]

    @classmethod
    def from_vertices(cls, vertices: Iterable[Point]) -> "SimplePolygon":
        return cls(canonical_vertices(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def signed_area2(self) -> Fraction:
        return _signed_area2(self.vertices)

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.vertices) + "]"


def _signed_area2(vs) -> Fraction:
    n = len(vs)
    return sum(
        (vs[i].x1 * vs[(i + 1) % n].x2 - vs[(i + 1) % n].x1 * vs[i].x2 for i in range(n)),
        Fraction(0),
    )


def canonical_vertices(vertices: Iterable[Point]) -> Tuple[Point, ...]:
    vs = []
    for v in vertices:
        if not vs or vs[-1] != v:
            vs.append(v)
    while len(vs) > 1 and vs[0] == vs[-1]:
        vs.pop()
    # drop collinear middles until stable; also removes zero-length spikes
    changed = True
    while changed and len(vs) >= 3:
        changed = False
        for i in range(len(vs)):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % len(vs)]
            if cross(a, b, c) == 0:
                del vs[i]
                changed = True
                break
    if len(vs) < 3:
        raise GeometryError("polygon degenerates to fewer than three vertices")
    if _signed_area2(vs) < 0:
        vs.reverse()
    start = vs.index(min(vs))
    return tuple(vs[start:] + vs[:start])
