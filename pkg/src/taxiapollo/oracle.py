"""Brute-force ground truth on exact rational grids.

The membership side of every check here evaluates the distance-ratio
definition directly and never looks at constructed geometry.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .apollonian import (
    ApollonianShape,
    BarbellRegion,
    Bolt,
    FilledSet,
    Polygon,
    SinglePoint,
    filled,
    in_filled,
)
from .exact_plane import (
    INF,
    ExtRatio,
    GeometryError,
    Point,
    as_ratio,
    as_scalar,
    ratio,
    require_distinct,
    taxi_distance,
)
from .reference_objects import guide_complements

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSpec:
    x1_min: Fraction
    x1_max: Fraction
    x2_min: Fraction
    x2_max: Fraction
    step: Fraction

    def __post_init__(self):
        for name in ("x1_min", "x1_max", "x2_min", "x2_max", "step"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.step <= 0:
            raise ValueError("grid step must be positive")
        if not (self.x1_min < self.x1_max and self.x2_min < self.x2_max):
            raise ValueError("grid bounds must satisfy min < max on both axes")

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Parse ``"x1min,x1max,x2min,x2max,step"``."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 5:
            raise ValueError(f"expected five comma-separated scalars, got {text!r}")
        return cls(*(as_scalar(s) for s in parts))

    def axis(self, lo: Fraction, hi: Fraction) -> List[Fraction]:
        n = int((hi - lo) // self.step)
        return [lo + j * self.step for j in range(n + 1)]

    def points(self) -> Iterator[Point]:
        """Grid points in row-major order (x2 outer, x1 inner)."""
        xs = self.axis(self.x1_min, self.x1_max)
        for y in self.axis(self.x2_min, self.x2_max):
            for x in xs:
                yield Point(x, y)

    def __len__(self) -> int:
        return len(self.axis(self.x1_min, self.x1_max)) * len(self.axis(self.x2_min, self.x2_max))


def default_grid(p: Point, q: Point) -> GridSpec:
    """Box around p, q, g+ and g- padded by 2 d(p,q), step d(p,q)/20."""
    require_distinct(p, q)
    d = taxi_distance(p, q)
    pts = [p, q, *guide_complements(p, q)]
    pad = 2 * d
    return GridSpec(
        min(v.x1 for v in pts) - pad,
        max(v.x1 for v in pts) + pad,
        min(v.x2 for v in pts) - pad,
        max(v.x2 for v in pts) + pad,
        d / 20,
    )


@dataclass
class MismatchReport:
    total_points: int = 0
    mismatches: List[Tuple[Point, bool, bool]] = field(default_factory=list)
    label: str = ""

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self, limit: int = 10) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.label}: {len(self.mismatches)} mismatches / {self.total_points} points"]
        for x, expected, got in self.mismatches[:limit]:
            lines.append(f"  {x} expected={expected} got={got}")
        return "\n".join(lines)

    def rows(self) -> List[Tuple[str, str, str, str]]:
        """Machine-readable rows (x1, x2, expected, got)."""
        return [(str(x.x1), str(x.x2), str(e), str(g)) for x, e, g in self.mismatches]


def verify_filled(
    p: Point,
    q: Point,
    k,
    grid: Optional[GridSpec] = None,
    filled_set: Optional[FilledSet] = None,
) -> MismatchReport:
    """Compare ratio-based membership with membership in the constructed set.

    ``filled_set`` overrides the construction, which lets tests feed in a
    deliberately broken set.
    """
    k = as_ratio(k)
    require_distinct(p, q)
    if k == 1:
        raise GeometryError("the filled set is not defined for k = 1")
    grid = grid or default_grid(p, q)
    fs = filled_set if filled_set is not None else filled(p, q, k)
    report = MismatchReport(label=f"filled p={p} q={q} k={k}")
    for x in grid.points():
        expected = in_filled(x, p, q, k)
        got = fs.contains(x)
        report.total_points += 1
        if expected != got:
            report.mismatches.append((x, expected, got))
    log.debug("verify_filled: %s", report.summary(0))
    return report


def _edge_samples(a: Point, b: Point, n: int) -> Iterator[Point]:
    for j in range(1, n + 1):
        t = Fraction(j, n + 1)
        yield Point(a.x1 + t * (b.x1 - a.x1), a.x2 + t * (b.x2 - a.x2))


def _check_exact(report: MismatchReport, x: Point, p: Point, q: Point, k: ExtRatio) -> None:
    report.total_points += 1
    if ratio(x, p, q) != k:
        report.mismatches.append((x, True, False))


def verify_curve(
    shape: ApollonianShape,
    p: Point,
    q: Point,
    k,
    samples_per_edge: int = 3,
    grid: Optional[GridSpec] = None,
) -> MismatchReport:
    """Check that sampled points of ``shape`` satisfy d(x,p)/d(x,q) = k exactly.

    Barbell regions are checked on a grid instead: membership must agree
    with ratio == 1 at every grid point.
    """
    k = as_ratio(k)
    require_distinct(p, q)
    report = MismatchReport(label=f"curve p={p} q={q} k={k}")
    if isinstance(shape, SinglePoint):
        expected = p if k == 0 else q if k is INF else None
        report.total_points = 1
        if shape.point != expected:
            report.mismatches.append((shape.point, True, False))
        return report
    if isinstance(shape, Polygon):
        for a, b in shape.polygon.edges():
            _check_exact(report, a, p, q, k)
            for x in _edge_samples(a, b, samples_per_edge):
                _check_exact(report, x, p, q, k)
        return report
    if isinstance(shape, Bolt):
        bolt = shape.bolt
        a, b = bolt.vertices
        _check_exact(report, a, p, q, k)
        if a != b:
            _check_exact(report, b, p, q, k)
            for x in _edge_samples(a, b, samples_per_edge):
                _check_exact(report, x, p, q, k)
        for origin, d in ((a, bolt.start_ray_direction), (b, bolt.end_ray_direction)):
            for length in (1, 2, 4):
                _check_exact(report, Point(origin.x1 + length * d[0], origin.x2 + length * d[1]), p, q, k)
        return report
    if isinstance(shape, BarbellRegion):
        grid = grid or default_grid(p, q)
        for x in grid.points():
            expected = ratio(x, p, q) == k
            got = shape.barbell.contains(x)
            report.total_points += 1
            if expected != got:
                report.mismatches.append((x, expected, got))
        return report
    raise TypeError(f"unknown shape {shape!r}")


def classify_grid(p: Point, q: Point, grid: Optional[GridSpec] = None) -> List[Tuple[Point, ExtRatio]]:
    """Exact ratio d(x,p)/d(x,q) at every grid point, in grid order."""
    require_distinct(p, q)
    grid = grid or default_grid(p, q)
    return [(x, ratio(x, p, q)) for x in grid.points()]
