"""Scene assembly and output: deterministic SVG and matplotlib figures.

Shapes are first reduced to exact primitives clipped to the viewport; only
the final drawing step converts coordinates to floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .apollonian import (
    ApollonianShape,
    BarbellRegion,
    Bolt,
    Polygon,
    SinglePoint,
    apollonian_set,
)
from .exact_plane import ExtRatio, Point, as_scalar, require_distinct
from .oracle import default_grid
from .reference_objects import Quadrant, coordinate_lines, guide_lines, LineKind

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22",
)

# the k values drawn in the family figures
FAMILY_K = ("0", "1/4", "1/2", "2/3", "1", "3/2", "2", "4", "inf")


@dataclass(frozen=True)
class Viewport:
    x1_min: Fraction
    x1_max: Fraction
    x2_min: Fraction
    x2_max: Fraction

    def __post_init__(self):
        for name in ("x1_min", "x1_max", "x2_min", "x2_max"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if not (self.x1_min < self.x1_max and self.x2_min < self.x2_max):
            raise ValueError("viewport must satisfy min < max on both axes")

    def contains(self, x: Point) -> bool:
        return self.x1_min <= x.x1 <= self.x1_max and self.x2_min <= x.x2 <= self.x2_max


@dataclass
class SceneSpec:
    p: Point
    q: Point
    k_values: Sequence[ExtRatio]
    viewport: Viewport
    stroke_width: float = 2.0
    show_refs: bool = False

    def __post_init__(self):
        require_distinct(self.p, self.q)
        if not self.k_values:
            raise ValueError("a scene needs at least one k value")


def default_viewport(p: Point, q: Point) -> Viewport:
    g = default_grid(p, q)
    return Viewport(g.x1_min, g.x1_max, g.x2_min, g.x2_max)


@dataclass
class Primitive:
    kind: str  # "polygon", "polyline", "dot"
    points: List[Point]
    color: str
    width: float = 2.0
    fill_opacity: float = 0.0
    dash: Optional[str] = None
    label: str = ""


def clip_parametric(
    origin: Point,
    d: Tuple[Fraction, Fraction],
    t_lo: Optional[Fraction],
    t_hi: Optional[Fraction],
    vp: Viewport,
) -> Optional[Tuple[Point, Point]]:
    """Clip {origin + t d : t_lo <= t <= t_hi} to the viewport; None bounds are infinite."""
    for o, dk, lo, hi in (
        (origin.x1, d[0], vp.x1_min, vp.x1_max),
        (origin.x2, d[1], vp.x2_min, vp.x2_max),
    ):
        if dk == 0:
            if not lo <= o <= hi:
                return None
            continue
        a, b = (lo - o) / dk, (hi - o) / dk
        if a > b:
            a, b = b, a
        t_lo = a if t_lo is None else max(t_lo, a)
        t_hi = b if t_hi is None else min(t_hi, b)
    if t_lo is None or t_hi is None or t_lo > t_hi:
        return None

    def at(t):
        return Point(origin.x1 + t * d[0], origin.x2 + t * d[1])

    return at(t_lo), at(t_hi)


def _clip_quadrant(quad: Quadrant, vp: Viewport) -> Optional[List[Point]]:
    """Quadrant n viewport, which is an axis-aligned rectangle."""
    a = quad.apex
    x_lo, x_hi = (a.x1, vp.x1_max) if quad.s1 > 0 else (vp.x1_min, a.x1)
    y_lo, y_hi = (a.x2, vp.x2_max) if quad.s2 > 0 else (vp.x2_min, a.x2)
    x_lo, x_hi = max(x_lo, vp.x1_min), min(x_hi, vp.x1_max)
    y_lo, y_hi = max(y_lo, vp.x2_min), min(y_hi, vp.x2_max)
    if x_lo >= x_hi or y_lo >= y_hi:
        return None
    return [Point(x_lo, y_lo), Point(x_hi, y_lo), Point(x_hi, y_hi), Point(x_lo, y_hi)]


_LINE_DIRS = {
    LineKind.VERTICAL: (Fraction(0), Fraction(1)),
    LineKind.HORIZONTAL: (Fraction(1), Fraction(0)),
    LineKind.SLOPE_PLUS_ONE: (Fraction(1), Fraction(1)),
    LineKind.SLOPE_MINUS_ONE: (Fraction(1), Fraction(-1)),
}


def _line_through(kind: LineKind, x: Point, vp: Viewport):
    return clip_parametric(x, _LINE_DIRS[kind], None, None, vp)


def shape_primitives(shape: ApollonianShape, vp: Viewport, color: str, width: float, label: str) -> List[Primitive]:
    out: List[Primitive] = []
    if isinstance(shape, SinglePoint):
        if vp.contains(shape.point):
            out.append(Primitive("dot", [shape.point], color, width, label=label))
    elif isinstance(shape, Polygon):
        out.append(Primitive("polygon", list(shape.polygon.vertices), color, width, label=label))
    elif isinstance(shape, Bolt):
        bolt = shape.bolt
        a, b = bolt.vertices
        chain: List[Point] = []
        first = clip_parametric(a, bolt.start_ray_direction, Fraction(0), None, vp)
        if first is not None:
            chain.extend([first[1], first[0]])
        if a != b:
            chain.extend([a, b])
        last = clip_parametric(b, bolt.end_ray_direction, Fraction(0), None, vp)
        if last is not None:
            chain.extend([last[0], last[1]])
        dedup = [v for i, v in enumerate(chain) if i == 0 or chain[i - 1] != v]
        if len(dedup) >= 2:
            out.append(Primitive("polyline", dedup, color, width, label=label))
    elif isinstance(shape, BarbellRegion):
        bb = shape.barbell
        for quad in (bb.quadrant_a, bb.quadrant_b):
            rect = _clip_quadrant(quad, vp)
            if rect is not None:
                out.append(Primitive("polygon", rect, color, 0.0, fill_opacity=0.2, label=label))
        seg = _line_through(bb.gl.kind, bb.a, vp)
        if seg is not None:
            out.append(Primitive("polyline", list(seg), color, width, label=label))
    else:
        raise TypeError(f"unknown shape {shape!r}")
    return out


def reference_primitives(p: Point, q: Point, vp: Viewport) -> List[Primitive]:
    out: List[Primitive] = []
    for focus in (p, q):
        for line in coordinate_lines(focus):
            seg = _line_through(line.kind, focus, vp)
            if seg is not None:
                out.append(Primitive("polyline", list(seg), "#999999", 0.75, dash="6 4"))
        for line in guide_lines(focus):
            seg = _line_through(line.kind, focus, vp)
            if seg is not None:
                out.append(Primitive("polyline", list(seg), "#999999", 0.75, dash="1 3"))
    return out


def scene_primitives(scene: SceneSpec) -> List[Primitive]:
    vp = scene.viewport
    prims: List[Primitive] = []
    if scene.show_refs:
        prims.extend(reference_primitives(scene.p, scene.q, vp))
    for i, k in enumerate(scene.k_values):
        shape = apollonian_set(scene.p, scene.q, k)
        color = PALETTE[i % len(PALETTE)]
        prims.extend(shape_primitives(shape, vp, color, scene.stroke_width, f"k={k}"))
    for focus in (scene.p, scene.q):
        if vp.contains(focus):
            prims.append(Primitive("dot", [focus], "#000000", scene.stroke_width))
    return prims


def render_svg(scene: SceneSpec, width_px: int = 600) -> str:
    """SVG text; byte-identical for identical scenes."""
    vp = scene.viewport
    scale = Fraction(width_px) / (vp.x1_max - vp.x1_min)
    height_px = (vp.x2_max - vp.x2_min) * scale

    def fmt(v: Fraction) -> str:
        return f"{float(v):.6f}"

    def xy(x: Point) -> str:
        return f"{fmt((x.x1 - vp.x1_min) * scale)},{fmt((vp.x2_max - x.x2) * scale)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(Fraction(width_px))}" '
        f'height="{fmt(height_px)}" viewBox="0 0 {fmt(Fraction(width_px))} {fmt(height_px)}">',
        f'<rect x="0" y="0" width="{fmt(Fraction(width_px))}" height="{fmt(height_px)}" fill="#ffffff"/>',
    ]
    for prim in scene_primitives(scene):
        title = f"<title>{prim.label}</title>" if prim.label else ""
        dash = f' stroke-dasharray="{prim.dash}"' if prim.dash else ""
        if prim.kind == "dot":
            x = prim.points[0]
            cx, cy = xy(x).split(",")
            lines.append(f'<circle cx="{cx}" cy="{cy}" r="{prim.width * 1.75:.6f}" fill="{prim.color}">{title}</circle>')
        elif prim.kind == "polygon":
            pts = " ".join(xy(v) for v in prim.points)
            fill = f'fill="{prim.color}" fill-opacity="{prim.fill_opacity:.6f}"' if prim.fill_opacity else 'fill="none"'
            stroke = f'stroke="{prim.color}" stroke-width="{prim.width:.6f}"' if prim.width else 'stroke="none"'
            lines.append(f'<polygon points="{pts}" {fill} {stroke}{dash}>{title}</polygon>')
        else:
            pts = " ".join(xy(v) for v in prim.points)
            lines.append(
                f'<polyline points="{pts}" fill="none" stroke="{prim.color}" '
                f'stroke-width="{prim.width:.6f}"{dash}>{title}</polyline>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _mpl():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _draw_primitives(ax, prims: List[Primitive]) -> None:
    from matplotlib.patches import Polygon as MplPolygon

    for prim in prims:
        xs = [float(v.x1) for v in prim.points]
        ys = [float(v.x2) for v in prim.points]
        ls = "--" if prim.dash and prim.dash.startswith("6") else ":" if prim.dash else "-"
        if prim.kind == "dot":
            ax.plot(xs, ys, "o", color=prim.color, ms=3 * prim.width)
        elif prim.kind == "polygon":
            patch = MplPolygon(
                list(zip(xs, ys)),
                closed=True,
                facecolor=prim.color if prim.fill_opacity else "none",
                alpha=prim.fill_opacity or None,
                edgecolor=prim.color if prim.width else "none",
                linewidth=prim.width,
                linestyle=ls,
            )
            ax.add_patch(patch)
        else:
            ax.plot(xs, ys, ls, color=prim.color, lw=prim.width)


def render_png(scene: SceneSpec, path: str) -> None:
    plt = _mpl()
    vp = scene.viewport
    fig, ax = plt.subplots(figsize=(6, 6))
    _draw_primitives(ax, scene_primitives(scene))
    ax.set_xlim(float(vp.x1_min), float(vp.x1_max))
    ax.set_ylim(float(vp.x2_min), float(vp.x2_max))
    ax.set_aspect("equal")
    ax.set_xlabel("x1")
    ax.set_ylabel("x2")
    ax.set_title(f"A(p, q; k), p={scene.p}, q={scene.q}")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def render_ratio_map(samples, p: Point, q: Point, path: str) -> None:
    """Scatter of grid points colored by log2 of the distance ratio."""
    import math

    plt = _mpl()
    xs, ys, cs = [], [], []
    for x, r in samples:
        xs.append(float(x.x1))
        ys.append(float(x.x2))
        if r == 0:
            cs.append(-8.0)
        elif isinstance(r, Fraction):
            cs.append(max(-8.0, min(8.0, math.log2(r))))
        else:
            cs.append(8.0)
    fig, ax = plt.subplots(figsize=(6, 6))
    sc = ax.scatter(xs, ys, c=cs, s=4, cmap="coolwarm", vmin=-4, vmax=4)
    ax.plot([float(p.x1), float(q.x1)], [float(p.x2), float(q.x2)], "ko", ms=4)
    fig.colorbar(sc, ax=ax, label="log2 d(x,p)/d(x,q)")
    ax.set_aspect("equal")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)


def render_mismatch_map(report, shape: ApollonianShape, vp: Viewport, path: str) -> None:
    plt = _mpl()
    fig, ax = plt.subplots(figsize=(6, 6))
    _draw_primitives(ax, shape_primitives(shape, vp, PALETTE[0], 1.5, ""))
    if report.mismatches:
        ax.plot(
            [float(x.x1) for x, _, _ in report.mismatches],
            [float(x.x2) for x, _, _ in report.mismatches],
            "x", color="#d62728", ms=4, label="mismatch",
        )
        ax.legend()
    ax.set_xlim(float(vp.x1_min), float(vp.x1_max))
    ax.set_ylim(float(vp.x2_min), float(vp.x2_max))
    ax.set_aspect("equal")
    ax.set_title(f"{report.label}: {len(report.mismatches)} mismatches")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
