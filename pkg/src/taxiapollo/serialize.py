"""JSON documents for shapes with rationals stored as [numerator, denominator]."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, Optional

from .apollonian import (
    ApollonianShape,
    BarbellRegion,
    Bolt,
    FilledSet,
    Polygon,
    QuadUnion,
    SinglePoint,
)
from .exact_plane import INF, ExtRatio, Point, SimplePolygon
from .reference_objects import LightningBolt, barbell


def encode_scalar(v: Fraction):
    return [v.numerator, v.denominator]


def decode_scalar(v) -> Fraction:
    num, den = v
    return Fraction(int(num), int(den))


def encode_point(x: Point):
    return [encode_scalar(x.x1), encode_scalar(x.x2)]


def decode_point(v) -> Point:
    return Point(decode_scalar(v[0]), decode_scalar(v[1]))


def encode_ratio(k: ExtRatio):
    return "inf" if k is INF else encode_scalar(k)


def decode_ratio(v) -> ExtRatio:
    return INF if v == "inf" else decode_scalar(v)


def shape_document(
    shape: ApollonianShape,
    p: Point,
    q: Point,
    k: ExtRatio,
    filled_set: Optional[FilledSet] = None,
) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "p": encode_point(p),
        "q": encode_point(q),
        "k": encode_ratio(k),
        "vertices": [],
        "rays": [],
        "quads": [],
    }
    if isinstance(shape, SinglePoint):
        doc["kind"] = "point"
        doc["vertices"] = [encode_point(shape.point)]
    elif isinstance(shape, Polygon):
        doc["kind"] = "polygon"
        doc["vertices"] = [encode_point(v) for v in shape.polygon.vertices]
    elif isinstance(shape, Bolt):
        bolt = shape.bolt
        doc["kind"] = "bolt"
        doc["vertices"] = [encode_point(v) for v in bolt.vertices]
        doc["rays"] = [
            {"origin": encode_point(bolt.vertices[0]), "direction": list(bolt.start_ray_direction)},
            {"origin": encode_point(bolt.vertices[1]), "direction": list(bolt.end_ray_direction)},
        ]
        doc["bolt_type"] = bolt.bolt_type
        doc["slope"] = bolt.slope
    elif isinstance(shape, BarbellRegion):
        bb = shape.barbell
        doc["kind"] = "barbell"
        doc["vertices"] = [encode_point(bb.a), encode_point(bb.b)]
        doc["quadrants"] = [
            {"apex": encode_point(quad.apex), "signs": [quad.s1, quad.s2]}
            for quad in (bb.quadrant_a, bb.quadrant_b)
        ]
    else:
        raise TypeError(f"unknown shape {shape!r}")
    if filled_set is not None and isinstance(filled_set.body, QuadUnion):
        doc["quads"] = [[encode_point(v) for v in quad.vertices] for quad in filled_set.body.quads]
    return doc


def shape_from_document(doc: Dict[str, Any]) -> ApollonianShape:
    kind = doc["kind"]
    vertices = [decode_point(v) for v in doc["vertices"]]
    if kind == "point":
        return SinglePoint(vertices[0])
    if kind == "polygon":
        return Polygon(SimplePolygon.from_vertices(vertices))
    if kind == "bolt":
        start, end = (tuple(r["direction"]) for r in doc["rays"])
        return Bolt(LightningBolt(start, (vertices[0], vertices[1]), end, doc["slope"], doc["bolt_type"]))
    if kind == "barbell":
        return BarbellRegion(barbell(vertices[0], vertices[1]))
    raise ValueError(f"unknown shape kind {kind!r}")


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
