"""Exact Apollonian sets in the taxicab plane."""

from .exact_plane import (
    INF,
    DegenerateFociError,
    GeometryError,
    Point,
    SimplePolygon,
    midpoint,
    parse_point,
    parse_ratio,
    parse_scalar,
    pt,
    ratio,
    taxi_circle,
    taxi_distance,
)
from .apollonian import apollonian_set, boundary_of_union, filled, in_filled, trapezoid

__all__ = [
    "INF",
    "DegenerateFociError",
    "GeometryError",
    "Point",
    "SimplePolygon",
    "apollonian_set",
    "boundary_of_union",
    "filled",
    "in_filled",
    "midpoint",
    "parse_point",
    "parse_ratio",
    "parse_scalar",
    "pt",
    "ratio",
    "taxi_circle",
    "taxi_distance",
    "trapezoid",
]
