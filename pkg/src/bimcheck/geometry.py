"""Planar geometry on polygons given as (x, y) vertex sequences in millimeters.

All polygons are simple (non-self-intersecting); the model loader rejects
anything else, so these functions can assume it. Boundary points count as
inside: an air terminal sitting exactly on a shared wall belongs to both
rooms.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import GeometryError

Point = tuple[float, float]

# Tolerance for "on the boundary" tests, in mm.
BOUNDARY_EPS = 1e-6


def signed_area(points: Sequence[Point]) -> float:
    """Shoelace signed area; positive for counter-clockwise winding."""
    if len(points) < 3:
        raise GeometryError(f"polygon needs at least 3 vertices, got {len(points)}")
    total = 0.0
    n = len(points)
    for i in range(n):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total / 2.0


def polygon_area_mm2(points: Sequence[Point]) -> float:
    return abs(signed_area(points))


def normalize_ccw(points: Sequence[Point]) -> tuple[Point, ...]:
    pts = tuple((float(x), float(y)) for x, y in points)
    if signed_area(pts) < 0:
        return tuple(reversed(pts))
    return pts


def is_simple_polygon(points: Sequence[Point]) -> bool:
    """True for a non-degenerate polygon whose edges only meet at shared endpoints."""
    n = len(points)
    if n < 3:
        return False
    if polygon_area_mm2(points) <= BOUNDARY_EPS:
        return False
    for i in range(n):
        a1, a2 = points[i], points[(i + 1) % n]
        if math.dist(a1, a2) <= BOUNDARY_EPS:
            return False  # repeated vertex
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue  # adjacent edges share an endpoint by construction
            b1, b2 = points[j], points[(j + 1) % n]
            if segments_intersect(a1, a2, b1, b2):
                return False
    return True


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def point_on_segment(p: Point, a: Point, b: Point, eps: float = BOUNDARY_EPS) -> bool:
    return point_segment_distance(p, a, b) <= eps


def point_segment_distance(p: Point, a: Point, b: Point) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    seg_len2 = dx * dx + dy * dy
    if seg_len2 == 0.0:
        return math.dist(p, a)
    t = ((px - ax) * dx + (py - ay) * dy) / seg_len2
    t = max(0.0, min(1.0, t))
    return math.dist(p, (ax + t * dx, ay + t * dy))


def segments_intersect(a1: Point, a2: Point, b1: Point, b2: Point) -> bool:
    """True if the closed segments share any point (crossing or touching)."""
    d1 = _cross(b1, b2, a1)
    d2 = _cross(b1, b2, a2)
    d3 = _cross(a1, a2, b1)
    d4 = _cross(a1, a2, b2)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    return (
        point_on_segment(a1, b1, b2)
        or point_on_segment(a2, b1, b2)
        or point_on_segment(b1, a1, a2)
        or point_on_segment(b2, a1, a2)
    )


def segment_distance(a1: Point, a2: Point, b1: Point, b2: Point) -> float:
    """Minimum distance between two closed segments (0 if they intersect).

    For non-intersecting planar segments the minimum is always attained at
    an endpoint of one of them.
    """
    if segments_intersect(a1, a2, b1, b2):
        return 0.0
    return min(
        point_segment_distance(a1, b1, b2),
        point_segment_distance(a2, b1, b2),
        point_segment_distance(b1, a1, a2),
        point_segment_distance(b2, a1, a2),
    )


def point_in_polygon(p: Point, polygon: Sequence[Point], include_boundary: bool = True) -> bool:
    """Winding-number containment test; boundary points count as inside."""
    n = len(polygon)
    if n < 3:
        raise GeometryError("polygon needs at least 3 vertices")
    for i in range(n):
        if point_on_segment(p, polygon[i], polygon[(i + 1) % n]):
            return include_boundary
    winding = 0
    px, py = p
    for i in range(n):
        x1, y1 = polygon[i]
        x2, y2 = polygon[(i + 1) % n]
        if y1 <= py:
            if y2 > py and _cross((x1, y1), (x2, y2), p) > 0:
                winding += 1
        elif y2 <= py and _cross((x1, y1), (x2, y2), p) < 0:
            winding -= 1
    return winding != 0


def _edges(polygon: Sequence[Point]):
    n = len(polygon)
    for i in range(n):
        yield polygon[i], polygon[(i + 1) % n]


def polygons_intersect(a: Sequence[Point], b: Sequence[Point]) -> bool:
    """True if the closed regions share any point (touching counts)."""
    for e1a, e1b in _edges(a):
        for e2a, e2b in _edges(b):
            if segments_intersect(e1a, e1b, e2a, e2b):
                return True
    return point_in_polygon(a[0], b) or point_in_polygon(b[0], a)


def polygon_contains_polygon(outer: Sequence[Point], inner: Sequence[Point]) -> bool:
    """True if ``inner`` lies entirely within ``outer`` (boundaries may touch)."""
    for p in inner:
        if not point_in_polygon(p, outer):
            return False
    # Vertices inside is not sufficient for concave outers: an inner edge may
    # still cut across a notch, which shows up as a proper edge crossing.
    for e1a, e1b in _edges(inner):
        for e2a, e2b in _edges(outer):
            d1 = _cross(e2a, e2b, e1a)
            d2 = _cross(e2a, e2b, e1b)
            d3 = _cross(e1a, e1b, e2a)
            d4 = _cross(e1a, e1b, e2b)
            if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
                (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
            ):
                return False
    return True


def polygon_distance_mm(a: Sequence[Point], b: Sequence[Point]) -> float:
    """Minimum boundary-to-boundary distance; 0 when regions touch or overlap."""
    if len(a) < 3 or len(b) < 3:
        raise GeometryError("polygon distance needs two polygons with >= 3 vertices")
    if polygons_intersect(a, b):
        return 0.0
    best = math.inf
    for e1a, e1b in _edges(a):
        for e2a, e2b in _edges(b):
            best = min(best, segment_distance(e1a, e1b, e2a, e2b))
    return best


def bbox_of(points: Sequence[Point]) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def rect_polygon(x1: float, y1: float, x2: float, y2: float) -> tuple[Point, ...]:
    return ((x1, y1), (x2, y1), (x2, y2), (x1, y2))


def centroid(points: Sequence[Point]) -> Point:
    xs = sum(p[0] for p in points)
    ys = sum(p[1] for p in points)
    return xs / len(points), ys / len(points)


def oriented_rect(
    origin: Point, direction: tuple[float, float], depth: float, half_width: float
) -> tuple[Point, ...]:
    """Rectangle extending ``depth`` from ``origin`` along ``direction``,
    spanning ``half_width`` to each side. ``direction`` must be a unit vector."""
    dx, dy = direction
    px, py = -dy, dx  # left-hand perpendicular
    ox, oy = origin
    return (
        (ox + px * half_width, oy + py * half_width),
        (ox - px * half_width, oy - py * half_width),
        (ox - px * half_width + dx * depth, oy - py * half_width + dy * depth),
        (ox + px * half_width + dx * depth, oy + py * half_width + dy * depth),
    )
