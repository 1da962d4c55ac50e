"""Exact planar predicates over rational coordinates.

Points are pairs of Fractions.  Everything here is branch-exact: no floats,
no tolerances.  Distances are always handled as squared distances so that
comparisons stay rational.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Point = tuple[Fraction, Fraction]


def pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def scale(a: Point, s) -> Point:
    s = Fraction(s)
    return (a[0] * s, a[1] * s)


def lerp(a: Point, b: Point, t: Fraction) -> Point:
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Twice the signed area of the triangle (o, a, b)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def dot(a: Point, b: Point) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def norm2(a: Point) -> Fraction:
    return a[0] * a[0] + a[1] * a[1]


def dist2(a: Point, b: Point) -> Fraction:
    return norm2(sub(a, b))


def collinear(a: Point, b: Point, c: Point) -> bool:
    return cross(a, b, c) == 0


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment [a, b]."""
    if cross(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segment_params(a: Point, b: Point, c: Point, d: Point):
    """Intersection parameters of lines ab and cd.

    Returns (t, u) with a + t(b-a) = c + u(d-c), or None when parallel.
    """
    r = sub(b, a)
    s = sub(d, c)
    denom = r[0] * s[1] - r[1] * s[0]
    if denom == 0:
        return None
    qp = sub(c, a)
    t = (qp[0] * s[1] - qp[1] * s[0]) / denom
    u = (qp[0] * r[1] - qp[1] * r[0]) / denom
    return (t, u)


def boxes_disjoint(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Bounding boxes of the two segments do not meet (cheap rejection)."""
    if (a[0] if a[0] < b[0] else b[0]) > (c[0] if c[0] > d[0] else d[0]):
        return True
    if (c[0] if c[0] < d[0] else d[0]) > (a[0] if a[0] > b[0] else b[0]):
        return True
    if (a[1] if a[1] < b[1] else b[1]) > (c[1] if c[1] > d[1] else d[1]):
        return True
    if (c[1] if c[1] < d[1] else d[1]) > (a[1] if a[1] > b[1] else b[1]):
        return True
    return False


def segments_cross(a: Point, b: Point, c: Point, d: Point):
    """Proper interior crossing of two segments.

    Returns (t, u, point) with both parameters strictly inside (0, 1), or
    None.  Touching at endpoints or collinear overlap does not count.
    """
    if boxes_disjoint(a, b, c, d):
        return None
    res = segment_params(a, b, c, d)
    if res is None:
        return None
    t, u = res
    if 0 < t < 1 and 0 < u < 1:
        return (t, u, lerp(a, b, t))
    return None


def segments_cross_bool(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Strict interior crossing, decided without divisions."""
    if boxes_disjoint(a, b, c, d):
        return False
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    return (
        d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0
        and (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0)
    )


def segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Any common point of the two closed segments (exact)."""
    if boxes_disjoint(a, b, c, d):
        return False
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != d2 and d3 != d4:
        return True
    if d1 == 0 and on_segment(a, c, d):
        return True
    if d2 == 0 and on_segment(b, c, d):
        return True
    if d3 == 0 and on_segment(c, a, b):
        return True
    if d4 == 0 and on_segment(d, a, b):
        return True
    return False


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> int:
    """2 strictly inside, 1 on the boundary, 0 outside."""
    d1 = cross(a, b, p)
    d2 = cross(b, c, p)
    d3 = cross(c, a, p)
    if (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0):
        return 2
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    if has_pos and has_neg:
        return 0
    # Some orientation vanished: on a side line; confirm within the hull.
    if on_segment(p, a, b) or on_segment(p, b, c) or on_segment(p, c, a):
        return 1
    return 0


def point_in_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Even-odd test; the point must not lie on the boundary."""
    inside = False
    m = len(poly)
    for i in range(m):
        a = poly[i]
        b = poly[(i + 1) % m]
        if (a[1] > p[1]) != (b[1] > p[1]):
            # x-coordinate of the edge at height p.y
            t = (p[1] - a[1]) / (b[1] - a[1])
            x = a[0] + (b[0] - a[0]) * t
            if x > p[0]:
                inside = not inside
    return inside


def point_on_polyline(p: Point, chain: Sequence[Point]) -> bool:
    return any(on_segment(p, chain[i], chain[i + 1]) for i in range(len(chain) - 1))


def polygon_area2(poly: Sequence[Point]) -> Fraction:
    """Twice the absolute area (shoelace)."""
    total = Fraction(0)
    m = len(poly)
    for i in range(m):
        a = poly[i]
        b = poly[(i + 1) % m]
        total += a[0] * b[1] - b[0] * a[1]
    return abs(total)


def dist2_point_segment(p: Point, a: Point, b: Point) -> Fraction:
    ab = sub(b, a)
    denom = norm2(ab)
    if denom == 0:
        return dist2(p, a)
    t = dot(sub(p, a), ab) / denom
    if t <= 0:
        return dist2(p, a)
    if t >= 1:
        return dist2(p, b)
    return dist2(p, lerp(a, b, t))


def dist2_segments(a: Point, b: Point, c: Point, d: Point) -> Fraction:
    if segments_touch(a, b, c, d):
        return Fraction(0)
    return min(
        dist2_point_segment(a, c, d),
        dist2_point_segment(b, c, d),
        dist2_point_segment(c, a, b),
        dist2_point_segment(d, a, b),
    )


def rational_below_sqrt(d2: Fraction) -> Fraction:
    """A positive rational e with e*e < d2 (d2 > 0), within a factor of 2."""
    if d2 <= 0:
        raise ValueError("need a positive squared distance")
    e = Fraction(1)
    while e * e >= d2:
        e /= 2
    while (2 * e) * (2 * e) < d2:
        e *= 2
    return e
