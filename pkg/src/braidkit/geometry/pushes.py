"""Piecewise-linear half-twist model built from corridor point-pushes.

A point-push moves a puncture from P to Q inside a convex rational corridor,
acting as the identity on and outside the corridor boundary.  The corridor
is a rhombus around the segment PQ; triangulating it as a cone from P and
re-coning from Q gives an exact PL homeomorphism of the disk.

A generator letter is realised as three pushes: the right puncture of the
pair parks below the axis midpoint, the left puncture slides along the axis
into the freed slot, and the parked puncture comes up into the left slot.
The inverse letter replays the inverse pushes in reverse order, so a letter
followed by its inverse is the pointwise identity.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from ..errors import UnsupportedParameters
from .predicates import Point, cross, lerp, point_in_triangle, pt, segment_params, sub
from .diagrams import ArcDiagram, puncture, _merge_collinear

_SPREAD = Fraction(1, 8)  # corridor extension and half-width factor
_PARK_DEPTH = Fraction(1, 4)


@dataclasses.dataclass(frozen=True)
class PointPush:
    """An exact PL push of the point P to Q supported in a rhombus."""

    P: Point
    Q: Point
    corners: tuple[Point, Point, Point, Point]

    @classmethod
    def along(cls, P: Point, Q: Point) -> "PointPush":
        d = sub(Q, P)
        mid = lerp(P, Q, Fraction(1, 2))
        perp = (-d[1], d[0])
        a = (P[0] - _SPREAD * d[0], P[1] - _SPREAD * d[1])
        b = (mid[0] + _SPREAD * perp[0], mid[1] + _SPREAD * perp[1])
        c = (Q[0] + _SPREAD * d[0], Q[1] + _SPREAD * d[1])
        e = (mid[0] - _SPREAD * perp[0], mid[1] - _SPREAD * perp[1])
        return cls(P, Q, (a, b, c, e))

    def _triangles(self):
        cs = self.corners
        return [(self.P, cs[k], cs[(k + 1) % 4]) for k in range(4)]

    def map_point(self, x: Point) -> Point:
        """Image of a single point (well-defined on cell boundaries)."""
        for (p0, a, b) in self._triangles():
            if point_in_triangle(x, p0, a, b):
                # barycentric weight of the apex P; image is x + w*(Q - P)
                va = sub(a, p0)
                vb = sub(b, p0)
                vx = sub(x, p0)
                denom = va[0] * vb[1] - va[1] * vb[0]
                mu = (vx[0] * vb[1] - vx[1] * vb[0]) / denom
                nu = (va[0] * vx[1] - va[1] * vx[0]) / denom
                w = 1 - mu - nu
                return (x[0] + w * (self.Q[0] - self.P[0]),
                        x[1] + w * (self.Q[1] - self.P[1]))
        return x

    def _cut_edges(self):
        cs = self.corners
        edges = [(cs[k], cs[(k + 1) % 4]) for k in range(4)]
        edges += [(self.P, c) for c in cs]
        return edges

    def map_chain(self, points: tuple[Point, ...]) -> tuple[Point, ...]:
        """Image of a polyline: subdivide on cell boundaries, map vertices."""
        edges = self._cut_edges()
        out: list[Point] = []
        for idx in range(len(points) - 1):
            a, b = points[idx], points[idx + 1]
            params = [Fraction(0), Fraction(1)]
            for (c, d) in edges:
                res = segment_params(a, b, c, d)
                if res is None:
                    continue
                t, u = res
                if 0 < t < 1 and 0 <= u <= 1:
                    params.append(t)
            params = sorted(set(params))
            pieces = [lerp(a, b, t) for t in params]
            mapped = [self.map_point(p) for p in pieces]
            if out:
                mapped = mapped[1:]
            out.extend(mapped)
        return tuple(out)


def _corridor_avoids(push: PointPush, n: int, allowed: set[Point]) -> bool:
    for r in range(1, n + 1):
        q = puncture(r)
        if q in allowed:
            continue
        hits = any(point_in_triangle(q, *tri) for tri in push._triangles())
        if hits:
            return False
    return True


def letter_pushes(n: int, letter: int) -> list[PointPush]:
    """The three point-pushes realising one generator letter."""
    i = abs(letter)
    if not 1 <= i <= n - 1:
        raise UnsupportedParameters(f"letter {letter} out of range for n={n}")
    left = puncture(i)
    right = puncture(i + 1)
    park = (Fraction(2 * i + 1, 2), -_PARK_DEPTH)
    if letter > 0:
        seq = [(right, park), (left, right), (park, left)]
    else:
        seq = [(left, park), (right, left), (park, right)]
    pushes = [PointPush.along(P, Q) for P, Q in seq]
    allowed = {left, right, park}
    for push in pushes:
        assert _corridor_avoids(push, n, allowed), "corridor hits a parked puncture"
    return pushes


def apply_generator(d: ArcDiagram, letter: int, tidy: bool = True) -> ArcDiagram:
    """Image of a diagram under one generator letter."""
    points = d.vertices
    for push in letter_pushes(d.n, letter):
        points = push.map_chain(points)
    points = _merge_collinear(points)
    out = ArcDiagram(d.n, points)
    if tidy:
        from .tighten import resnap_fixed, tidy_diagram

        out = ArcDiagram(d.n, resnap_fixed(out.vertices, d.n))
        out = tidy_diagram(out)
        out = ArcDiagram(d.n, resnap_fixed(out.vertices, d.n))
    return out


def apply_generator_many(
    diagrams: list[ArcDiagram], letter: int, tidy: bool = True
) -> list[ArcDiagram]:
    """Apply the same letter to several diagrams (one shared homeomorphism)."""
    if not diagrams:
        return []
    n = diagrams[0].n
    chains = [d.vertices for d in diagrams]
    for push in letter_pushes(n, letter):
        chains = [push.map_chain(c) for c in chains]
    out = [ArcDiagram(n, _merge_collinear(c)) for c in chains]
    if tidy:
        from .tighten import tidy_diagram

        others = [list(d.segments) for d in out]
        tidied = []
        for k, d in enumerate(out):
            obstacles = [s for m, segs in enumerate(others) if m != k for s in segs]
            tidied.append(tidy_diagram(d, obstacles=obstacles))
            others[k] = list(tidied[-1].segments)
        out = tidied
    return out


def apply_word_chain(d: ArcDiagram, letters: tuple[int, ...]) -> ArcDiagram:
    """Apply a braid word acting functionally (last letter acts first)."""
    for letter in reversed(letters):
        d = apply_generator(d, letter)
    return d


def realize_arc(n: int, beta_letters: tuple[int, ...], index: int) -> ArcDiagram:
    from .diagrams import straight

    return apply_word_chain(straight(index, n), beta_letters)
