"""Embedded arc diagrams with exact rational coordinates.

The disk model: punctures sit at (1,0) .. (n,0) inside the round disk of
radius n+1 centered at ((n+1)/2, 0).  An arc diagram is a simple polyline
whose first and last vertices are distinct punctures and whose interior
stays clear of every puncture.

The canonical code of a diagram is the freely reduced sequence of signed
crossings with the vertical rays hanging below the punctures other than the
arc's own endpoints (crossing the ray below puncture r left-to-right emits
+r, right-to-left emits -r).  Two diagrams are isotopic inside the punctured
disk exactly when their codes agree; the half-twist cross-validation suite
exercises this equivalence heavily.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import BudgetExceeded, UnsupportedParameters
from .predicates import (
    Point,
    collinear,
    cross,
    dist2,
    on_segment,
    pt,
    segments_touch,
)

MAX_SEGMENTS = 100_000


def puncture(r: int) -> Point:
    return pt(r, 0)


def punctures(n: int) -> list[Point]:
    return [puncture(r) for r in range(1, n + 1)]


def disk_center(n: int) -> Point:
    return (Fraction(n + 1, 2), Fraction(0))


def disk_radius(n: int) -> Fraction:
    return Fraction(n + 1)


def inside_disk(n: int, p: Point) -> bool:
    c = disk_center(n)
    return dist2(p, c) < disk_radius(n) ** 2


def _dedupe(points: Iterable[Point]) -> tuple[Point, ...]:
    out: list[Point] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    return tuple(out)


def _merge_collinear(points: Sequence[Point]) -> tuple[Point, ...]:
    """Drop interior vertices lying between their neighbours on a line."""
    pts = list(points)
    changed = True
    while changed:
        changed = False
        i = 1
        while i < len(pts) - 1:
            a, b, c = pts[i - 1], pts[i], pts[i + 1]
            if collinear(a, b, c) and on_segment(b, a, c):
                del pts[i]
                changed = True
            else:
                i += 1
    return tuple(pts)


@dataclasses.dataclass(frozen=True)
class ArcDiagram:
    """A simple polyline joining two punctures, all coordinates rational."""

    n: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = _dedupe(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise UnsupportedParameters("an arc diagram needs at least two vertices")
        if len(verts) - 1 > MAX_SEGMENTS:
            raise BudgetExceeded(f"diagram exceeds {MAX_SEGMENTS} segments")
        for q in (verts[0], verts[-1]):
            if not (q[1] == 0 and q[0].denominator == 1 and 1 <= q[0] <= self.n):
                raise UnsupportedParameters(f"endpoint {q} is not a puncture")
        if verts[0] == verts[-1]:
            raise UnsupportedParameters("endpoints must be distinct punctures")

    @property
    def segments(self) -> list[tuple[Point, Point]]:
        return [
            (self.vertices[i], self.vertices[i + 1])
            for i in range(len(self.vertices) - 1)
        ]

    def endpoints(self) -> tuple[int, int]:
        return (int(self.vertices[0][0]), int(self.vertices[-1][0]))

    def reversed(self) -> "ArcDiagram":
        return ArcDiagram(self.n, tuple(reversed(self.vertices)))

    def check(self) -> None:
        """Full validity: simple, puncture-avoiding interior, inside the disk."""
        verts = self.vertices
        for v in verts:
            if not inside_disk(self.n, v):
                raise UnsupportedParameters(f"vertex {v} outside the disk")
        ends = {verts[0], verts[-1]}
        for a, b in self.segments:
            for r in range(1, self.n + 1):
                q = puncture(r)
                if q in (a, b):
                    if q not in ends:
                        raise UnsupportedParameters(f"interior vertex at puncture {r}")
                    continue
                if on_segment(q, a, b):
                    raise UnsupportedParameters(f"arc passes through puncture {r}")
        segs = self.segments
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                a, b = segs[i]
                c, d = segs[j]
                if j == i + 1:
                    # consecutive segments may share exactly the joint vertex
                    if on_segment(c, a, b) and c != b:
                        raise UnsupportedParameters("polyline not simple (fold)")
                    if on_segment(b, c, d) and b != c:
                        raise UnsupportedParameters("polyline not simple (fold)")
                    if on_segment(a, c, d) or on_segment(d, a, b):
                        raise UnsupportedParameters("polyline not simple (overlap)")
                    continue
                if segments_touch(a, b, c, d):
                    raise UnsupportedParameters(
                        f"polyline not simple (segments {i} and {j} touch)"
                    )


def straight(i: int, n: int) -> ArcDiagram:
    """The linear arc between neighbouring punctures i and i+1."""
    if not 1 <= i <= n - 1:
        raise UnsupportedParameters(f"straight arc index {i} out of range for n={n}")
    return ArcDiagram(n, (puncture(i), puncture(i + 1)))


def int_chain(points: Sequence[Point]) -> tuple[list[tuple[int, int]], int]:
    """Scale rational points to integers by the lcm of their denominators.

    Sign-based predicates run verbatim (and much faster) on the result.
    """
    import math

    scale = 1
    for x, y in points:
        scale = math.lcm(scale, x.denominator, y.denominator)
    return [(int(x * scale), int(y * scale)) for x, y in points], scale


def _ray_crossings(d: ArcDiagram) -> list[int]:
    """Signed crossings with the rays below all punctures, in order.

    A point with x == r counts as lying to the right of the ray, which makes
    vertices sitting exactly on a ray unambiguous.  The departure from the
    first puncture and the arrival at the last one are not crossings.
    """
    pts, scale = int_chain(d.vertices)
    letters: list[int] = []
    for k in range(len(pts) - 1):
        (ax, ay), (bx, by) = pts[k], pts[k + 1]
        if ax == bx:
            continue
        dx = bx - ax
        for r in range(1, d.n + 1):
            rx = r * scale
            side_a = ax >= rx
            side_b = bx >= rx
            if side_a == side_b:
                continue
            # sign of the crossing height: y* = ay + (by-ay)(rx-ax)/dx
            ynum = ay * dx + (by - ay) * (rx - ax)
            if ynum == 0:
                if (rx, 0) in (pts[0], pts[-1]) and (
                    (k == 0 and (ax, ay) == pts[0])
                    or (k == len(pts) - 2 and (bx, by) == pts[-1])
                ):
                    continue  # leaving or entering an endpoint puncture
                raise UnsupportedParameters(f"arc passes through puncture {r}")
            if (ynum > 0) != (dx > 0):  # y* < 0
                letters.append(r if side_b else -r)
    return letters


def _strip_ends(word: tuple[int, ...], p: int, q: int) -> tuple[int, ...]:
    """Quotient by winding at the two endpoints: leading crossings under the
    start puncture and trailing crossings under the end puncture retract
    around the respective arc ends."""
    lo, hi = 0, len(word)
    while lo < hi and abs(word[lo]) == p:
        lo += 1
    while hi > lo and abs(word[hi - 1]) == q:
        hi -= 1
    return word[lo:hi]


def _reduce(letters: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def code(d: ArcDiagram) -> tuple:
    """Canonical isotopy code: endpoints plus the reduced and end-stripped
    ray word, minimised over the two traversal directions."""
    word = _reduce(_ray_crossings(d))
    p0, p1 = d.endpoints()
    forward = (p0, p1, _strip_ends(word, p0, p1))
    rev = tuple(-l for l in reversed(word))
    backward = (p1, p0, _strip_ends(rev, p1, p0))
    return (d.n,) + min(forward, backward)


def is_straight(d: ArcDiagram) -> bool:
    p0, p1 = d.endpoints()
    return abs(p0 - p1) == 1 and code(d)[3] == ()


@dataclasses.dataclass(frozen=True)
class TupleDiagram:
    """A family of pairwise disjoint arc diagrams with all ends distinct."""

    n: int
    arcs: tuple[ArcDiagram, ...]

    def check(self) -> None:
        ends: list[int] = []
        for d in self.arcs:
            if d.n != self.n:
                raise UnsupportedParameters("mixed n in tuple diagram")
            d.check()
            ends.extend(d.endpoints())
        if len(set(ends)) != len(ends):
            raise UnsupportedParameters("tuple diagram ends are not distinct")
        for i in range(len(self.arcs)):
            for j in range(i + 1, len(self.arcs)):
                for a, b in self.arcs[i].segments:
                    for c, d_ in self.arcs[j].segments:
                        if segments_touch(a, b, c, d_):
                            raise UnsupportedParameters(
                                f"arcs {i} and {j} of the tuple touch"
                            )
