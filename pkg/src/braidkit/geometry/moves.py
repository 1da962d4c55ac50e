"""The crossing-removal move on arc tuples: push an arc off a corridor.

Given a corridor arc ending at a free puncture p and a tuple of pairwise
disjoint arcs, the move takes the tuple arc whose crossing with the corridor
lies closest to p, and reroutes that single crossing around p: the new arc
follows the old one, turns just before the crossing, runs alongside the
corridor to p, U-turns around the corridor's end, and comes back on the
other side.  Exactly one crossing disappears and no new ones appear, so
repeating the move clears the corridor completely.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import PreconditionViolated
from .predicates import (
    Point,
    add,
    dist2,
    dist2_point_segment,
    dist2_segments,
    norm2,
    on_segment,
    rational_below_sqrt,
    scale,
    segments_touch,
    sub,
)
from .diagrams import ArcDiagram, TupleDiagram, puncture, _merge_collinear
from .tighten import (
    Chain,
    _chain_self_ok,
    _cut_param,
    _offset_path,
    _pair_crossings,
    chain_end,
    chain_point,
    chain_replace,
    chain_slice,
    chain_start,
    system_crossings,
)


def _corridor_clearance2(
    chains: list[Chain], corridor: Chain, lo, hi, p_pt: Point, n: int
) -> Fraction:
    """Clearance around the corridor stretch between params lo..hi plus the
    U-turn zone at the endpoint p."""
    sub_pts = chain_slice(corridor, lo, hi)
    sub_segs = [(sub_pts[k], sub_pts[k + 1]) for k in range(len(sub_pts) - 1)]
    best = Fraction(1, 4)
    for r in range(1, n + 1):
        q = puncture(r)
        if q == p_pt:
            continue
        d2 = dist2(q, p_pt)
        if d2 > 0:
            best = min(best, d2)
        for s in sub_segs:
            if q in s:
                continue
            d2 = dist2_point_segment(q, *s)
            if d2 > 0:
                best = min(best, d2)
    for chain in chains:
        for k in range(len(chain) - 1):
            a, b = chain[k], chain[k + 1]
            if any(segments_touch(a, b, *s) for s in sub_segs):
                continue
            d2 = dist2_point_segment(p_pt, a, b)
            if d2 > 0:
                best = min(best, d2)
            for s in sub_segs:
                d2 = dist2_segments(a, b, *s)
                if d2 > 0:
                    best = min(best, d2)
        for v in chain:
            if any(on_segment(v, *s) for s in sub_segs):
                continue
            d2 = dist2(v, p_pt)
            if d2 > 0:
                best = min(best, d2)
            for s in sub_segs:
                d2 = dist2_point_segment(v, *s)
                if d2 > 0:
                    best = min(best, d2)
    return best


def basic_move_chains(
    chains: list[Chain], corridor: Chain, p: int, n: int
) -> tuple[list[Chain], int]:
    """One crossing-removal move; returns the new chains and the index of
    the rerouted arc.  `chains` must be pairwise disjoint and each must miss
    the puncture p."""
    p_pt = puncture(p)
    at_start = corridor[0] == p_pt
    if not at_start and corridor[-1] != p_pt:
        raise PreconditionViolated(f"puncture {p} is not an end of the corridor")
    for k, c in enumerate(chains):
        if p_pt in (c[0], c[-1]):
            raise PreconditionViolated(f"puncture {p} is an end of arc {k}")

    system = [corridor] + list(chains)
    crossings = [c for c in system_crossings(system) if c.i == 0]
    if not crossings:
        raise PreconditionViolated("no arc of the tuple crosses the corridor")
    # crossing closest to p along the corridor; corridor params grow away
    # from its first vertex
    if at_start:
        target = min(crossings, key=lambda c: (c.pi, c.j))
    else:
        target = max(crossings, key=lambda c: (c.pi, c.j))
    moved = target.j - 1  # index into `chains`
    arc = chains[moved]

    # corridor stretch from the crossing to p
    if at_start:
        lo, hi = chain_start(corridor), target.pi
        stretch = chain_slice(corridor, lo, hi)
        path = stretch[::-1]  # runs from the crossing towards p
    else:
        lo, hi = target.pi, chain_end(corridor)
        path = chain_slice(corridor, lo, hi)
    eps2 = _corridor_clearance2([arc] + [c for m, c in enumerate(chains) if m != moved],
                                corridor, lo, hi, p_pt, n)
    eps = rational_below_sqrt(eps2) / 6

    # Each side of the corridor gets a rail; the U-turn joins them past p.
    left_rail = _offset_path(path, +1, eps)
    right_rail = _offset_path(path, -1, eps)
    # direction of the corridor's final segment into p
    tail = sub(path[-1], path[-2])
    lam = rational_below_sqrt(eps * eps / norm2(tail))
    overshoot = add(p_pt, scale(tail, lam * 2))

    # the moved arc enters the crossing from one side; find it exactly
    apar = target.pj
    a_par = _cut_param(arc, apar, eps * eps, forward=False)
    b_par = _cut_param(arc, apar, eps * eps, forward=True)
    a_pt = chain_point(arc, a_par)
    b_pt = chain_point(arc, b_par)
    seg = path[0:2]  # corridor segment at the crossing, oriented towards p
    side_of = lambda q: (seg[1][0] - seg[0][0]) * (q[1] - seg[0][1]) - (
        seg[1][1] - seg[0][1]
    ) * (q[0] - seg[0][0])
    sa = side_of(a_pt)
    if sa == 0:
        raise PreconditionViolated("degenerate crossing geometry")
    first_rail, second_rail = (left_rail, right_rail) if sa > 0 else (
        right_rail,
        left_rail,
    )
    middle = (
        [a_pt]
        + first_rail
        + [overshoot]
        + second_rail[::-1]
        + [b_pt]
    )
    new_arc = _merge_collinear(chain_replace(arc, a_par, b_par, middle))
    if not _chain_self_ok(new_arc):
        raise PreconditionViolated("basic move produced a self-touching arc")
    new_chains = list(chains)
    new_chains[moved] = new_arc

    # the move must remove exactly one corridor crossing and add none
    before = len(crossings)
    after = len(
        [c for c in system_crossings([corridor] + new_chains) if c.i == 0]
    )
    if after != before - 1:
        raise PreconditionViolated(
            f"basic move changed corridor crossings {before} -> {after}"
        )
    for m in range(len(new_chains)):
        if m != moved and _pair_crossings(new_chains[m], new_arc, 0, 1):
            raise PreconditionViolated("basic move crossed another tuple arc")
    return new_chains, moved


def basic_move(t: TupleDiagram, corridor: ArcDiagram, p: int) -> TupleDiagram:
    """Public form of the move on tuple diagrams."""
    chains = [d.vertices for d in t.arcs]
    new_chains, _ = basic_move_chains(chains, corridor.vertices, p, t.n)
    return TupleDiagram(t.n, tuple(ArcDiagram(t.n, c) for c in new_chains))
