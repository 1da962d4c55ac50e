"""Normalization of arc systems: genericity, bigon removal, crossing counts.

The workhorse is a system tightener: given a family of arc diagrams, it
repeatedly finds a puncture-free bigon (or half-bigon at a shared endpoint)
between some pair and isotopes one of the two arcs across it.  Candidates
are ranked by enclosed area; the smallest region never contains a hump of a
third arc, so a push changes only the crossing count of its own pair (by -2,
or -1 for a half-bigon) while strands passing straight through the region
keep their counts.  When no candidate survives, every pair is in minimal
position, which is exactly what the crossing-count oracle needs.

All surgery happens inside exactly-computed clearance tubes: the replacement
path hugs the far side of the crossed arc at a rational offset smaller than
the distance to any non-incident vertex, segment, or puncture.
"""

from __future__ import annotations

import dataclasses
import random
from fractions import Fraction

from ..errors import PreconditionViolated, UnsupportedParameters
from .predicates import (
    Point,
    add,
    cross,
    dist2,
    dist2_point_segment,
    dist2_segments,
    lerp,
    norm2,
    on_segment,
    point_in_polygon,
    point_in_triangle,
    rational_below_sqrt,
    scale,
    segment_params,
    segments_cross,
    segments_cross_bool,
    segments_touch,
    sub,
)
from .diagrams import ArcDiagram, code, puncture, _merge_collinear

Param = tuple[int, Fraction]  # (segment index, parameter in [0, 1])
Chain = tuple[Point, ...]


def chain_point(chain: Chain, param: Param) -> Point:
    i, t = param
    return lerp(chain[i], chain[i + 1], t)


def chain_start(chain: Chain) -> Param:
    return (0, Fraction(0))


def chain_end(chain: Chain) -> Param:
    return (len(chain) - 2, Fraction(1))


def chain_slice(chain: Chain, a: Param, b: Param) -> list[Point]:
    """Points of the chain from parameter a to b inclusive (a <= b)."""
    pts = [chain_point(chain, a)]
    for k in range(a[0] + 1, b[0] + 1):
        pts.append(chain[k])
    pts.append(chain_point(chain, b))
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def chain_replace(chain: Chain, a: Param, b: Param, middle: list[Point]) -> Chain:
    """Replace the part of the chain between parameters a < b."""
    head = [chain[k] for k in range(a[0] + 1)]
    tail = [chain[k] for k in range(b[0] + 1, len(chain))]
    pts = head + middle + tail
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    return tuple(out)


def signed_area2(poly: list[Point]) -> Fraction:
    total = Fraction(0)
    m = len(poly)
    for i in range(m):
        a, b = poly[i], poly[(i + 1) % m]
        total += a[0] * b[1] - b[0] * a[1]
    return total


@dataclasses.dataclass
class Crossing:
    i: int
    j: int
    pi: Param
    pj: Param
    point: Point


def _pair_crossings(ci: Chain, cj: Chain, i: int, j: int) -> list[Crossing]:
    out = []
    for si in range(len(ci) - 1):
        for sj in range(len(cj) - 1):
            hit = segments_cross(ci[si], ci[si + 1], cj[sj], cj[sj + 1])
            if hit:
                t, u, p = hit
                out.append(Crossing(i, j, (si, t), (sj, u), p))
    return out


def system_crossings(chains: list[Chain]) -> list[Crossing]:
    out = []
    for i in range(len(chains)):
        for j in range(i + 1, len(chains)):
            out.extend(_pair_crossings(chains[i], chains[j], i, j))
    return out


# ---------------------------------------------------------------------------
# genericity


def _chain_self_ok(chain: Chain) -> bool:
    from .diagrams import int_chain

    pts, _ = int_chain(chain)
    for k in range(len(pts) - 1):
        if pts[k] == pts[k + 1]:
            return False
    segs = [(pts[k], pts[k + 1]) for k in range(len(pts) - 1)]
    for x in range(len(segs)):
        for y in range(x + 1, len(segs)):
            a, b = segs[x]
            c, d = segs[y]
            if y == x + 1:
                if on_segment(a, c, d) or on_segment(d, a, b):
                    return False
                continue
            if segments_touch(a, b, c, d):
                return False
    return True


def _pair_generic(ci: Chain, cj: Chain) -> bool:
    shared = {ci[0], ci[-1]} & {cj[0], cj[-1]}
    for si in range(len(ci) - 1):
        for sj in range(len(cj) - 1):
            a, b = ci[si], ci[si + 1]
            c, d = cj[sj], cj[sj + 1]
            if not segments_touch(a, b, c, d):
                continue
            if segments_cross(a, b, c, d):
                continue
            touch_points = [p for p in (a, b) if on_segment(p, c, d)]
            touch_points += [p for p in (c, d) if on_segment(p, a, b)]
            if not touch_points:
                return False  # collinear overlap
            if any(p not in shared for p in set(touch_points)):
                return False
    return True


def _crossings_distinct(chains: list[Chain]) -> bool:
    pts = [c.point for c in system_crossings(chains)]
    return len(pts) == len(set(pts))


def system_generic(chains: list[Chain]) -> bool:
    return (
        all(_chain_self_ok(c) for c in chains)
        and all(
            _pair_generic(chains[i], chains[j])
            for i in range(len(chains))
            for j in range(i + 1, len(chains))
        )
        and _crossings_distinct(chains)
    )


def _safe_radius2(chain: Chain, n: int, obstacles: list[tuple[Point, Point]]) -> Fraction:
    """Squared radius within which interior vertices may move freely without
    the chain sweeping over a puncture, itself, or a listed obstacle."""
    best = Fraction(1, 16)
    segs = [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)]
    for x in range(len(segs)):
        for y in range(x + 2, len(segs)):
            d2 = dist2_segments(*segs[x], *segs[y])
            if d2 > 0:
                best = min(best, d2)
    for k in range(1, len(chain) - 1):
        a, b, c = chain[k - 1], chain[k], chain[k + 1]
        for p, s in ((a, (b, c)), (c, (a, b))):
            d2 = dist2_point_segment(p, *s)
            if d2 > 0:
                best = min(best, d2)
    ends = {chain[0], chain[-1]}
    for r in range(1, n + 1):
        q = puncture(r)
        for a, b in segs:
            if q in (a, b) and q in ends:
                continue
            d2 = dist2_point_segment(q, a, b)
            if d2 > 0:
                best = min(best, d2)
    for a, b in segs:
        for c, d in obstacles:
            d2 = dist2_segments(a, b, c, d)
            if d2 > 0:
                best = min(best, d2)
    return best


def resnap_fixed(chain: Chain, n: int) -> Chain:
    """Round interior vertices to a fixed binary grid, accepting the result
    only when it is simple, puncture-clear, and has the same canonical code
    (a complete isotopy invariant, so acceptance is always sound)."""
    if len(chain) <= 2:
        return chain
    from .diagrams import ArcDiagram, code as diagram_code

    want = None
    for k in (10, 14, 18, 24, 32):
        s = Fraction(1, 2**k)
        moved = [chain[0]]
        for idx in range(1, len(chain) - 1):
            x, y = chain[idx]
            moved.append((Fraction(round(x / s)) * s, Fraction(round(y / s)) * s))
        moved.append(chain[-1])
        cand = _merge_collinear(tuple(moved))
        if cand == chain:
            return chain
        if not _chain_self_ok(cand):
            continue
        ends = {cand[0], cand[-1]}
        clear = True
        for r in range(1, n + 1):
            q = puncture(r)
            for kk in range(len(cand) - 1):
                if q in (cand[kk], cand[kk + 1]):
                    if q in ends:
                        continue
                    clear = False
                    break
                if on_segment(q, cand[kk], cand[kk + 1]):
                    clear = False
                    break
            if not clear:
                break
        if not clear:
            continue
        try:
            d_new = ArcDiagram(n, cand)
            if want is None:
                want = diagram_code(ArcDiagram(n, chain))
            if diagram_code(d_new) == want:
                return d_new.vertices
        except Exception:
            continue
    return chain


def resnap(chain: Chain, n: int) -> Chain:
    """Round interior vertices onto a coarse power-of-two grid.

    The grid spacing stays below a quarter of the chain's safe radius, so
    the move is an isotopy; the payoff is bounded coordinate bit-size no
    matter how many exact operations produced the chain.
    """
    if len(chain) <= 2:
        return chain
    r2 = _safe_radius2(chain, n, [])
    s = rational_below_sqrt(r2) / 8
    if s >= 1:
        s = Fraction(1, 2)
    for _ in range(8):
        moved = [chain[0]]
        for k in range(1, len(chain) - 1):
            x, y = chain[k]
            moved.append((Fraction(round(x / s)) * s, Fraction(round(y / s)) * s))
        moved.append(chain[-1])
        cand = tuple(moved)
        if _chain_self_ok(cand):
            ends = {cand[0], cand[-1]}
            clear = True
            for r in range(1, n + 1):
                q = puncture(r)
                for kk in range(len(cand) - 1):
                    if q in (cand[kk], cand[kk + 1]):
                        if q in ends:
                            continue
                        clear = False
                        break
                    if on_segment(q, cand[kk], cand[kk + 1]):
                        clear = False
                        break
                if not clear:
                    break
            if clear:
                return _merge_collinear(cand)
        s /= 4
    return chain


def jiggle(
    chains: list[Chain],
    n: int,
    frozen: set[int] = frozenset(),
    seed: int = 0,
    keep_disjoint: set[int] = frozenset(),
    force: bool = False,
) -> list[Chain]:
    """Perturb interior vertices until the system is generic.

    Arcs in `frozen` stay untouched; arcs in `keep_disjoint` treat each other
    as obstacles so their pairwise disjointness survives.  With `force` a
    perturbation round runs even if the system is already generic.
    """
    if not force and system_generic(chains):
        return chains
    rng = random.Random(seed)
    chains = list(chains)
    shrink = Fraction(1, 4)
    for _ in range(60):
        for i in range(len(chains)):
            if i in frozen or len(chains[i]) <= 2:
                continue
            obstacles = []
            if i in keep_disjoint:
                for m in keep_disjoint:
                    if m != i:
                        c = chains[m]
                        obstacles += [(c[k], c[k + 1]) for k in range(len(c) - 1)]
            r2 = _safe_radius2(chains[i], n, obstacles)
            step = rational_below_sqrt(r2) * shrink / 2
            moved = list(chains[i])
            for k in range(1, len(moved) - 1):
                dx = step * Fraction(rng.randint(-8, 8), 16)
                dy = step * Fraction(rng.randint(-8, 8), 16)
                moved[k] = (moved[k][0] + dx, moved[k][1] + dy)
            cand = tuple(moved)
            if _chain_self_ok(cand):
                ok = True
                if i in keep_disjoint:
                    for m in keep_disjoint:
                        if m != i and _pair_crossings(cand, chains[m], 0, 1):
                            ok = False
                            break
                if ok:
                    chains[i] = cand
        if system_generic(chains):
            return chains
        shrink /= 2
    raise PreconditionViolated("could not reach a generic position")


# ---------------------------------------------------------------------------
# bigons


@dataclasses.dataclass
class Bigon:
    """A puncture-free disk between two arcs, bounded by one piece of each.

    `i` is the arc that will be pushed; `j` the arc pushed across.  For a
    half-bigon the shared endpoint plays the role of the missing corner.
    """

    i: int
    j: int
    ia: Param
    ib: Param
    ja: Param
    jb: Param
    half: bool
    shared: Point | None
    polygon: list[Point]
    area2: Fraction
    n_corners: int


def _region_free_of_punctures(polygon: list[Point], corners: set[Point], n: int) -> bool:
    for r in range(1, n + 1):
        q = puncture(r)
        if q in corners:
            continue
        if point_in_polygon(q, polygon):
            return False
    return True


def _find_bigons(chains: list[Chain], n: int, frozen: set[int]) -> list[Bigon]:
    out: list[Bigon] = []
    bypair: dict[tuple[int, int], list[Crossing]] = {}
    for c in system_crossings(chains):
        bypair.setdefault((c.i, c.j), []).append(c)

    for (i, j), cs in bypair.items():
        by_i = sorted(cs, key=lambda c: c.pi)
        by_j = sorted(cs, key=lambda c: c.pj)
        pos_j = {id(c): k for k, c in enumerate(by_j)}
        for k in range(len(by_i) - 1):
            c1, c2 = by_i[k], by_i[k + 1]
            if abs(pos_j[id(c1)] - pos_j[id(c2)]) != 1:
                continue
            ja, jb = (c1.pj, c2.pj) if c1.pj <= c2.pj else (c2.pj, c1.pj)
            side_i = chain_slice(chains[i], c1.pi, c2.pi)
            side_j = chain_slice(chains[j], ja, jb)
            if side_j[0] != side_i[-1]:
                side_j = side_j[::-1]
            polygon = side_i[:-1] + side_j[:-1]
            if len(polygon) < 3:
                continue
            if not _region_free_of_punctures(polygon, {c1.point, c2.point}, n):
                continue
            area = abs(signed_area2(polygon))
            base = dict(ia=c1.pi, ib=c2.pi, ja=ja, jb=jb, half=False,
                        shared=None, polygon=polygon, area2=area, n_corners=2)
            if i not in frozen:
                out.append(Bigon(i=i, j=j, **base))
            if j not in frozen:
                out.append(Bigon(i=j, j=i, ia=ja, ib=jb, ja=c1.pi, jb=c2.pi,
                                 half=False, shared=None, polygon=polygon,
                                 area2=area, n_corners=2))
        # half-bigons at shared endpoints
        for pt_ in ({chains[i][0], chains[i][-1]} & {chains[j][0], chains[j][-1]}):
            at_start_i = chains[i][0] == pt_
            at_start_j = chains[j][0] == pt_
            c_i = min(cs, key=lambda c: c.pi) if at_start_i else max(cs, key=lambda c: c.pi)
            c_j = min(cs, key=lambda c: c.pj) if at_start_j else max(cs, key=lambda c: c.pj)
            if c_i is not c_j:
                continue
            c0 = c_i
            ei = chain_start(chains[i]) if at_start_i else chain_end(chains[i])
            ej = chain_start(chains[j]) if at_start_j else chain_end(chains[j])
            lo_i, hi_i = (ei, c0.pi) if at_start_i else (c0.pi, ei)
            lo_j, hi_j = (ej, c0.pj) if at_start_j else (c0.pj, ej)
            side_i = chain_slice(chains[i], lo_i, hi_i)
            side_j = chain_slice(chains[j], lo_j, hi_j)
            if side_i[0] != pt_:
                side_i = side_i[::-1]
            if side_j[0] != pt_:
                side_j = side_j[::-1]
            polygon = side_i[:-1] + side_j[::-1][:-1]
            if len(polygon) < 3:
                continue
            if not _region_free_of_punctures(polygon, {pt_, c0.point}, n):
                continue
            area = abs(signed_area2(polygon))
            if i not in frozen:
                out.append(Bigon(i=i, j=j, ia=lo_i, ib=hi_i, ja=lo_j, jb=hi_j,
                                 half=True, shared=pt_, polygon=polygon,
                                 area2=area, n_corners=1))
            if j not in frozen:
                out.append(Bigon(i=j, j=i, ia=lo_j, ib=hi_j, ja=lo_i, jb=hi_i,
                                 half=True, shared=pt_, polygon=polygon,
                                 area2=area, n_corners=1))
    return out


def _tube_clearance2(chains: list[Chain], j: int, lo: Param, hi: Param, n: int) -> Fraction:
    """Squared clearance of the tube around arc j between params lo and hi:
    distance to everything that does not touch that sub-chain."""
    sub_pts = chain_slice(chains[j], lo, hi)
    sub_segs = [(sub_pts[k], sub_pts[k + 1]) for k in range(len(sub_pts) - 1)]
    best = Fraction(1, 4)
    for r in range(1, n + 1):
        q = puncture(r)
        for s in sub_segs:
            if q == s[0] or q == s[1]:
                continue
            d2 = dist2_point_segment(q, *s)
            if d2 > 0:
                best = min(best, d2)
    for chain in chains:
        for k in range(len(chain) - 1):
            a, b = chain[k], chain[k + 1]
            if any(segments_touch(a, b, *s) for s in sub_segs):
                continue
            for s in sub_segs:
                d2 = dist2_segments(a, b, *s)
                if d2 > 0:
                    best = min(best, d2)
        for v in chain:
            if any(on_segment(v, *s) for s in sub_segs):
                continue
            for s in sub_segs:
                d2 = dist2_point_segment(v, *s)
                if d2 > 0:
                    best = min(best, d2)
    return best


def _cut_param(chain: Chain, p: Param, eps2: Fraction, forward: bool) -> Param:
    """A parameter just before/after p on the same segment, within sqrt(eps2)."""
    seg, t = p
    a, b = chain[seg], chain[seg + 1]
    seg_len2 = dist2(a, b)
    step = rational_below_sqrt(eps2 / seg_len2) / 2 if seg_len2 > eps2 else Fraction(1, 4)
    if forward:
        t2 = t + min(step, (1 - t) / 2)
    else:
        t2 = t - min(step, t / 2)
    return (seg, t2)


def _cut_param_depth(
    chain: Chain,
    p: Param,
    jseg: tuple[Point, Point],
    depth: Fraction,
    forward: bool,
    bound: Fraction | None = None,
) -> Param:
    """A parameter on p's segment whose point sits at perpendicular distance
    about `depth` (between depth/2 and depth) from the line of jseg, on the
    near side of p.  `bound` caps the parameter distance from p."""
    seg, t = p
    a, b = chain[seg], chain[seg + 1]
    ja, jb = jseg
    d0 = cross(ja, jb, a)
    d1 = cross(ja, jb, b)
    slope = d1 - d0
    if slope == 0:
        return _cut_param(chain, p, depth * depth, forward)
    delta = rational_below_sqrt(depth * depth * dist2(ja, jb) / (slope * slope))
    hard = (1 - t) / 2 if forward else t / 2
    cap = min(delta, hard, bound if bound is not None else delta)
    if cap <= 0:
        cap = hard
    return (seg, t + cap) if forward else (seg, t - cap)


def _offset_path(path: list[Point], sign: int, eps: Fraction) -> list[Point]:
    """Offset each segment of the path by (just under) eps on the chosen side
    (+1: left of the path direction).

    Convex turns towards the offset side are mitred at the exact crossing of
    the two offset segments; other turns get a square cap that walks around
    the vertex.  Everything stays within 3*eps of the path.
    """
    pieces = []
    for k in range(len(path) - 1):
        a, b = path[k], path[k + 1]
        d = sub(b, a)
        nrm = (-d[1], d[0])
        lam = rational_below_sqrt(eps * eps / norm2(nrm))
        off = scale(nrm, sign * lam)
        ext = scale(d, rational_below_sqrt(eps * eps / norm2(d)) / 2)
        pieces.append((add(a, off), add(b, off), ext))
    pts: list[Point] = [pieces[0][0]]
    for k in range(len(pieces) - 1):
        s0, e0, ext0 = pieces[k]
        s1, e1, ext1 = pieces[k + 1]
        res = segment_params(s0, e0, s1, e1)
        mitred = False
        if res is not None:
            t, u = res
            if 0 <= t <= 1 and 0 <= u <= 1:
                pts.append(lerp(s0, e0, t))
                mitred = True
        if not mitred:
            pts.append(e0)
            pts.append(add(e0, ext0))
            pts.append(sub(s1, ext1))
            pts.append(s1)
    pts.append(pieces[-1][1])
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def _corner_clearance2(chains: list[Chain], corner: Point, n: int) -> Fraction:
    """Squared distance from a corner to everything not passing through it."""
    best = Fraction(1, 4)
    for r in range(1, n + 1):
        q = puncture(r)
        if q == corner:
            continue
        d2 = dist2(q, corner)
        if d2 > 0:
            best = min(best, d2)
    for chain in chains:
        for k in range(len(chain) - 1):
            a, b = chain[k], chain[k + 1]
            if on_segment(corner, a, b):
                continue
            d2 = dist2_point_segment(corner, a, b)
            if d2 > 0:
                best = min(best, d2)
    return best


def _build_push(chains: list[Chain], big: Bigon, n: int, eps: Fraction) -> Chain:
    """Candidate replacement for arc big.i hugging the far side of big.j.

    The channel runs at distance at most eps/4 from the crossed arc, while
    the cuts into arc i happen at perpendicular depth about eps from it, so
    the retained stubs are strictly deeper than the channel.
    """
    i, j = big.i, big.j
    ci, cj = chains[i], chains[j]
    path = chain_slice(cj, big.ja, big.jb)
    side_i = chain_slice(ci, big.ia, big.ib)

    # Traverse the region boundary as side_i followed by j's side walked
    # backwards.  With positive signed area the interior lies to the left of
    # each directed edge of that cycle; translate that into the offset side
    # for the channel, which runs along `path` away from the interior.
    forward = path[0] == side_i[-1]
    back = path if forward else path[::-1]
    cycle = side_i[:-1] + back[:-1]
    s = signed_area2(cycle)
    if s == 0:
        raise PreconditionViolated("degenerate bigon region")
    if forward:
        channel_sign = -1 if s > 0 else 1
    else:
        channel_sign = 1 if s > 0 else -1
    channel = _offset_path(path, channel_sign, eps / 4)
    # the middle must run from the side_i[0] corner to the side_i[-1] corner;
    # the channel was generated along `path`, whose first point is side_i[-1]
    # exactly when `forward` holds.
    if forward:
        channel = channel[::-1]

    # cut bounds: never reach past another crossing on the same segment
    own = []
    for c in system_crossings(chains):
        if c.i == i:
            own.append(c.pi)
        elif c.j == i:
            own.append(c.pj)

    def bound_before(par):
        cands = [t for (sg, t) in own if sg == par[0] and t < par[1]]
        return (par[1] - max(cands)) / 2 if cands else None

    def bound_after(par):
        cands = [t for (sg, t) in own if sg == par[0] and t > par[1]]
        return (min(cands) - par[1]) / 2 if cands else None

    def corner_jseg(par_i, par_j_candidates):
        pt_i = chain_point(ci, par_i)
        for pj in par_j_candidates:
            if chain_point(cj, pj) == pt_i:
                return (cj[pj[0]], cj[pj[0] + 1])
        return (cj[par_j_candidates[0][0]], cj[par_j_candidates[0][0] + 1])

    if not big.half:
        jseg_a = corner_jseg(big.ia, [big.ja, big.jb])
        jseg_b = corner_jseg(big.ib, [big.ja, big.jb])
        a_par = _cut_param_depth(ci, big.ia, jseg_a, eps, False, bound_before(big.ia))
        b_par = _cut_param_depth(ci, big.ib, jseg_b, eps, True, bound_after(big.ib))
        middle = [chain_point(ci, a_par)] + channel + [chain_point(ci, b_par)]
        new_i = chain_replace(ci, a_par, b_par, middle)
    elif ci[0] == big.shared:
        jseg_b = corner_jseg(big.ib, [big.jb, big.ja])
        b_par = _cut_param_depth(ci, big.ib, jseg_b, eps, True, bound_after(big.ib))
        middle = [big.shared] + channel + [chain_point(ci, b_par)]
        new_i = chain_replace(ci, chain_start(ci), b_par, middle)
    else:
        jseg_a = corner_jseg(big.ia, [big.ja, big.jb])
        a_par = _cut_param_depth(ci, big.ia, jseg_a, eps, False, bound_before(big.ia))
        middle = [chain_point(ci, a_par)] + channel + [big.shared]
        new_i = chain_replace(ci, a_par, chain_end(ci), middle)
    return _merge_collinear(new_i)


def _chain_clears_punctures(chain: Chain, n: int) -> bool:
    ends = {chain[0], chain[-1]}
    for r in range(1, n + 1):
        q = puncture(r)
        for k in range(len(chain) - 1):
            if q in (chain[k], chain[k + 1]):
                if q in ends:
                    continue
                return False
            if on_segment(q, chain[k], chain[k + 1]):
                return False
    return True


def _pair_count_matrix(chains: list[Chain]) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for c in system_crossings(chains):
        counts[(c.i, c.j)] = counts.get((c.i, c.j), 0) + 1
    return counts


def _verified_push(chains: list[Chain], big: Bigon, n: int):
    """Build the push and accept it only if it changes exactly the crossings
    it is supposed to change; retries with shrinking offsets."""
    before = _pair_count_matrix(chains)
    key = (min(big.i, big.j), max(big.i, big.j))
    want = dict(before)
    want[key] = want.get(key, 0) - (1 if big.half else 2)
    want = {k: v for k, v in want.items() if v}
    if big.half:
        cross_par = big.ib if chains[big.i][0] == big.shared else big.ia
        corner_pt = chain_point(chains[big.i], cross_par)
        other_pt = big.shared
        base2 = _corner_clearance2(chains, corner_pt, n)
    else:
        corner_pt = chain_point(chains[big.i], big.ib)
        other_pt = chain_point(chains[big.i], big.ia)
        base2 = min(
            _corner_clearance2(chains, corner_pt, n),
            _corner_clearance2(chains, other_pt, n),
        )
    base2 = min(
        base2,
        _tube_clearance2(chains, big.j, big.ja, big.jb, n),
        dist2(corner_pt, other_pt),
    )
    if base2 <= 0:
        return None
    eps = rational_below_sqrt(base2) / 8
    for _ in range(6):
        try:
            new_i = _build_push(chains, big, n, eps)
        except PreconditionViolated:
            return None
        eps /= 4
        if not _chain_self_ok(new_i):
            continue
        if not _chain_clears_punctures(new_i, n):
            continue
        cand = list(chains)
        cand[big.i] = new_i
        got = {k: v for k, v in _pair_count_matrix(cand).items() if v}
        if got == want:
            return cand
    return None


def tighten_system(
    chains: list[Chain],
    n: int,
    frozen: set[int] = frozenset(),
    seed: int = 0,
    keep_disjoint: set[int] = frozenset(),
) -> list[Chain]:
    """Remove bigons until every pair of arcs is in minimal position."""
    chains = jiggle(chains, n, frozen=frozen, seed=seed, keep_disjoint=keep_disjoint)
    total = len(system_crossings(chains))
    stuck = 0
    for _ in range(100_000):
        bigons = _find_bigons(chains, n, frozen)
        if not bigons:
            return chains
        bigons.sort(key=lambda b: (b.area2, b.i, b.j))
        pushed = None
        for big in bigons:
            pushed = _verified_push(chains, big, n)
            if pushed is not None:
                break
        if pushed is None:
            # perturb out of the degenerate configuration and try again
            stuck += 1
            if stuck > 8:
                raise PreconditionViolated("tightening is stuck")
            chains = jiggle(chains, n, frozen=frozen, seed=seed + 100 + stuck,
                            keep_disjoint=keep_disjoint, force=True)
            continue
        stuck = 0
        chains = jiggle(pushed, n, frozen=frozen, seed=seed + 1,
                        keep_disjoint=keep_disjoint)
        new_total = len(system_crossings(chains))
        if new_total >= total:
            raise PreconditionViolated("bigon push failed to reduce crossings")
        total = new_total
    raise PreconditionViolated("tightening did not converge")


# ---------------------------------------------------------------------------
# public pair operations


def normalize(d1: ArcDiagram, d2: ArcDiagram, seed: int = 0):
    """Isotope the pair into minimal position (no bigons, no half-bigons).

    Already-normal pairs are returned unchanged, making the operation
    idempotent.
    """
    if d1.n != d2.n:
        raise UnsupportedParameters("diagrams live in different disks")
    chains = [d1.vertices, d2.vertices]
    if system_generic(chains) and not _find_bigons(chains, d1.n, frozenset()):
        return (d1, d2)
    d1 = remove_grid_detours(tidy_diagram(d1))
    d2 = remove_grid_detours(tidy_diagram(d2))
    chains = [d1.vertices, d2.vertices]
    if system_generic(chains) and not _find_bigons(chains, d1.n, frozenset()):
        return (d1, d2)
    tightened = tighten_system(chains, d1.n, seed=seed)
    return (ArcDiagram(d1.n, tightened[0]), ArcDiagram(d2.n, tightened[1]))


def crossing_number(d1: ArcDiagram, d2: ArcDiagram, seed: int = 0) -> int:
    """Minimal number of transverse interior crossings of the two arcs."""
    if d1.n != d2.n:
        raise UnsupportedParameters("diagrams live in different disks")
    if code(d1) == code(d2):
        raise PreconditionViolated("crossing query for two copies of one arc")
    e1, e2 = normalize(d1, d2, seed=seed)
    return len(_pair_crossings(e1.vertices, e2.vertices, 0, 1))


# ---------------------------------------------------------------------------
# single-diagram cleanup


def _triangle_clear(chain, k: int, punct, ends) -> bool:
    """May vertex k be removed by cutting across the triangle (u, v, w)?

    Runs on integer coordinates; `punct` are the scaled puncture positions
    and `ends` the scaled arc endpoints.
    """
    u, v, w = chain[k - 1], chain[k], chain[k + 1]
    if cross(u, v, w) == 0:
        return False
    for q in punct:
        if q == u or q == w:
            continue
        if point_in_triangle(q, u, v, w):
            return False
    edges = ((u, v), (v, w), (u, w))
    for m in range(len(chain) - 1):
        if m in (k - 1, k):
            continue
        a, b = chain[m], chain[m + 1]
        if not any(segments_touch(a, b, *e) for e in edges):
            continue
        # neighbour segments may touch only at their shared corner
        if m == k - 2:
            other = a  # segment (chain[k-2], u)
        elif m == k + 1:
            other = b  # segment (w, chain[k+2])
        else:
            return False
        if point_in_triangle(other, u, v, w):
            return False
        if any(segments_cross_bool(a, b, *e) for e in edges):
            return False
        if cross(u, w, other) == 0:
            return False  # collinear with the new edge: possible overlap
    return True


def tidy_diagram(d: ArcDiagram,
                 obstacles: list[tuple[Point, Point]] | None = None) -> ArcDiagram:
    """Reduce vertex count by corner cuts across empty triangles."""
    from .diagrams import int_chain

    obstacles = obstacles or []
    pts = list(_merge_collinear(d.vertices))
    changed = True
    while changed:
        changed = False
        flat = list(pts) + [p for s in obstacles for p in s]
        ipts, scale = int_chain(flat)
        ichain = ipts[: len(pts)]
        iobs = ipts[len(pts):]
        iobs = [(iobs[2 * t], iobs[2 * t + 1]) for t in range(len(obstacles))]
        ipunct = [(r * scale, 0) for r in range(1, d.n + 1)]
        k = 1
        while k < len(pts) - 1:
            ext = ichain + [q for s in iobs for q in s]
            # obstacles join the scan as extra pseudo-segments
            ok = _triangle_clear_with_obstacles(ichain, k, ipunct, iobs)
            if ok:
                del pts[k]
                del ichain[k]
                changed = True
            else:
                k += 1
        merged = list(_merge_collinear(tuple(pts)))
        if len(merged) < len(pts):
            pts = merged
            changed = True
    return ArcDiagram(d.n, tuple(pts))


def _triangle_clear_with_obstacles(ichain, k, ipunct, iobs) -> bool:
    if not _triangle_clear(ichain, k, ipunct, None):
        return False
    u, v, w = ichain[k - 1], ichain[k], ichain[k + 1]
    edges = ((u, v), (v, w), (u, w))
    for a, b in iobs:
        if any(segments_touch(a, b, *e) for e in edges):
            return False
        if point_in_triangle(a, u, v, w) or point_in_triangle(b, u, v, w):
            return False
    return True


def grid_lines(n: int) -> list[Fraction]:
    return [Fraction(2 * j + 1, 2) for j in range(1, n)]


def remove_grid_detours(d: ArcDiagram) -> ArcDiagram:
    """Remove empty bigons between the diagram and the vertical grid lines.

    Every accepted rewrite is re-checked against the canonical code, so this
    can only ever simplify within the isotopy class.
    """
    guard = 0
    changed = True
    while changed and guard < 200:
        changed = False
        guard += 1
        chain = d.vertices
        for line_x in grid_lines(d.n):
            hits: list[tuple[Param, Point]] = []
            for k in range(len(chain) - 1):
                a, b = chain[k], chain[k + 1]
                if (a[0] >= line_x) == (b[0] >= line_x):
                    continue
                t = (line_x - a[0]) / (b[0] - a[0])
                y = a[1] + (b[1] - a[1]) * t
                hits.append(((k, t), (line_x, y)))
            if len(hits) < 2:
                continue
            for h in range(len(hits) - 1):
                (pa, xa), (pb, xb) = hits[h], hits[h + 1]
                side = chain_slice(chain, pa, pb)
                polygon = side[:-1] + [xb] if side[-1] != xb else side
                if polygon[0] != xa:
                    polygon = [xa] + polygon
                if len(polygon) < 3:
                    continue
                if not _region_free_of_punctures(polygon, set(), d.n):
                    continue
                clear = True
                for m in range(len(chain) - 1):
                    if pa[0] <= m <= pb[0]:
                        continue
                    if segments_touch(chain[m], chain[m + 1], xa, xb):
                        clear = False
                        break
                if not clear:
                    continue
                best = Fraction(1, 4)
                for r in range(1, d.n + 1):
                    d2_ = dist2_point_segment(puncture(r), xa, xb)
                    if d2_ > 0:
                        best = min(best, d2_)
                for m in range(len(chain) - 1):
                    if pa[0] <= m <= pb[0]:
                        continue
                    d2_ = dist2_segments(chain[m], chain[m + 1], xa, xb)
                    if d2_ > 0:
                        best = min(best, d2_)
                eps = rational_below_sqrt(best) / 4
                off_x = next(
                    (p[0] - line_x for p in side if p[0] != line_x), None
                )
                if off_x is None:
                    continue
                sgn = -1 if off_x > 0 else 1  # land on the entry side
                a_par = _cut_param(chain, pa, eps * eps, forward=False)
                b_par = _cut_param(chain, pb, eps * eps, forward=True)
                middle = [
                    chain_point(chain, a_par),
                    (xa[0] + sgn * eps, xa[1]),
                    (xb[0] + sgn * eps, xb[1]),
                    chain_point(chain, b_par),
                ]
                cand = chain_replace(chain, a_par, b_par, middle)
                if not _chain_self_ok(cand):
                    continue
                try:
                    newd = ArcDiagram(d.n, _merge_collinear(cand))
                    if code(newd) != code(d):
                        continue
                except (UnsupportedParameters, PreconditionViolated):
                    continue
                d = tidy_diagram(newd)
                changed = True
                break
            if changed:
                break
    return d
