"""Recognition: from an embedded arc diagram back to a braid-word arc.

Every arc determines the free-homotopy class of the curve bounding a
neighbourhood of it; as a cyclic word in the standard loops x_1 .. x_n that
class is computable directly from the diagram's canonical code, and the
generator letters act on it by an explicit substitution.  Recognition
searches for a letter sequence shrinking the cyclic word down to some
x_i x_{i+1} (the straight arc e_i) and returns the inverse word; the result
is certified by realizing it and comparing canonical codes, so a wrong
search answer can never escape.
"""

from __future__ import annotations

import heapq

from ..errors import BudgetExceeded, PreconditionViolated
from ..arcs import Arc
from ..words import BraidWord
from .diagrams import ArcDiagram, code, straight
from .pushes import realize_arc

Cyclic = tuple[int, ...]


def _free_reduce(letters) -> list[int]:
    out: list[int] = []
    for l in letters:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return out


def _cyclic_reduce(letters) -> tuple[int, ...]:
    w = _free_reduce(letters)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def canon_cyclic(letters) -> Cyclic:
    """Canonical form of a cyclic word up to rotation and inversion."""
    w = _cyclic_reduce(letters)
    if not w:
        return ()
    best = None
    for word in (w, tuple(-l for l in reversed(w))):
        for k in range(len(word)):
            rot = word[k:] + word[:k]
            if best is None or rot < best:
                best = rot
    return best


def curve_word(diagram_code: tuple) -> Cyclic:
    """The boundary-curve class of an arc, from its canonical code."""
    _, p, q, w = diagram_code
    letters = list(w) + [q] + [-l for l in reversed(w)] + [p]
    return canon_cyclic(letters)


def _subst(word: Cyclic, letter: int) -> Cyclic:
    """Action of one generator letter on a curve class."""
    j = abs(letter)
    out: list[int] = []
    for l in word:
        a = abs(l)
        if a == j:
            image = [j + 1] if letter > 0 else [j, j + 1, -j]
        elif a == j + 1:
            image = [-(j + 1), j, j + 1] if letter > 0 else [j]
        else:
            image = [a]
        if l < 0:
            image = [-x for x in reversed(image)]
        out.extend(image)
    return canon_cyclic(out)


def _targets(n: int) -> dict[Cyclic, int]:
    return {canon_cyclic((i, i + 1)): i for i in range(1, n)}


def _search_untangling(start: Cyclic, n: int, node_budget: int = 250_000):
    """Letter sequence g_1 .. g_m with (g_m ... g_1)(start) straight.

    Greedy length descent with a best-first fallback.
    """
    targets = _targets(n)
    letters = [l for i in range(1, n) for l in (i, -i)]

    seq: list[int] = []
    state = start
    for _ in range(400):
        if state in targets:
            return seq, targets[state]
        best = None
        for l in letters:
            cand = _subst(state, l)
            if len(cand) < len(state) and (best is None or (len(cand), l) < best[:2]):
                best = (len(cand), l, cand)
        if best is None:
            break
        seq.append(best[1])
        state = best[2]
    if state in targets:
        return seq, targets[state]

    # best-first over canonical curve classes
    heap = [(len(start), 0, start, ())]
    seen = {start}
    counter = 0
    while heap:
        _, _, state, seq = heapq.heappop(heap)
        if state in targets:
            return list(seq), targets[state]
        if len(seen) > node_budget:
            raise BudgetExceeded("arc recognition search exhausted its budget")
        for l in letters:
            cand = _subst(state, l)
            if cand in seen:
                continue
            seen.add(cand)
            counter += 1
            heapq.heappush(heap, (len(cand), counter, cand, seq + (l,)))
    raise PreconditionViolated("arc recognition failed")


def arc_curve_class(a: Arc) -> Cyclic:
    """Boundary-curve class of the realization of an arc.

    The embedded model realizes the mirror of each generator letter, so the
    matching symbolic computation mirrors the braid before acting on the
    free group.
    """
    from ..wordproblem import artin_image

    mirrored = BraidWord(a.n, tuple(-l for l in a.beta.letters))
    image = artin_image(mirrored).apply((a.index, a.index + 1))
    return canon_cyclic(image)


_memo: dict[tuple, Arc] = {}


def arc_from_diagram(d: ArcDiagram, hint: Arc | None = None) -> Arc:
    """The (beta, i) arc whose realization is isotopic to the diagram.

    A hint arc believed to be close to the answer (e.g. the arc before a
    single rerouting move) lets the searcher try cheap neighbourhood
    candidates before falling back to the general search.
    """
    c = code(d)
    hit = _memo.get(c)
    if hit is not None:
        return hit
    target = curve_word(c)
    if hint is not None and hint.n == d.n:
        from ..words import compose, generator, identity

        words = [identity(d.n)]
        singles = [generator(d.n, l) for i in range(1, d.n) for l in (i, -i)]
        words += singles
        words += [compose(u, v) for u in singles for v in singles]
        for w in words:
            cand = Arc(d.n, compose(w, hint.beta), hint.index)
            if arc_curve_class(cand) == target:
                _memo[c] = cand
                return cand
    seq, index = _search_untangling(target, d.n)
    beta = BraidWord(d.n, tuple(-l for l in seq))
    arc = Arc(d.n, beta, index)
    if arc_curve_class(arc) != target:
        raise PreconditionViolated("arc recognition certificate failed")
    _memo[c] = arc
    return arc


def realize(a: Arc) -> ArcDiagram:
    """Embed the arc beta(e_i) by applying the braid to the straight arc."""
    return realize_arc(a.n, a.beta.letters, a.index)
