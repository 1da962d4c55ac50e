"""Arcs between punctures and half-twists along them.

An arc is stored as a pair (beta, i): the image of the straight arc e_i
(joining punctures i and i+1) under the braid beta.  The representation is
not unique; every identity question is answered through the word problem,
using the fact that the half-twist word beta s_i beta^-1 is a complete
invariant of the arc.
"""

from __future__ import annotations

import dataclasses

from .errors import StrandMismatch, UnsupportedParameters
from .words import BraidWord, compose, conjugate, generator, identity, permutation
from . import wordproblem


@dataclasses.dataclass(frozen=True)
class Arc:
    """The arc beta(e_index) in the disk with n punctures."""

    n: int
    beta: BraidWord
    index: int

    def __post_init__(self):
        if self.beta.n != self.n:
            raise StrandMismatch(f"{self.beta.n} != {self.n}")
        if not 1 <= self.index <= self.n - 1:
            raise UnsupportedParameters(f"arc index {self.index} out of range")


def straight_arc(n: int, i: int) -> Arc:
    return Arc(n, identity(n), i)


@dataclasses.dataclass(frozen=True)
class HalfTwist:
    """A half-twist along an arc, with its braid word cached."""

    arc: Arc
    word: BraidWord


def half_twist(a: Arc) -> BraidWord:
    """The braid word beta s_i beta^-1 of the half-twist along a."""
    return conjugate(a.beta, generator(a.n, a.index))


def half_twist_of(a: Arc) -> HalfTwist:
    return HalfTwist(a, half_twist(a))


def apply(f: BraidWord, a: Arc) -> Arc:
    """The image arc f(a)."""
    if f.n != a.n:
        raise StrandMismatch(f"{f.n} != {a.n}")
    return Arc(a.n, compose(f, a.beta), a.index)


def ends(a: Arc) -> frozenset[int]:
    """The two punctures the arc joins."""
    pi = permutation(a.beta)
    return frozenset((pi(a.index), pi(a.index + 1)))


def arcs_equal(a: Arc, b: Arc, budget: int | None = None) -> bool:
    """Isotopy of arcs, decided through equality of their half-twists."""
    if a.n != b.n:
        raise StrandMismatch(f"{a.n} != {b.n}")
    kwargs = {"budget": budget} if budget is not None else {}
    return wordproblem.equal(half_twist(a), half_twist(b), **kwargs)


def disjoint(a: Arc, b: Arc) -> bool:
    """True iff a and b are distinct arcs with disjoint representatives.

    Distinct arcs are disjoint exactly when their half-twists commute; equal
    arcs are excluded by convention.
    """
    if a.n != b.n:
        raise StrandMismatch(f"{a.n} != {b.n}")
    return wordproblem.commutes(half_twist(a), half_twist(b)) and not arcs_equal(a, b)


def adjacent(a: Arc, b: Arc) -> bool:
    """True iff a and b share exactly one end (and cross nowhere else).

    Distinct arcs are adjacent exactly when their half-twists satisfy the
    braid relation.
    """
    if a.n != b.n:
        raise StrandMismatch(f"{a.n} != {b.n}")
    return wordproblem.braid_related(half_twist(a), half_twist(b)) and not arcs_equal(
        a, b
    )


def fixes_arc(f: BraidWord, a: Arc) -> bool:
    """True iff f(a) = a, decided by commutation with the half-twist."""
    if f.n != a.n:
        raise StrandMismatch(f"{f.n} != {a.n}")
    return wordproblem.commutes(f, half_twist(a))
