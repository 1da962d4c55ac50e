"""Exact word-problem queries via the faithful action on a free group.

A braid on n strands acts on the free group F_n = <x_1 .. x_n>; a word is
trivial iff its action is the identity automorphism.  The generator action
used everywhere is

    s_i:  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,   others fixed,

with inverse letters acting by the inverse substitution.  The product
x_1 x_2 ... x_n is preserved, and the relation/commutation behaviour of the
action is pinned down by the test suite.

An optional linear backend (see linrep) can be consulted alongside; the two
must agree, and a mismatch raises BackendDisagreement.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .errors import BackendDisagreement, BudgetExceeded, StrandMismatch
from .words import BraidWord, compose, generator, invert

DEFAULT_LETTER_BUDGET = 2_000_000

FreeLetters = tuple[int, ...]


def free_reduce(letters: Sequence[int]) -> FreeLetters:
    out: list[int] = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def free_mul(*words: Sequence[int]) -> FreeLetters:
    merged: list[int] = []
    for w in words:
        for letter in w:
            if merged and merged[-1] == -letter:
                merged.pop()
            else:
                merged.append(letter)
    return tuple(merged)


def free_inv(word: Sequence[int]) -> FreeLetters:
    return tuple(-l for l in reversed(word))


@dataclasses.dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in the free group of the given rank."""

    rank: int
    letters: FreeLetters

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))


@dataclasses.dataclass(frozen=True)
class ArtinAuto:
    """An automorphism of F_n given by the images of the generators."""

    rank: int
    images: tuple[FreeLetters, ...]

    @classmethod
    def identity(cls, rank: int) -> "ArtinAuto":
        return cls(rank, tuple((i,) for i in range(1, rank + 1)))

    def is_identity(self) -> bool:
        return all(im == (i + 1,) for i, im in enumerate(self.images))

    def apply(self, word: Sequence[int]) -> FreeLetters:
        """Image of a free word under the automorphism."""
        pieces = []
        for letter in word:
            im = self.images[abs(letter) - 1]
            pieces.append(im if letter > 0 else free_inv(im))
        return free_mul(*pieces)

    def compose(self, other: "ArtinAuto") -> "ArtinAuto":
        """(self . other): apply other first, then self."""
        return ArtinAuto(self.rank, tuple(self.apply(im) for im in other.images))


def artin_image(u: BraidWord, budget: int = DEFAULT_LETTER_BUDGET) -> ArtinAuto:
    """The automorphism of F_n induced by the braid word u.

    Letters are folded in word order; each step only rewrites the two images
    at the acting index, so the cost tracks the size of the images rather
    than the rank.
    """
    images = [(i,) for i in range(1, u.n + 1)]
    total = u.n
    for letter in u.letters:
        i = abs(letter) - 1
        a, b = images[i], images[i + 1]
        if letter > 0:
            images[i] = free_mul(a, b, free_inv(a))
            images[i + 1] = a
        else:
            images[i] = b
            images[i + 1] = free_mul(free_inv(b), a, b)
        total += len(images[i]) + len(images[i + 1]) - len(a) - len(b)
        if total > budget:
            raise BudgetExceeded(
                f"free-group images exceeded {budget} letters while applying {letter}"
            )
    return ArtinAuto(u.n, tuple(images))


def _free_equal(u: BraidWord, v: BraidWord, budget: int) -> bool:
    return artin_image(u, budget).images == artin_image(v, budget).images


def equal(
    u: BraidWord,
    v: BraidWord,
    backend: str = "free",
    budget: int = DEFAULT_LETTER_BUDGET,
) -> bool:
    """Decide whether u and v are the same element of B_n.

    backend is one of "free", "linear", "both"; with "both" the two backends
    are consulted and a mismatch raises BackendDisagreement.
    """
    if u.n != v.n:
        raise StrandMismatch(f"{u.n} != {v.n}")
    if backend == "free":
        return _free_equal(u, v, budget)
    from . import linrep  # deferred: the linear backend is optional machinery

    if backend == "linear":
        return linrep.lk_equal(u, v)
    if backend == "both":
        free_verdict = _free_equal(u, v, budget)
        linear_verdict = linrep.lk_equal(u, v)
        if free_verdict != linear_verdict:
            raise BackendDisagreement(
                f"free={free_verdict} linear={linear_verdict} for {u} vs {v}"
            )
        return free_verdict
    raise ValueError(f"unknown backend {backend!r}")


def commutes(
    u: BraidWord,
    v: BraidWord,
    backend: str = "free",
    budget: int = DEFAULT_LETTER_BUDGET,
) -> bool:
    """True iff uv = vu."""
    return equal(compose(u, v), compose(v, u), backend=backend, budget=budget)


def braid_related(
    u: BraidWord,
    v: BraidWord,
    backend: str = "free",
    budget: int = DEFAULT_LETTER_BUDGET,
) -> bool:
    """True iff uvu = vuv."""
    uvu = compose(compose(u, v), u)
    vuv = compose(compose(v, u), v)
    return equal(uvu, vuv, backend=backend, budget=budget)


def is_central(
    u: BraidWord,
    backend: str = "free",
    budget: int = DEFAULT_LETTER_BUDGET,
) -> bool:
    """True iff u commutes with every generator."""
    return all(
        commutes(u, generator(u.n, i), backend=backend, budget=budget)
        for i in range(1, u.n)
    )
