"""Braid words over the Artin presentation.

A braid on n strands is stored as a word in the generators s_1 .. s_{n-1},
encoded as a sequence of signed indices (+j for s_j, -j for its inverse).
Words are kept freely reduced at all times.  Products use functional order
throughout the library: in u*v the right factor v acts first.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

from .errors import StrandMismatch, UnsupportedParameters


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Delete adjacent (j, -j) pairs until none remain."""
    out: list[int] = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A freely reduced word in the Artin generators of the braid group B_n."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise UnsupportedParameters(f"strand count must be >= 2, got {self.n}")
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.n:
                raise UnsupportedParameters(
                    f"letter {letter} out of range for {self.n} strands"
                )
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def inv(self) -> "BraidWord":
        return invert(self)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return f"{self.n}; " + " ".join(str(l) for l in self.letters)


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def generator(n: int, i: int) -> BraidWord:
    """The generator s_i (or its inverse for negative i) in B_n."""
    return BraidWord(n, (i,))


def compose(u: BraidWord, v: BraidWord) -> BraidWord:
    """The product u*v (v acts first), freely reduced."""
    if u.n != v.n:
        raise StrandMismatch(f"{u.n} != {v.n}")
    return BraidWord(u.n, u.letters + v.letters)


def invert(u: BraidWord) -> BraidWord:
    return BraidWord(u.n, tuple(-l for l in reversed(u.letters)))


def conjugate(f: BraidWord, g: BraidWord) -> BraidWord:
    """f * g * f^-1, freely reduced."""
    if f.n != g.n:
        raise StrandMismatch(f"{f.n} != {g.n}")
    return BraidWord(f.n, f.letters + g.letters + invert(f).letters)


def power(u: BraidWord, k: int) -> BraidWord:
    base = u if k >= 0 else invert(u)
    return BraidWord(u.n, base.letters * abs(k))


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; images[i-1] is the image of i."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise UnsupportedParameters(f"not a permutation of 1..{self.n}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        """Swap i and i+1."""
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(n, tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Functional composition: (self . other)(x) = self(other(x))."""
        if self.n != other.n:
            raise StrandMismatch(f"{self.n} != {other.n}")
        return Permutation(self.n, tuple(self(other(x)) for x in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for x in range(1, self.n + 1):
            images[self(x) - 1] = x
        return Permutation(self.n, tuple(images))

    def fixed_points(self) -> set[int]:
        return {x for x in range(1, self.n + 1) if self(x) == x}

    def is_identity(self) -> bool:
        return all(self(x) == x for x in range(1, self.n + 1))


def permutation(u: BraidWord) -> Permutation:
    """Puncture permutation induced by u.

    Each letter +-i contributes the transposition (i, i+1); letters compose
    functionally (the last letter of the word acts first), so this map is a
    homomorphism for the product convention above.
    """
    acc = Permutation.identity(u.n)
    for letter in u.letters:
        acc = acc.compose(Permutation.transposition(u.n, abs(letter)))
    return acc


def exponent_sum(u: BraidWord) -> int:
    """Sum of letter signs; the length homomorphism to the integers."""
    return sum(1 if l > 0 else -1 for l in u.letters)


def is_pure(u: BraidWord) -> bool:
    return permutation(u).is_identity()


def fixed_punctures(u: BraidWord) -> set[int]:
    return permutation(u).fixed_points()


DISTINGUISHED_KINDS = ("delta", "gamma", "half_twist_all", "full_twist")


@dataclasses.dataclass(frozen=True)
class DistinguishedElement:
    """One of the classical roots of the full twist, or the twist itself.

    delta(n)^n = gamma(n)^(n-1) = half_twist_all(n)^2 = full_twist(n) hold as
    group elements; the test suite verifies them through the word problem.
    """

    kind: str
    n: int
    word: BraidWord


def _half_twist_letters(n: int) -> tuple[int, ...]:
    # s_1 (s_2 s_1) (s_3 s_2 s_1) ... : the positive half-twist of all strands.
    letters: list[int] = []
    for r in range(1, n):
        letters.extend(range(r, 0, -1))
    return tuple(letters)


def distinguished(kind: str, n: int) -> DistinguishedElement:
    if n < 3:
        raise UnsupportedParameters(f"distinguished elements need n >= 3, got {n}")
    if kind == "delta":
        word = BraidWord(n, tuple(range(1, n)))
    elif kind == "gamma":
        word = BraidWord(n, (1,) + tuple(range(1, n)))
    elif kind == "half_twist_all":
        word = BraidWord(n, _half_twist_letters(n))
    elif kind == "full_twist":
        word = BraidWord(n, _half_twist_letters(n) * 2)
    else:
        raise UnsupportedParameters(f"unknown kind {kind!r}")
    return DistinguishedElement(kind, n, word)


def full_twist(n: int) -> BraidWord:
    """The generator z of the center of B_n."""
    return distinguished("full_twist", n).word


def parse_word(text: str) -> BraidWord:
    """Parse `n; l1 l2 ... lk` (empty letter list allowed)."""
    head, sep, tail = text.partition(";")
    if not sep:
        raise UnsupportedParameters(f"missing ';' in braid word {text!r}")
    try:
        n = int(head.strip())
        letters = tuple(int(tok) for tok in tail.split())
    except ValueError as exc:
        raise UnsupportedParameters(f"bad braid word {text!r}") from exc
    return BraidWord(n, letters)


def format_word(u: BraidWord) -> str:
    return str(u)
