"""Linear word-problem backend: the faithful n(n-1)/2-dimensional
representation of B_n over Z[q^{±1}, t^{±1}].

Matrix entries are two-variable Laurent polynomials with exact integer
coefficients, stored as {(q_exp, t_exp): coeff} dicts.  Equality queries run
a fast evaluation of both matrices at a fixed integer point modulo a prime
first; an "unequal" verdict from that filter is accepted as is, while an
"equal" verdict is confirmed with the exact symbolic matrices.

The generator action on the basis x_{r,s} (1 <= r < s <= n) is

    s_i x_{r,s} = x_{r,s}                                  i < r-1 or i > s
                  x_{r-1,s} + (1-q) x_{r,s}                i = r-1
                  t q (q-1) x_{r,r+1} + q x_{r+1,s}        i = r < s-1
                  t q^2 x_{r,s}                            i = r = s-1
                  x_{r,s} + t q^{s-r} (q-1)^2 x_{i,i+1}    r < i < s-1
                  x_{r,s-1} + t q^{s-r} (q-1) x_{s-1,s}    i = s-1 > r
                  (1-q) x_{r,s} + q x_{r,s+1}              i = s

and inverse letters act by the inverse matrices, obtained by solving the
local systems above (tests confirm G * G^-1 = 1 and the braid relations).
"""

from __future__ import annotations

import functools

from .errors import StrandMismatch
from .words import BraidWord

Poly = dict[tuple[int, int], int]

# Fixed evaluation point for the modular pre-filter.
_FILTER_PRIME = (1 << 31) - 1
_FILTER_Q = 1234571
_FILTER_T = 7654321


def p_zero() -> Poly:
    return {}

def p_const(c: int) -> Poly:
    return {(0, 0): c} if c else {}

def p_mono(c: int, eq: int, et: int) -> Poly:
    return {(eq, et): c} if c else {}

def p_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for key, c in b.items():
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out

def p_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for (qa, ta), ca in a.items():
        for (qb, tb), cb in b.items():
            key = (qa + qb, ta + tb)
            s = out.get(key, 0) + ca * cb
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out

def p_eval_mod(a: Poly, qv: int, tv: int, p: int) -> int:
    qinv = pow(qv, -1, p)
    tinv = pow(tv, -1, p)
    total = 0
    for (eq, et), c in a.items():
        term = c % p
        term = term * pow(qv if eq >= 0 else qinv, abs(eq), p) % p
        term = term * pow(tv if et >= 0 else tinv, abs(et), p) % p
        total = (total + term) % p
    return total


def _basis(n: int) -> list[tuple[int, int]]:
    return [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]


@functools.cache
def _basis_index(n: int) -> dict[tuple[int, int], int]:
    return {jk: idx for idx, jk in enumerate(_basis(n))}


# q-exponents of the x_{i,i+1} correction terms; pinned down by requiring the
# braid relations to hold (checked exhaustively in the tests).
def _MID_EXP(r: int, s: int, i: int) -> int:
    return i - r


def _END_EXP(r: int, s: int, i: int) -> int:
    return s - r


def _generator_columns(n: int, letter: int) -> list[list[tuple[int, Poly]]]:
    """Sparse columns of the matrix of one letter: cols[c] = [(row, poly)]."""
    index = _basis_index(n)
    i = abs(letter)
    cols: list[list[tuple[int, Poly]]] = []
    for (r, s) in _basis(n):
        image: list[tuple[tuple[int, int], Poly]] = []
        if letter > 0:
            if i < r - 1 or i > s:
                image = [((r, s), p_const(1))]
            elif i == r - 1:
                image = [
                    ((r - 1, s), p_const(1)),
                    ((r, s), p_add(p_const(1), p_mono(-1, 1, 0))),
                ]
            elif i == r and i == s - 1:
                image = [((r, s), p_mono(1, 2, 1))]
            elif i == r:  # r < s - 1
                image = [
                    ((r, r + 1), p_add(p_mono(1, 2, 1), p_mono(-1, 1, 1))),
                    ((r + 1, s), p_mono(1, 1, 0)),
                ]
            elif r < i < s - 1:
                e = _MID_EXP(r, s, i)
                image = [
                    ((r, s), p_const(1)),
                    ((i, i + 1), {(e + 2, 1): 1, (e + 1, 1): -2, (e, 1): 1}),
                ]
            elif i == s - 1:  # > r
                e = _END_EXP(r, s, i)
                image = [
                    ((r, s - 1), p_const(1)),
                    ((s - 1, s), {(e + 1, 1): 1, (e, 1): -1}),
                ]
            else:  # i == s
                image = [
                    ((r, s), p_add(p_const(1), p_mono(-1, 1, 0))),
                    ((r, s + 1), p_mono(1, 1, 0)),
                ]
        else:
            if i < r - 1 or i > s:
                image = [((r, s), p_const(1))]
            elif r == i and s == i + 1:
                image = [((r, s), p_mono(1, -2, -1))]
            elif r == i + 1:  # s > i + 1
                image = [
                    ((i, s), p_mono(1, -1, 0)),
                    ((i, i + 1), p_add(p_mono(1, -2, 0), p_mono(-1, -1, 0))),
                ]
            elif r == i:  # s > i + 1
                image = [
                    ((i, s), p_add(p_const(1), p_mono(-1, -1, 0))),
                    ((i + 1, s), p_const(1)),
                    ((i, i + 1), {(0, 0): -1, (-1, 0): 2, (-2, 0): -1}),
                ]
            elif r < i < s - 1:
                e = _MID_EXP(r, s, i)
                image = [
                    ((r, s), p_const(1)),
                    ((i, i + 1), {(e, 0): -1, (e - 1, 0): 2, (e - 2, 0): -1}),
                ]
            elif s == i + 1:  # r < i
                e = _END_EXP(r, s, i)
                image = [
                    ((r, i), p_mono(1, -1, 0)),
                    ((r, i + 1), p_add(p_const(1), p_mono(-1, -1, 0))),
                    ((i, i + 1), {(e - 1, 0): -1, (e - 2, 0): 2, (e - 3, 0): -1}),
                ]
            else:  # s == i, r < i
                e = _END_EXP(r, s + 1, i)
                image = [
                    ((r, i + 1), p_const(1)),
                    ((i, i + 1), {(e - 1, 0): -1, (e - 2, 0): 1}),
                ]
        image = [(rc, poly) for rc, poly in image if poly]
        cols.append([(index[rc], poly) for rc, poly in image])
    return cols


@functools.cache
def _generator_columns_cached(n: int, letter: int):
    return _generator_columns(n, letter)


class LaurentMatrix:
    """A square matrix of Laurent polynomials of dimension n(n-1)/2."""

    def __init__(self, n: int, rows: list[list[Poly]]):
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        dim = n * (n - 1) // 2
        rows = [[p_const(1) if r == c else {} for c in range(dim)] for r in range(dim)]
        return cls(n, rows)

    def is_identity(self) -> bool:
        dim = len(self.rows)
        for r in range(dim):
            for c in range(dim):
                want = {(0, 0): 1} if r == c else {}
                if self.rows[r][c] != want:
                    return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentMatrix)
            and self.n == other.n
            and self.rows == other.rows
        )

    def right_multiply_letter(self, letter: int) -> "LaurentMatrix":
        cols = _generator_columns_cached(self.n, letter)
        dim = len(self.rows)
        out = [[p_zero() for _ in range(dim)] for _ in range(dim)]
        for c, col in enumerate(cols):
            for r in range(dim):
                acc: Poly = {}
                row = self.rows[r]
                for k, poly in col:
                    acc = p_add(acc, p_mul(row[k], poly))
                out[r][c] = acc
        return LaurentMatrix(self.n, out)


def lk_matrix(u: BraidWord) -> LaurentMatrix:
    """The exact matrix of a braid word (product of letter matrices in word order)."""
    mat = LaurentMatrix.identity(u.n)
    for letter in u.letters:
        mat = mat.right_multiply_letter(letter)
    return mat


def lk_matrix_mod(u: BraidWord, qv: int = _FILTER_Q, tv: int = _FILTER_T,
                  p: int = _FILTER_PRIME) -> list[list[int]]:
    """The matrix evaluated at an integer point modulo a prime."""
    dim = u.n * (u.n - 1) // 2
    mat = [[1 if r == c else 0 for c in range(dim)] for r in range(dim)]
    for letter in u.letters:
        cols = _generator_columns_cached(u.n, letter)
        num_cols = [
            [(k, p_eval_mod(poly, qv, tv, p)) for k, poly in col] for col in cols
        ]
        out = [[0] * dim for _ in range(dim)]
        for c, col in enumerate(num_cols):
            for r in range(dim):
                row = mat[r]
                acc = 0
                for k, val in col:
                    acc += row[k] * val
                out[r][c] = acc % p
        mat = out
    return mat


def lk_equal(u: BraidWord, v: BraidWord, seed: int | None = None) -> bool:
    """Linear-backend equality: modular filter, then exact confirmation.

    A seed may shift the filter's evaluation point; the final verdict never
    depends on it because "equal" filter outcomes are re-checked exactly.
    """
    if u.n != v.n:
        raise StrandMismatch(f"{u.n} != {v.n}")
    qv, tv = _FILTER_Q, _FILTER_T
    if seed is not None:
        qv = 2 + (seed * 2654435761 + 1) % (_FILTER_PRIME - 3)
        tv = 2 + (seed * 40503 + 12345) % (_FILTER_PRIME - 3)
    if lk_matrix_mod(u, qv, tv) != lk_matrix_mod(v, qv, tv):
        return False
    return lk_matrix(u) == lk_matrix(v)
