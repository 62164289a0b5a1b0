"""Semiorthonormal bases of a lattice with a non-symmetric bilinear form.

Vectors are coordinate tuples of :class:`fractions.Fraction` in the
original basis ``e_1, ..., e_m``, on which the form has an upper
unitriangular Gram matrix ``G`` (``<e_i, e_i> = 1``, ``<e_j, e_i> = 0`` for
``j > i``). Mutations follow the linear-algebra sign convention:
``L_u v = v - <u, v> u`` and ``R_v u = u - <u, v> v``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


class NotSemiorthonormal(ValueError):
    pass


def _vec(v) -> Vector:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class BilinearLattice:
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        g = tuple(_vec(row) for row in self.gram)
        m = len(g)
        if any(len(row) != m for row in g):
            raise ValueError("Gram matrix must be square")
        for i in range(m):
            if g[i][i] != 1:
                raise ValueError(f"Gram diagonal must be 1, entry ({i},{i}) is {g[i][i]}")
            for j in range(i):
                if g[i][j] != 0:
                    raise ValueError(f"Gram matrix must be upper triangular, entry ({i},{j}) is {g[i][j]}")
        object.__setattr__(self, "gram", g)

    @property
    def dimension(self) -> int:
        return len(self.gram)

    def pair(self, u, v) -> Fraction:
        """``<u, v> = u^T G v``."""
        g = self.gram
        m = len(g)
        return sum((u[i] * g[i][j] * v[j] for i in range(m) for j in range(i, m) if u[i] and v[j]), Fraction(0))

    def standard_basis(self) -> list[Vector]:
        m = self.dimension
        return [tuple(Fraction(int(i == j)) for j in range(m)) for i in range(m)]

    def pairing_matrix(self, left: Sequence, right: Sequence) -> list[list[Fraction]]:
        return [[self.pair(u, v) for v in right] for u in left]

    def is_semiorthonormal(self, basis: Sequence) -> bool:
        for i, u in enumerate(basis):
            if self.pair(u, u) != 1:
                return False
            for j in range(i):
                if self.pair(u, basis[j]) != 0:
                    return False
        return True


def _combine(v, c, u) -> Vector:
    return tuple(a - c * b for a, b in zip(v, u))


def _check_pair(L: BilinearLattice, basis, i: int):
    if not 0 <= i < len(basis) - 1:
        raise IndexError(f"no adjacent pair at position {i} in a basis of length {len(basis)}")
    u, v = basis[i], basis[i + 1]
    if L.pair(u, u) != 1 or L.pair(v, v) != 1 or L.pair(v, u) != 0:
        raise NotSemiorthonormal(f"pair at position {i} is not semiorthonormal")


def left_mutation(L: BilinearLattice, basis: Sequence, i: int) -> list[Vector]:
    """Replace ``(v_i, v_(i+1))`` with ``(L_(v_i) v_(i+1), v_i)``; ``i`` is 0-based."""
    basis = [_vec(v) for v in basis]
    _check_pair(L, basis, i)
    u, v = basis[i], basis[i + 1]
    basis[i], basis[i + 1] = _combine(v, L.pair(u, v), u), u
    return basis


def right_mutation(L: BilinearLattice, basis: Sequence, i: int) -> list[Vector]:
    """Replace ``(v_i, v_(i+1))`` with ``(v_(i+1), R_(v_(i+1)) v_i)``; ``i`` is 0-based."""
    basis = [_vec(v) for v in basis]
    _check_pair(L, basis, i)
    u, v = basis[i], basis[i + 1]
    basis[i], basis[i + 1] = v, _combine(u, L.pair(u, v), v)
    return basis


def apply_word(L: BilinearLattice, basis: Sequence, word: str | Sequence[str]) -> list[Vector]:
    """Apply mutations given as tokens like ``"L1 R2 L1"``, left to right.

    Positions in tokens are 1-based: ``L1`` mutates the first two vectors.
    """
    tokens = word.split() if isinstance(word, str) else list(word)
    basis = [_vec(v) for v in basis]
    for tok in tokens:
        kind, pos = tok[:1].upper(), tok[1:]
        if kind not in ("L", "R") or not pos.isdigit():
            raise ValueError(f"bad mutation token {tok!r}; expected L<k> or R<k>")
        step = left_mutation if kind == "L" else right_mutation
        basis = step(L, basis, int(pos) - 1)
    return basis


def _solve(A: list[list[Fraction]], B: list[list[Fraction]]) -> list[list[Fraction]]:
    """Solve ``A X = B`` exactly by Gauss-Jordan elimination."""
    m = len(A)
    aug = [list(A[i]) + list(B[i]) for i in range(m)]
    for col in range(m):
        piv = next((r for r in range(col, m) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


def dual_vectors(L: BilinearLattice, basis: Sequence | None = None) -> list[Vector]:
    """Vectors ``u_1, ..., u_m`` with ``<v_i, u_j> = delta_ij``, by a linear solve."""
    basis = L.standard_basis() if basis is None else [_vec(v) for v in basis]
    m = L.dimension
    # rows of A: the functionals <v_i, ->, i.e. v_i^T G
    A = [[L.pair(v, e) for e in L.standard_basis()] for v in basis]
    ident = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    X = _solve(A, ident)
    return [tuple(X[r][j] for r in range(m)) for j in range(m)]


def left_dual_basis(L: BilinearLattice, basis: Sequence | None = None) -> list[Vector]:
    """The left dual basis ``(u_m, ..., u_1)`` in that (reversed) order."""
    return list(reversed(dual_vectors(L, basis)))


def left_dual_by_mutation(L: BilinearLattice, basis: Sequence | None = None) -> list[Vector]:
    """``(L_v1 ... L_v(m-1) v_m, ..., L_v1 v_2, v_1)`` computed by iterated mutation."""
    basis = L.standard_basis() if basis is None else [_vec(v) for v in basis]
    out = []
    for i in range(len(basis)):
        w = basis[i]
        for k in range(i - 1, -1, -1):
            w = _combine(w, L.pair(basis[k], w), basis[k])
        out.append(w)
    return list(reversed(out))


def decompose(L: BilinearLattice, v, basis: Sequence | None = None) -> list[Fraction]:
    """Coefficients ``<v, u_i>`` with ``v = sum_i <v, u_i> v_i``."""
    v = _vec(v)
    return [L.pair(v, u) for u in dual_vectors(L, basis)]


def recompose(coefficients: Sequence, basis: Sequence) -> Vector:
    m = len(basis[0])
    return tuple(sum((Fraction(c) * b[k] for c, b in zip(coefficients, basis)), Fraction(0)) for k in range(m))


def random_unipotent_gram(m: int, rng: random.Random, bound: int = 3) -> BilinearLattice:
    """Upper unitriangular integer Gram matrix with entries in ``[-bound, bound]``."""
    rows = [[1 if i == j else (rng.randint(-bound, bound) if j > i else 0) for j in range(m)] for i in range(m)]
    return BilinearLattice(tuple(tuple(r) for r in rows))
