import random
from fractions import Fraction

import pytest

from lgrdual.mutations import (
    BilinearLattice,
    NotSemiorthonormal,
    apply_word,
    decompose,
    dual_vectors,
    left_dual_basis,
    left_dual_by_mutation,
    left_mutation,
    random_unipotent_gram,
    recompose,
    right_mutation,
)
from oracles import rational_inverse

F = Fraction


def lattice(c):
    return BilinearLattice(((1, c), (0, 1)))


def test_gram_validation():
    with pytest.raises(ValueError):
        BilinearLattice(((2, 0), (0, 1)))
    with pytest.raises(ValueError):
        BilinearLattice(((1, 0), (1, 1)))
    with pytest.raises(ValueError):
        BilinearLattice(((1, 0, 0), (0, 1)))


def test_orthogonal_pair_is_swapped():
    L = BilinearLattice(((1, 0), (0, 1)))
    e = L.standard_basis()
    assert left_mutation(L, e, 0) == [e[1], e[0]]
    assert right_mutation(L, e, 0) == [e[1], e[0]]


def test_mutations_preserve_semiorthonormality_and_invert():
    L = lattice(3)
    e = L.standard_basis()
    lm = left_mutation(L, e, 0)
    assert lm == [(F(-3), F(1)), (F(1), F(0))]
    assert L.is_semiorthonormal(lm)
    assert right_mutation(L, lm, 0) == e
    assert left_mutation(L, right_mutation(L, e, 0), 0) == e


def test_mutation_errors():
    L = lattice(1)
    e = L.standard_basis()
    with pytest.raises(IndexError):
        left_mutation(L, e, 1)
    with pytest.raises(NotSemiorthonormal):
        left_mutation(L, [e[1], e[0]], 0)
    with pytest.raises(ValueError):
        apply_word(L, e, "X1")


def test_two_dimensional_dual():
    c = 5
    L = lattice(c)
    v1, v2 = L.standard_basis()
    u1, u2 = dual_vectors(L)
    assert u1 == (F(1), F(0)) and u2 == (F(-c), F(1))
    assert L.pair(v1, u1) == 1 and L.pair(v2, u1) == 0
    assert L.pair(v1, u2) == 0 and L.pair(v2, u2) == 1


def test_identity_gram_dual_is_basis():
    L = BilinearLattice(tuple(tuple(int(i == j) for j in range(4)) for i in range(4)))
    assert dual_vectors(L) == L.standard_basis()


@pytest.mark.parametrize("seed", range(100))
def test_random_lattices(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 6)
    L = random_unipotent_gram(m, rng)
    e = L.standard_basis()
    u = dual_vectors(L)
    assert L.pairing_matrix(e, u) == [[int(i == j) for j in range(m)] for i in range(m)]
    # independent oracle: u_j are the columns of G^{-1}
    inv = rational_inverse([list(r) for r in L.gram])
    assert u == [tuple(inv[i][j] for i in range(m)) for j in range(m)]
    assert left_dual_basis(L) == left_dual_by_mutation(L)
    assert L.is_semiorthonormal(left_dual_basis(L))
    v = tuple(F(rng.randint(-5, 5)) for _ in range(m))
    assert recompose(decompose(L, v), e) == v
    if m >= 3:
        for i in range(m - 2):
            w = f"L{i + 1} L{i + 2} L{i + 1}"
            assert apply_word(L, e, w) == apply_word(L, e, f"L{i + 2} L{i + 1} L{i + 2}")
            w = f"R{i + 1} R{i + 2} R{i + 1}"
            assert apply_word(L, e, w) == apply_word(L, e, f"R{i + 2} R{i + 1} R{i + 2}")
    if m >= 4:
        assert apply_word(L, e, "L1 L3") == apply_word(L, e, "L3 L1")
    if m >= 2:
        for i in range(m - 1):
            assert apply_word(L, e, f"L{i + 1} R{i + 1}") == e
            assert L.is_semiorthonormal(apply_word(L, e, f"L{i + 1}"))
