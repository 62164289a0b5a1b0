"""
Mutations and dual bases in a lattice with a non-symmetric form
===============================================================

For a semiorthonormal basis (upper unitriangular Gram matrix) the left
mutation replaces (v_i, v_(i+1)) by (v_(i+1) - <v_i, v_(i+1)> v_i, v_i).
Mutations satisfy the braid relations, and iterating them produces the
left dual basis.
"""

import random

from lgrdual import BilinearLattice, decompose, left_dual_basis
from lgrdual.mutations import apply_word, left_dual_by_mutation, random_unipotent_gram, recompose

L = BilinearLattice(((1, 2, -1), (0, 1, 3), (0, 0, 1)))
e = L.standard_basis()


def fmt(vs):
    return [[str(x) for x in v] for v in vs]


print("L1 applied to the standard basis:", fmt(apply_word(L, e, "L1")))
print("L1 L2 L1 == L2 L1 L2:", apply_word(L, e, "L1 L2 L1") == apply_word(L, e, "L2 L1 L2"))
print("L1 then R1 is the identity:", apply_word(L, e, "L1 R1") == e)

dual = left_dual_basis(L)
print("\nleft dual basis:", fmt(dual))
print("agrees with the mutation formula:", dual == left_dual_by_mutation(L))
print("pairing <v_i, u_j>:", fmt(L.pairing_matrix(e, list(reversed(dual)))))

# expand a vector in the mutated basis (L1 applied to e)
v = (4, -1, 2)
basis = apply_word(L, e, "L1")
coeffs = decompose(L, v, basis)
print(f"\ncoefficients of {v} in the basis {fmt(basis)}:", [str(c) for c in coeffs])
print("recomposed:", [str(x) for x in recompose(coeffs, basis)])

rng = random.Random(0)
agree = sum(left_dual_basis(g) == left_dual_by_mutation(g) for g in (random_unipotent_gram(6, rng) for _ in range(50)))
print(f"random 6 x 6 Gram matrices where both dual-basis computations agree: {agree}/50")
