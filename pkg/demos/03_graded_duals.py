"""
K-classes of the graded dual bundles E^lam and F^lam
====================================================

E^lam is pinned down in equivariant K-theory by
chi_G(E^lam, Sigma^mu U^*) = delta(lam, mu) for mu inside lam; the system
is unitriangular, so back substitution gives its class. F^lam is the dual.
The pairing chi(E^lam, F^(mu^T)) = (-1)^|lam| delta(lam, mu) is then checked
over the h x (n-h) box.
"""

from lgrdual import YoungDiagram, diagrams_in_box, euler_pairing, kclass_E, kclass_F, verify_graded_dual
from lgrdual.ktheory import equivariant_euler_matrix, is_unitriangular, kclass_schur

n = 4
for rows in [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]:
    E = kclass_E(rows, n)
    print(f"[E^{YoungDiagram(rows)}] = {E}   rank {E.rank()}")

# the equivariant Euler matrix behind the solve
subs, M = equivariant_euler_matrix(YoungDiagram((2, 2)), n)
print("\nsubdiagrams of (2,2):", [str(s) for s in subs])
for s, row in zip(subs, M):
    print(f"  {str(s):6}", row)
print("unitriangular:", is_unitriangular(subs, M))

# the graded duality pairing over the 2 x 2 box
box = diagrams_in_box(2, 2)
print("\nchi(E^lam, F^(mu^T)) for lam, mu in the 2 x 2 box (rows lam, columns mu):")
for lam in box:
    print(f"  {str(lam):6}", [euler_pairing(kclass_E(lam, n), kclass_F(mu.transpose(), n)) for mu in box])

for h in range(n + 1):
    r = verify_graded_dual(h, n)
    print(f"h={h}: {r.checked} pairs, passed={r.passed}")
print("F^(1) =", kclass_F((1,), n), " Sigma^(1) U^* =", kclass_schur((1,), n))
