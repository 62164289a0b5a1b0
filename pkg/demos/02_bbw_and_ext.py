"""
Borel-Bott-Weil on the Lagrangian Grassmannian
==============================================

Cohomology of Sigma^lam U on LGr(n, 2n) is computed from v = -lam + rho:
it vanishes if some entry is zero or two entries share an absolute value,
and is otherwise one irreducible Sp_2n-module. Ext groups between
Sigma^alpha U^* and Sigma^beta U^* follow by decomposing the tensor product.
"""

from lgrdual import GLWeight, YoungDiagram, bbw_weight, cohomology, ext_schur_pair, vanishing_check

# a few line bundles and tautological bundles on LGr(2, 4)
for w in [(0, 0), (1, 0), (2, 0), (3, 1), (0, -2), (-1, -1)]:
    res = bbw_weight(GLWeight(w))
    text = "0" if res is None else f"V<{','.join(map(str, res.weight))}> in degree {res.degree} (dim {res.dimension})"
    print(f"H^*(Sigma^{list(w)} U) = {text}")

# vanishing: inside the n x (n+1) box only balanced diagrams
# have cohomology, namely the trivial module in degree |lam|/2
n = 3
for rows in [(1,), (2,), (2, 1), (3, 1), (3, 3), (4, 1, 1)]:
    ok, detail = vanishing_check(YoungDiagram(rows), n)
    print(f"n={n} {str(YoungDiagram(rows)):8} balanced={detail['balanced']!s:5} computed={detail['computed']} ok={ok}")

# Ext between Schur functors of U^*: the universal extension of S^2 U^* by O
t = ext_schur_pair(YoungDiagram((2,)), YoungDiagram(()), 3)
print("\nExt^*(S^2 U^*, O) on LGr(3,6):", t.dims, "equivariant part:", t.equivariant_dims)
t = ext_schur_pair(YoungDiagram(()), YoungDiagram((2,)), 2)
print("Ext^*(O, S^2 U^*) on LGr(2,4):", cohomology(GLWeight((0, -2))), "dims", t.dims)
