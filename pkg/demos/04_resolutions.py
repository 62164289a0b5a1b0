"""
Resolutions of Sigma^lam U^* by the bundles E^nu
================================================

Term t of the resolution is the sum, over balanced mu with 2t boxes inside
lam, of E^(lam/mu) = sum_nu c(nu, mu; lam) E^nu. The alternating sum of the
term classes reproduces [Sigma^lam U^*].
"""

from lgrdual import YoungDiagram, build_resolution, e1_page, ext_schur_vs_dualF, verify_k_exactness
from lgrdual.diagrams import diagrams_in_box


def show(lam, h, n):
    r = build_resolution(YoungDiagram(lam), h, n)
    terms = "  <-  ".join(" + ".join(f"{m}*E^{nu}" if m > 1 else f"E^{nu}" for nu, m in t.summands.items()) for t in r.terms)
    print(f"Sigma^{r.lam} U^* on LGr({n},{2 * n}):  {terms}   K-exact: {verify_k_exactness(r)}")


show((3,), 1, 4)       # height one: 0 -> E^(p-2) -> E^(p) -> S^p U^* -> 0
show((1, 1, 1), 3, 4)  # a column: no non-trivial balanced diagram fits
show((3, 1), 2, 5)     # 0 -> O -> E^(2) + E^(1,1) -> E^(3,1) -> Sigma^(3,1) U^* -> 0

print("\nE1 page for (3,1):")
for (p, q), entry in e1_page(YoungDiagram((3, 1)), 2, 5).items():
    print(f"  E1[{p},{q}] =", {str(k): v for k, v in entry.items()})

print("\nExt^*(Sigma^(3,1) U^*, F^mu) on LGr(5,10):")
for mu in diagrams_in_box(3, 2):
    dims = ext_schur_vs_dualF(YoungDiagram((3, 1)), mu, 2, 5)
    if dims:
        print(f"  mu={mu}: {dims}")

checked = failures = 0
for n in range(1, 6):
    for h in range(n + 1):
        for lam in diagrams_in_box(h, n - h):
            checked += 1
            failures += not verify_k_exactness(build_resolution(lam, h, n))
print(f"\nK-exactness over all boxes with n <= 5: {checked} resolutions, {failures} failures")
