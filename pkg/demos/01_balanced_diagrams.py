"""
Balanced diagrams and exterior powers of S^2
============================================

A diagram is balanced when every diagonal box has arm one longer than its
leg, i.e. Frobenius coordinates (b_1+1, ..., b_s+1 | b_1, ..., b_s).
Balanced diagrams with 2t boxes index the summands of Lambda^t(S^2 E).
"""

from math import comb

from lgrdual import YoungDiagram, enumerate_balanced, frobenius, gl_dimension, is_balanced

# Frobenius coordinates read off the diagonal
lam = YoungDiagram((3, 2, 2, 1))
print(lam, "has Frobenius coordinates", frobenius(lam), "and rank", lam.rank)

# (2) and (3,1) are balanced, (2,2) is not
for rows in [(2,), (3, 1), (2, 2), (3, 3)]:
    d = YoungDiagram(rows)
    print(f"{d!s:8} balanced={is_balanced(d)}  frobenius={frobenius(d)}")

# B_{2t} for small t
for t in range(5):
    print(f"B_{2 * t}:", ", ".join(str(d) for d in enumerate_balanced(2 * t)))

# Lambda^t(S^2 E) = sum over B_{2t} of Sigma^lam E: compare dimensions
m = 4
print(f"\ndim E = {m}: t, dim Lambda^t(S^2 E), sum of dim Sigma^lam E")
for t in range(7):
    total = sum(gl_dimension(d, m) for d in enumerate_balanced(2 * t))
    print(f"  {t}  {comb(m * (m + 1) // 2, t):>4}  {total:>4}")
