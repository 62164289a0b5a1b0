"""Borel-Bott-Weil on the Lagrangian Grassmannian LGr(n, 2n).

Weights here index ``Sigma^lam U`` for the tautological bundle ``U``
(not its dual). A bundle ``Sigma^alpha U^*`` has ``U``-weight
``-alpha = (-alpha_n, ..., -alpha_1)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .diagrams import YoungDiagram, frobenius, is_balanced
from .schur import GLWeight, SpWeight, sp_dimension

GradedSpCharacter = dict  # degree -> {SpWeight: multiplicity}


@dataclass(frozen=True)
class BBWResult:
    """Non-vanishing cohomology: one irreducible Sp-module in one degree."""

    degree: int
    weight: SpWeight

    @property
    def dimension(self) -> int:
        return sp_dimension(self.weight)


def lgr_dimension(n: int) -> int:
    return n * (n + 1) // 2


def rho(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def shifted_weight(lam: GLWeight) -> tuple[int, ...]:
    """``-lam + rho``, strictly decreasing for dominant ``lam``."""
    lam = GLWeight(lam)
    return tuple(a + r for a, r in zip(lam.dual(), rho(lam.n)))


def is_singular(vec) -> bool:
    """A vector is singular when some entry is zero or two entries share an
    absolute value."""
    absolute = [abs(x) for x in vec]
    if 0 in absolute:
        return True
    return len(set(absolute)) < len(absolute)


def bbw_weight(lam) -> BBWResult | None:
    """Cohomology of ``Sigma^lam U`` on LGr(n, 2n); ``None`` if it vanishes.

    With ``v = -lam + rho``: zero when ``v`` is singular, otherwise the
    module ``V<sort(|v|) - rho>`` sitting in degree
    ``#{i: v_i < 0} + #{i < j: v_i + v_j < 0}``.
    """
    lam = GLWeight(lam)
    v = shifted_weight(lam)
    if is_singular(v):
        return None
    n = lam.n
    degree = sum(1 for x in v if x < 0)
    degree += sum(1 for i in range(n) for j in range(i + 1, n) if v[i] + v[j] < 0)
    dominant = sorted((abs(x) for x in v), reverse=True)
    return BBWResult(degree, SpWeight(d - r for d, r in zip(dominant, rho(n))))


def cohomology(lam) -> GradedSpCharacter:
    """``H^*(LGr, Sigma^lam U)`` as ``{degree: {SpWeight: mult}}``."""
    res = bbw_weight(lam)
    if res is None:
        return {}
    return {res.degree: {res.weight: 1}}


def add_characters(acc: GradedSpCharacter, other: GradedSpCharacter, mult: int = 1) -> GradedSpCharacter:
    """Add ``mult`` copies of ``other`` into ``acc`` in place."""
    for k, part in other.items():
        slot = acc.setdefault(k, Counter())
        for w, m in part.items():
            slot[w] += mult * m
    return acc


def character_dimensions(char: GradedSpCharacter) -> dict[int, int]:
    return {k: sum(m * sp_dimension(w) for w, m in part.items()) for k, part in sorted(char.items())}


def vanishing_check(lam: YoungDiagram, n: int) -> tuple[bool, dict]:
    """Compare BBW for ``Sigma^lam U`` with the balanced-diagram prediction.

    Unbalanced diagrams in the ``n x (n+1)`` box have no cohomology; a
    balanced one with ``2t`` boxes has the trivial module in degree ``t``.
    """
    lam = YoungDiagram(lam)
    if not lam.fits(n, n + 1):
        raise ValueError(f"{lam} does not fit in a {n} x {n + 1} box")
    got = bbw_weight(GLWeight.from_diagram(lam, n))
    balanced = is_balanced(lam)
    if balanced:
        expected = BBWResult(lam.size // 2, SpWeight((0,) * n))
    else:
        expected = None
    detail = {
        "diagram": lam,
        "n": n,
        "balanced": balanced,
        "frobenius": frobenius(lam),
        "expected": expected,
        "computed": got,
    }
    return got == expected, detail
