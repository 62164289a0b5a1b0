"""Resolutions of ``Sigma^lam U^*`` by sums of the bundles ``E^nu``.

Term ``t`` is the sum over balanced ``mu`` with ``2t`` boxes of
``E^(lam/mu)``, which expands into ``E^nu`` with multiplicity
``c(nu, mu; lam)``. Only the terms and their K-theoretic consequences are
modelled; the differentials are not.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .diagrams import YoungDiagram, enumerate_balanced, grlex_key, is_balanced, transpose
from .ktheory import KClass, euler_pairing, kclass_E, kclass_F, kclass_schur
from .schur import lr_coefficient, skew_decompose


@dataclass(frozen=True)
class ResolutionTerm:
    t: int
    summands: dict  # YoungDiagram -> multiplicity

    def kclass(self, n: int) -> KClass:
        acc = KClass.zero(n)
        for nu, m in self.summands.items():
            acc = acc + m * kclass_E(nu, n)
        return acc


@dataclass(frozen=True)
class Resolution:
    lam: YoungDiagram
    h: int
    n: int
    terms: tuple[ResolutionTerm, ...]

    @property
    def length(self) -> int:
        return len(self.terms) - 1


def _check_box(lam: YoungDiagram, h: int, n: int):
    if not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got h={h}, n={n}")
    if not lam.fits(h, n - h):
        raise ValueError(f"{lam} does not fit in the {h} x {n - h} box")


def resolution_term(lam: YoungDiagram, t: int) -> dict[YoungDiagram, int]:
    """Expansion of the sum of ``E^(lam/mu)`` over balanced ``mu`` with ``2t`` boxes."""
    acc: Counter = Counter()
    for mu in enumerate_balanced(2 * t, max_height=lam.height, max_width=lam.width):
        for nu, c in skew_decompose(lam, mu).items():
            acc[nu] += c
    return {nu: acc[nu] for nu in sorted(acc, key=grlex_key) if acc[nu]}


def build_resolution(lam, h: int, n: int) -> Resolution:
    lam = YoungDiagram(lam)
    _check_box(lam, h, n)
    terms = [ResolutionTerm(t, resolution_term(lam, t)) for t in range(h * (h + 1) // 2 + 1)]
    while len(terms) > 1 and not terms[-1].summands:
        terms.pop()
    return Resolution(lam, h, n, tuple(terms))


def resolution_kclass(r: Resolution) -> KClass:
    """Alternating sum of the term classes."""
    acc = KClass.zero(r.n)
    for term in r.terms:
        acc = acc + (-1) ** term.t * term.kclass(r.n)
    return acc


def verify_k_exactness(r: Resolution) -> bool:
    """The alternating sum of the terms equals ``[Sigma^lam U^*]``."""
    return resolution_kclass(r) == kclass_schur(r.lam, r.n)


def e1_page(lam, h: int, n: int) -> dict[tuple[int, int], dict[YoungDiagram, int]]:
    """Non-zero entries of the first page: term ``t`` sits at
    ``(-|lam| + t, |lam| - 2t)``."""
    r = build_resolution(lam, h, n)
    size = r.lam.size
    return {(-size + term.t, size - 2 * term.t): dict(term.summands) for term in r.terms if term.summands}


def ext_schur_vs_dualF(lam, mu, h: int, n: int) -> dict[int, int]:
    """Dimensions of ``Ext^*(Sigma^lam U^*, F^mu)`` for ``lam`` in the
    ``h x (n-h)`` box and ``mu`` in the ``(n-h) x h`` box.

    Non-zero only in degree ``|mu| + j`` with ``2j = |lam| - |mu|``, where
    it equals the sum over balanced ``nu`` with ``2j`` boxes of
    ``c(mu^T, nu; lam)``.
    """
    lam, mu = YoungDiagram(lam), YoungDiagram(mu)
    _check_box(lam, h, n)
    if not mu.fits(n - h, h):
        raise ValueError(f"{mu} does not fit in the {n - h} x {h} box")
    diff = lam.size - mu.size
    if diff < 0 or diff % 2:
        return {}
    j = diff // 2
    mu_t = transpose(mu)
    total = sum(lr_coefficient(mu_t, nu, lam) for nu in enumerate_balanced(2 * j))
    return {mu.size + j: total} if total else {}


def spectral_euler_rank(lam, h: int, n: int) -> int:
    """``sum_(p,q) (-1)^(p+q) rank(E^1_pq)``."""
    total = 0
    for (p, q), entry in e1_page(lam, h, n).items():
        total += (-1) ** (p + q) * sum(m * kclass_E(nu, n).rank() for nu, m in entry.items())
    return total


def dualF_euler(lam, mu, n: int) -> int:
    """``chi(Sigma^lam U^*, F^mu)`` from K-classes, for cross-checking."""
    return euler_pairing(kclass_schur(lam, n), kclass_F(mu, n))


def balanced_inside(lam) -> list[YoungDiagram]:
    """Balanced diagrams contained in ``lam``."""
    from .diagrams import subdiagrams

    return [mu for mu in subdiagrams(lam) if is_balanced(mu)]
