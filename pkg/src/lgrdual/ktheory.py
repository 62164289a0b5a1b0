"""Formal K-classes in the basis ``[Sigma^alpha U^*]`` and Euler pairings.

The equivariant K-group of LGr(n, 2n) is free on the classes of the
irreducible bundles, so identities between classes are checked
coefficientwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ._cache import memoize
from .diagrams import YoungDiagram, contains, diagrams_in_box, grlex_key, subdiagrams, transpose
from .ext import as_weight, ext_schur_pair
from .schur import GLWeight, gl_dimension


class KClass:
    """A finite integer combination of classes ``[Sigma^alpha U^*]``."""

    __slots__ = ("n", "terms")

    def __init__(self, terms: Mapping | Iterable = (), n: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Counter = Counter()
        for w, c in items:
            w = as_weight(w, n) if n is not None else GLWeight(w)
            if n is None:
                n = w.n
            elif w.n != n:
                raise ValueError(f"weight {w} does not have length {n}")
            acc[w] += int(c)
        if n is None:
            raise ValueError("n is required for an empty class")
        self.n = n
        self.terms = {w: acc[w] for w in sorted(acc, reverse=True) if acc[w]}

    @classmethod
    def schur(cls, alpha, n: int | None = None) -> "KClass":
        w = as_weight(alpha, n)
        return cls({w: 1}, w.n)

    @classmethod
    def zero(cls, n: int) -> "KClass":
        return cls({}, n)

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*{w}" for w, c in self.terms.items()) or "0"
        return f"KClass({inner})"

    def __eq__(self, other) -> bool:
        return isinstance(other, KClass) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def _check(self, other: "KClass"):
        if not isinstance(other, KClass):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"classes on different Grassmannians: n={self.n}, n={other.n}")
        return None

    def __add__(self, other: "KClass") -> "KClass":
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = Counter(self.terms)
        acc.update(other.terms)
        return KClass(acc, self.n)

    def __neg__(self) -> "KClass":
        return KClass({w: -c for w, c in self.terms.items()}, self.n)

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def __mul__(self, k: int) -> "KClass":
        return KClass({w: k * c for w, c in self.terms.items()}, self.n)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, alpha) -> int:
        return self.terms.get(as_weight(alpha, self.n), 0)

    def dual(self) -> "KClass":
        """``[Sigma^alpha U^*] -> [Sigma^(-alpha) U^*]``, i.e. linear duality."""
        return KClass({w.dual(): c for w, c in self.terms.items()}, self.n)

    def rank(self) -> int:
        return sum(c * gl_dimension(w) for w, c in self.terms.items())


def rank(A: KClass) -> int:
    return A.rank()


def euler_pairing(A: KClass, B: KClass) -> int:
    """``sum (-1)^k dim Ext^k(A, B)``, extended bilinearly."""
    A._check(B)
    return sum(a * b * ext_schur_pair(x, y).euler() for x, a in A.terms.items() for y, b in B.terms.items())


def equivariant_euler_pairing(A: KClass, B: KClass) -> int:
    """Bilinear extension of the alternating sum of Sp-invariant Ext dimensions."""
    A._check(B)
    return sum(
        a * b * ext_schur_pair(x, y).equivariant_euler() for x, a in A.terms.items() for y, b in B.terms.items()
    )


def _require_rows(lam: YoungDiagram, n: int):
    if lam.height > n:
        raise ValueError(f"{lam} has more than {n} rows")


def equivariant_euler_matrix(lam: YoungDiagram, n: int) -> tuple[list[YoungDiagram], list[list[int]]]:
    """``M[mu][alpha] = chi_G(Sigma^alpha U^*, Sigma^mu U^*)`` over subdiagrams of ``lam``."""
    subs = subdiagrams(lam)
    M = [
        [ext_schur_pair(alpha, mu, n).equivariant_euler() for alpha in subs]
        for mu in subs
    ]
    return subs, M


@memoize
def _kclass_E(lam: YoungDiagram, n: int) -> KClass:
    subs = subdiagrams(lam)
    # Unknowns x_alpha (alpha inside lam) with sum_alpha x_alpha chi_G(alpha, mu) = [mu == lam].
    # chi_G(alpha, mu) vanishes unless mu is inside alpha and is 1 on the diagonal,
    # so solving from the largest diagrams down is back substitution.
    x: dict[YoungDiagram, int] = {}
    for mu in sorted(subs, key=grlex_key, reverse=True):
        diag = ext_schur_pair(mu, mu, n).equivariant_euler()
        if diag != 1:
            raise ArithmeticError(f"chi_G({mu}, {mu}) = {diag}, expected 1")
        rhs = 1 if mu == lam else 0
        for alpha, xa in x.items():
            if xa:
                rhs -= xa * ext_schur_pair(alpha, mu, n).equivariant_euler()
        x[mu] = rhs
    result = KClass({GLWeight.from_diagram(a, n): c for a, c in x.items()}, n)
    # the ordering used above must really be triangular; confirm the solution
    for mu in subs:
        got = equivariant_euler_pairing(result, KClass.schur(mu, n))
        if got != (1 if mu == lam else 0):
            raise ArithmeticError(f"inconsistent system for E^{lam} at n={n}: chi_G(E, {mu}) = {got}")
    return result


def kclass_E(lam, n: int) -> KClass:
    """Class of ``E^lam``: the combination of ``[Sigma^alpha U^*]``, alpha inside
    ``lam``, whose equivariant pairing with ``[Sigma^mu U^*]`` (mu inside lam)
    is 1 for ``mu = lam`` and 0 otherwise."""
    lam = YoungDiagram(lam)
    _require_rows(lam, n)
    return _kclass_E(lam, n)


def kclass_F(lam, n: int) -> KClass:
    """Class of ``F^lam = (E^lam)^*``."""
    return kclass_E(lam, n).dual()


def kclass_schur(lam, n: int) -> KClass:
    return KClass.schur(YoungDiagram(lam), n)


@dataclass
class PairingReport:
    """Outcome of an exhaustive pairing identity over a block."""

    name: str
    h: int
    n: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_graded_dual(h: int, n: int) -> PairingReport:
    """``chi(E^lam, F^(mu^T)) = (-1)^|lam| [lam == mu]`` over the ``h x (n - h)`` box."""
    if not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got h={h}, n={n}")
    report = PairingReport("graded-dual", h, n)
    box = diagrams_in_box(h, n - h)
    for lam in box:
        E = kclass_E(lam, n)
        for mu in box:
            got = euler_pairing(E, kclass_F(transpose(mu), n))
            want = (-1) ** lam.size if lam == mu else 0
            report.checked += 1
            if got != want:
                report.failures.append({"lam": lam, "mu": mu, "chi": got, "expected": want})
    return report


def verify_ext_equals_hom(h: int, n: int) -> PairingReport:
    """``chi(E^lam, Sigma^mu U^*) = dim Hom(Sigma^lam U^*, Sigma^mu U^*)`` over the box."""
    if not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got h={h}, n={n}")
    report = PairingReport("ext-hom", h, n)
    box = diagrams_in_box(h, n - h)
    for lam in box:
        E = kclass_E(lam, n)
        for mu in box:
            got = euler_pairing(E, kclass_schur(mu, n))
            want = ext_schur_pair(lam, mu, n).hom()
            report.checked += 1
            if got != want:
                report.failures.append({"lam": lam, "mu": mu, "chi": got, "expected": want})
    return report


def is_unitriangular(subs: list[YoungDiagram], M: list[list[int]]) -> bool:
    """Diagonal ones and ``M[mu][alpha] = 0`` unless ``mu`` lies inside ``alpha``."""
    for i, mu in enumerate(subs):
        for j, alpha in enumerate(subs):
            if i == j:
                if M[i][j] != 1:
                    return False
            elif M[i][j] and not contains(alpha, mu):
                return False
    return True
