"""Ext groups between irreducible equivariant bundles ``Sigma^alpha U^*`` on
LGr(n, 2n), their Sp-invariant parts, and the exceptional block test.

Weights in this module index bundles in the ``U^*`` convention:
``alpha`` stands for ``Sigma^alpha U^*``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from ._cache import memoize
from .bbw import GradedSpCharacter, add_characters, character_dimensions, cohomology
from .diagrams import YoungDiagram, diagrams_in_box
from .schur import GLWeight, decompose_mixed_tensor


def as_weight(x, n: int | None = None) -> GLWeight:
    """Coerce a diagram (padded to ``n`` rows) or a weight to a GLWeight."""
    if isinstance(x, GLWeight):
        if n is not None and x.n != n:
            raise ValueError(f"weight {x} is not of length {n}")
        return x
    if isinstance(x, YoungDiagram) or n is not None:
        if n is None:
            raise ValueError("n is required to turn a diagram into a weight")
        return GLWeight.from_diagram(x, n)
    return GLWeight(x)


@dataclass(frozen=True)
class ExtTable:
    source: GLWeight
    target: GLWeight
    character: GradedSpCharacter
    dims: dict[int, int]
    equivariant_dims: dict[int, int]

    def euler(self) -> int:
        return sum((-1) ** k * d for k, d in self.dims.items())

    def equivariant_euler(self) -> int:
        return sum((-1) ** k * d for k, d in self.equivariant_dims.items())

    def hom(self) -> int:
        return self.dims.get(0, 0)


@memoize
def _ext(alpha: GLWeight, beta: GLWeight) -> ExtTable:
    # Hom(S^a U^*, S^b U^*) = S^a U (x) S^b U^*, whose U-weights are a and -b
    char: GradedSpCharacter = {}
    for gamma, mult in decompose_mixed_tensor(alpha, beta.dual()).items():
        add_characters(char, cohomology(gamma), mult)
    char = {k: {w: m for w, m in sorted(part.items(), reverse=True) if m} for k, part in sorted(char.items())}
    char = {k: part for k, part in char.items() if part}
    dims = character_dimensions(char)
    trivial = GLWeight.zero(alpha.n)
    equivariant = {k: part.get(trivial, 0) for k, part in char.items()}
    equivariant = {k: m for k, m in equivariant.items() if m}
    return ExtTable(alpha, beta, char, dims, equivariant)


def ext_schur_pair(alpha, beta, n: int | None = None) -> ExtTable:
    """``Ext^*(Sigma^alpha U^*, Sigma^beta U^*)`` as a graded Sp-character."""
    alpha, beta = as_weight(alpha, n), as_weight(beta, n)
    if alpha.n != beta.n:
        raise ValueError(f"weights of different length: {alpha}, {beta}")
    return _ext(alpha, beta)


def equivariant_ext(alpha, beta, n: int | None = None) -> dict[int, int]:
    """Multiplicity of the trivial Sp-module in each Ext degree."""
    return dict(ext_schur_pair(alpha, beta, n).equivariant_dims)


def hom_dimension(alpha, beta, n: int | None = None) -> int:
    return ext_schur_pair(alpha, beta, n).hom()


@dataclass
class BlockEntry:
    source: GLWeight
    target: GLWeight
    degree: int
    ext: int
    right: int
    left: int

    @property
    def right_ok(self) -> bool:
        return self.ext == self.right

    @property
    def left_ok(self) -> bool:
        return self.ext == self.left


@dataclass
class BlockReport:
    """Per ``(source, target, degree)`` comparison of ``dim Ext^k`` with the
    dimensions predicted by the right and left block factorizations."""

    n: int
    weights: list[GLWeight]
    entries: list[BlockEntry] = field(default_factory=list)

    @property
    def right_passed(self) -> bool:
        return all(e.right_ok for e in self.entries)

    @property
    def left_passed(self) -> bool:
        return all(e.left_ok for e in self.entries)

    def failures(self, side: str = "right") -> list[BlockEntry]:
        attr = "right_ok" if side == "right" else "left_ok"
        return [e for e in self.entries if not getattr(e, attr)]


def block_check(S: Iterable, n: int) -> BlockReport:
    """Dimension-level test of the exceptional block conditions for ``S``.

    For every ``lam, mu`` in ``S`` and every degree ``k``, compares
    ``dim Ext^k(lam, mu)`` with

    * right: ``sum_nu dim Ext^k_G(lam, nu) * dim Hom(nu, mu)``,
    * left:  ``sum_nu dim Hom(lam, nu) * dim Ext^k_G(nu, mu)``.

    Matching dimensions are necessary for the canonical maps to be
    isomorphisms; bijectivity itself is not tested.
    """
    weights = [as_weight(x, n) for x in S]
    report = BlockReport(n, weights)
    for lam in weights:
        for mu in weights:
            full = ext_schur_pair(lam, mu).dims
            right: Counter = Counter()
            left: Counter = Counter()
            for nu in weights:
                hom_nu_mu = hom_dimension(nu, mu)
                if hom_nu_mu:
                    for k, m in equivariant_ext(lam, nu).items():
                        right[k] += m * hom_nu_mu
                hom_lam_nu = hom_dimension(lam, nu)
                if hom_lam_nu:
                    for k, m in equivariant_ext(nu, mu).items():
                        left[k] += hom_lam_nu * m
            for k in sorted(set(full) | set(right) | set(left)):
                report.entries.append(BlockEntry(lam, mu, k, full.get(k, 0), right[k], left[k]))
    return report


def block_weights(h: int, n: int) -> list[GLWeight]:
    """The block ``B_h``: diagrams in the ``h x (n - h)`` box as weights."""
    if not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got h={h}, n={n}")
    return [GLWeight.from_diagram(lam, n) for lam in diagrams_in_box(h, n - h)]
