"""Littlewood-Richardson coefficients, skew and tensor decompositions, and
Weyl dimensions for GL_n and Sp_2n.

All arithmetic is in Python integers, so dimensions never overflow.
"""

from __future__ import annotations

from collections import Counter
from math import prod
from typing import Iterable, Mapping

from ._cache import memoize
from .diagrams import YoungDiagram, contains, enumerate_balanced, grlex_key


class GLWeight(tuple):
    """A dominant weight of GL_n: a weakly decreasing integer vector,
    entries possibly negative."""

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("a GL weight needs at least one entry")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"weight must be weakly decreasing, got {list(entries)}")
        return super().__new__(cls, entries)

    @classmethod
    def from_diagram(cls, lam: Iterable[int], n: int) -> "GLWeight":
        return cls(YoungDiagram(lam).padded(n))

    @classmethod
    def zero(cls, n: int) -> "GLWeight":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"GLWeight({list(self)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def dual(self) -> "GLWeight":
        """Negate and reverse: the highest weight of the dual representation."""
        return GLWeight(-x for x in reversed(self))

    def shift(self, k: int) -> "GLWeight":
        """Add ``k`` to every entry (tensor with the ``k``-th power of det)."""
        return GLWeight(x + k for x in self)

    def is_polynomial(self) -> bool:
        return self[-1] >= 0

    def to_diagram(self) -> YoungDiagram:
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative entries")
        return YoungDiagram(self)

    def __add__(self, other):
        if isinstance(other, GLWeight):
            if len(other) != len(self):
                raise ValueError("weights of different length")
            return GLWeight(a + b for a, b in zip(self, other))
        return NotImplemented

    def __neg__(self):
        return self.dual()


class SpWeight(GLWeight):
    """Dominant weight of Sp_2n: weakly decreasing and non-negative."""

    def __new__(cls, entries: Iterable[int]):
        self = super().__new__(cls, entries)
        if self[-1] < 0:
            raise ValueError(f"Sp weights are non-negative, got {list(self)}")
        return self

    def __repr__(self) -> str:
        return f"SpWeight({list(self)!r})"

    def is_trivial(self) -> bool:
        return not any(self)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


@memoize
def _lr_skew(lam: YoungDiagram, mu: YoungDiagram) -> tuple[tuple[YoungDiagram, int], ...]:
    """Contents of all LR tableaux of shape lam/mu, with multiplicities."""
    if not contains(lam, mu):
        return ()
    lam_rows = list(lam)
    mu_rows = list(mu) + [0] * (len(lam) - len(mu))
    found: Counter = Counter()
    counts = [0] * (len(lam) + 1)  # counts[v] for labels 1..len(lam)

    def fill(r, c, above, current):
        # cells are visited row by row, each row right to left
        while c < mu_rows[r]:
            r += 1
            if r == len(lam_rows):
                found[YoungDiagram(x for x in counts[1:] if x)] += 1
                return
            above, current, c = current, {}, lam_rows[r] - 1
        upper = current.get(c + 1, r + 1)
        lower = above.get(c, 0) + 1
        for v in range(lower, upper + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            current[c] = v
            fill(r, c - 1, above, current)
            del current[c]
            counts[v] -= 1

    if not lam_rows:
        return ((YoungDiagram(), 1),)
    fill(0, lam_rows[0] - 1, {}, {})
    return tuple(sorted(found.items(), key=lambda kv: grlex_key(kv[0])))


def skew_decompose(lam: YoungDiagram, mu: YoungDiagram) -> dict[YoungDiagram, int]:
    """``{nu: c(nu, mu; lam)}`` over the non-zero coefficients; empty when
    ``mu`` is not inside ``lam``."""
    return dict(_lr_skew(YoungDiagram(lam), YoungDiagram(mu)))


def lr_coefficient(nu: YoungDiagram, mu: YoungDiagram, lam: YoungDiagram) -> int:
    """Multiplicity of Schur functor ``lam`` in ``nu (x) mu``."""
    nu, mu, lam = YoungDiagram(nu), YoungDiagram(mu), YoungDiagram(lam)
    if nu.size + mu.size != lam.size:
        return 0
    # the skew shape with the larger inner diagram has fewer fillings
    if mu.size >= nu.size:
        return skew_decompose(lam, mu).get(nu, 0)
    return skew_decompose(lam, nu).get(mu, 0)


def _supersets(alpha: YoungDiagram, extra: int, max_rows: int, width_gain: int):
    """Diagrams containing ``alpha`` with ``extra`` more boxes and at most
    ``max_rows`` rows, each row growing by at most ``width_gain``."""
    base = list(alpha) + [0] * (max_rows - len(alpha))

    def rec(i, left, prev, acc):
        if i == max_rows:
            if left == 0:
                yield YoungDiagram(acc)
            return
        lo = base[i]
        hi = min(prev, lo + width_gain, lo + left)
        for r in range(hi, lo - 1, -1):
            yield from rec(i + 1, left - (r - lo), r, acc + [r])

    if max_rows < len(alpha):
        return
    yield from rec(0, extra, float("inf") if max_rows else 0, [])


@memoize
def _lr_product(alpha: YoungDiagram, beta: YoungDiagram, max_rows: int) -> tuple:
    out = []
    gain = beta.width
    for lam in _supersets(alpha, beta.size, max_rows, gain):
        c = skew_decompose(lam, alpha).get(beta, 0)
        if c:
            out.append((lam, c))
    return tuple(sorted(out, key=lambda kv: grlex_key(kv[0])))


def lr_product(alpha: YoungDiagram, beta: YoungDiagram, max_rows: int | None = None) -> dict[YoungDiagram, int]:
    """Schur expansion of ``s_alpha * s_beta``, truncated to diagrams with at
    most ``max_rows`` rows (Schur functors of taller diagrams vanish on a
    rank ``max_rows`` space)."""
    alpha, beta = YoungDiagram(alpha), YoungDiagram(beta)
    if max_rows is None:
        max_rows = len(alpha) + len(beta)
    if alpha.size < beta.size:
        alpha, beta = beta, alpha
    return dict(_lr_product(alpha, beta, max_rows))


# ---------------------------------------------------------------------------
# Dimensions


def gl_dimension(weight, n: int | None = None) -> int:
    """Dimension of the irreducible GL_n representation of highest weight
    ``weight`` (a diagram or a :class:`GLWeight`).

    A diagram with more than ``n`` rows gives 0.
    """
    if isinstance(weight, GLWeight):
        if n is not None and n != weight.n:
            raise ValueError(f"weight {weight} has length {weight.n}, not {n}")
        w = tuple(weight)
    else:
        lam = YoungDiagram(weight)
        if n is None:
            n = max(len(lam), 1)
        if len(lam) > n:
            return 0
        w = lam.padded(n)
    n = len(w)
    num = prod(w[i] - w[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def sp_dimension(mu) -> int:
    """Dimension of the irreducible Sp_2n representation with highest
    weight ``mu`` (Weyl's formula for type C, with rho = (n, ..., 1))."""
    mu = SpWeight(mu)
    n = mu.n
    rho = list(range(n, 0, -1))
    shifted = [m + r for m, r in zip(mu, rho)]
    num = prod(shifted) * prod(
        (shifted[i] - shifted[j]) * (shifted[i] + shifted[j]) for i in range(n) for j in range(i + 1, n)
    )
    den = prod(rho) * prod((rho[i] - rho[j]) * (rho[i] + rho[j]) for i in range(n) for j in range(i + 1, n))
    return num // den


# ---------------------------------------------------------------------------
# Tensor products of (possibly negative) GL weights

WeightSum = dict  # GLWeight -> positive multiplicity


def _sorted_weights(counter: Mapping[GLWeight, int]) -> dict[GLWeight, int]:
    return {w: counter[w] for w in sorted(counter, reverse=True) if counter[w]}


def decompose_mixed_tensor(alpha, beta, shift: int | None = None) -> WeightSum:
    """Decompose the tensor product of two GL_n irreducibles.

    Both weights are twisted by ``det^shift`` to become polynomial, the
    Littlewood-Richardson rule is applied with rows capped at ``n``, and
    the twist ``det^(-2 shift)`` is undone. ``shift`` defaults to the
    smallest admissible value; the result does not depend on it.
    """
    alpha, beta = GLWeight(alpha), GLWeight(beta)
    if alpha.n != beta.n:
        raise ValueError(f"weights of different length: {alpha}, {beta}")
    n = alpha.n
    least = max(0, -alpha[-1], -beta[-1])
    if shift is None:
        shift = least
    elif shift < least:
        raise ValueError(f"shift {shift} leaves a negative entry; need at least {least}")
    a = alpha.shift(shift).to_diagram()
    b = beta.shift(shift).to_diagram()
    out: Counter = Counter()
    for lam, c in lr_product(a, b, n).items():
        out[GLWeight(lam.padded(n)).shift(-2 * shift)] += c
    return _sorted_weights(out)


def lambda_of_sym2_decomposition(t: int) -> list[YoungDiagram]:
    """Diagrams ``lam`` with ``Lambda^t(S^2 E) = sum of Sigma^lam E``: the
    balanced diagrams with ``2t`` boxes."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return enumerate_balanced(2 * t)
