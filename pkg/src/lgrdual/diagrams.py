"""Young diagrams: transposition, Frobenius coordinates, the containment
poset and balanced diagrams.

A diagram is stored as a tuple of positive row lengths without trailing
zeros; height and width bounds are passed to the operations that need
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple


class YoungDiagram(tuple):
    """A partition, stored as its weakly decreasing positive rows.

    Trailing zeros are stripped on construction, so ``YoungDiagram((2, 1, 0))``
    equals ``YoungDiagram((2, 1))``.
    """

    def __new__(cls, rows: Iterable[int] = ()):
        rows = [int(r) for r in rows]
        while rows and rows[-1] == 0:
            rows.pop()
        for i, r in enumerate(rows):
            if r < 1:
                raise ValueError(f"row lengths must be positive, got {tuple(rows)}")
            if i and rows[i - 1] < r:
                raise ValueError(f"rows must be weakly decreasing, got {tuple(rows)}")
        return super().__new__(cls, rows)

    def __repr__(self) -> str:
        return f"YoungDiagram({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    @property
    def rank(self) -> int:
        """Side of the Durfee square."""
        s = 0
        while s < len(self) and self[s] >= s + 1:
            s += 1
        return s

    def row(self, i: int) -> int:
        """Length of row ``i`` (0-based), zero past the last row."""
        return self[i] if i < len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} rows")
        return tuple(self) + (0,) * (n - len(self))

    def transpose(self) -> "YoungDiagram":
        return transpose(self)

    def fits(self, height: int, width: int) -> bool:
        return len(self) <= height and self.width <= width

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, r in enumerate(self):
            for j in range(r):
                yield i, j


def transpose(lam: YoungDiagram) -> YoungDiagram:
    lam = YoungDiagram(lam)
    if not lam:
        return lam
    return YoungDiagram(sum(1 for r in lam if r > j) for j in range(lam[0]))


class FrobeniusCoordinates(NamedTuple):
    """Arm and leg lengths along the diagonal, each counting the diagonal box."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.arms)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.arms)) + "|" + ",".join(map(str, self.legs)) + ")"


def frobenius(lam: YoungDiagram) -> FrobeniusCoordinates:
    lam = YoungDiagram(lam)
    lt = transpose(lam)
    s = lam.rank
    return FrobeniusCoordinates(
        tuple(lam[i] - i for i in range(s)),
        tuple(lt[i] - i for i in range(s)),
    )


def from_frobenius(coords: FrobeniusCoordinates | tuple) -> YoungDiagram:
    arms, legs = (tuple(x) for x in coords)
    if len(arms) != len(legs):
        raise ValueError("arms and legs must have the same length")
    for seq in (arms, legs):
        if any(x < 1 for x in seq) or any(x <= y for x, y in zip(seq, seq[1:])):
            raise ValueError(f"Frobenius coordinates must be strictly decreasing and positive: {coords}")
    s = len(arms)
    # column i (0-based, i < s) has length legs[i] + i
    cols = [b + i for i, b in enumerate(legs)]
    rows = [a + i for i, a in enumerate(arms)]
    j = s
    while True:
        r = sum(1 for c in cols if c > j)
        if r == 0:
            break
        rows.append(r)
        j += 1
    lam = YoungDiagram(rows)
    if frobenius(lam) != (arms, legs):
        raise ValueError(f"not valid Frobenius coordinates: {coords}")
    return lam


def is_balanced(lam: YoungDiagram) -> bool:
    """True when every arm exceeds the matching leg by one.

    The empty diagram is balanced.
    """
    arms, legs = frobenius(lam)
    return all(a == b + 1 for a, b in zip(arms, legs))


def balanced_criterion_check(lam: YoungDiagram) -> bool:
    """Row-based test: with rank ``s``, need ``lam_s >= s + 1`` and the
    rows below the Durfee square equal to the transpose of the part of the
    first ``s`` rows lying right of column ``s + 1``."""
    lam = YoungDiagram(lam)
    s = lam.rank
    if s and lam[s - 1] < s + 1:
        return False
    right = YoungDiagram(lam[i] - (s + 1) for i in range(s))
    return transpose(right) == YoungDiagram(lam[s:])


def _strict_partitions(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _strict_partitions(total - first, first - 1):
            yield (first,) + rest


def grlex_key(lam: YoungDiagram) -> tuple:
    """Sort key: by box count, then rows in decreasing lexicographic order."""
    return (sum(lam), tuple(-r for r in lam))


def enumerate_balanced(
    boxes: int, max_height: int | None = None, max_width: int | None = None
) -> list[YoungDiagram]:
    """All balanced diagrams with ``boxes`` boxes, within optional bounds.

    Balanced diagrams with ``2t`` boxes correspond to strict partitions
    ``b`` of ``t`` through the Frobenius coordinates ``(b + 1 | b)``.
    """
    if boxes < 0 or boxes % 2:
        raise ValueError(f"balanced diagrams have an even number of boxes, got {boxes}")
    out = []
    for legs in _strict_partitions(boxes // 2, boxes // 2):
        lam = from_frobenius((tuple(b + 1 for b in legs), legs))
        if max_height is not None and lam.height > max_height:
            continue
        if max_width is not None and lam.width > max_width:
            continue
        out.append(lam)
    return sorted(out, key=grlex_key)


def contains(lam: YoungDiagram, mu: YoungDiagram) -> bool:
    """True when ``mu`` is a subdiagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(a >= b for a, b in zip(lam, mu))


def covers(lam: YoungDiagram, mu: YoungDiagram) -> bool:
    """True when ``lam`` is obtained from ``mu`` by adding one box."""
    return sum(lam) == sum(mu) + 1 and contains(lam, mu)


def diagrams_in_box(height: int, width: int) -> list[YoungDiagram]:
    """All diagrams with at most ``height`` rows and ``width`` columns."""
    if height < 0 or width < 0:
        raise ValueError("box dimensions must be non-negative")
    out = []
    # weakly decreasing sequences of length `height` in [0, width] <-> lattice paths
    for cuts in combinations(range(height + width), height):
        rows = [width - (c - i) for i, c in enumerate(cuts)]
        out.append(YoungDiagram(rows))
    return sorted(out, key=grlex_key)


def partitions_of(size: int, max_part: int | None = None) -> Iterator[YoungDiagram]:
    """Partitions of ``size`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = size

    def rec(total, largest):
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in rec(total - first, first):
                yield (first,) + rest

    for p in rec(size, max_part):
        yield YoungDiagram(p)


def subdiagrams(lam: YoungDiagram) -> list[YoungDiagram]:
    """All ``mu`` contained in ``lam``, graded-lexicographically ordered."""
    lam = YoungDiagram(lam)
    out = []

    def rec(i, prev, acc):
        if i == len(lam):
            out.append(YoungDiagram(acc))
            return
        for r in range(min(prev, lam[i]), -1, -1):
            rec(i + 1, r, acc + [r])

    rec(0, lam.width, [])
    return sorted(out, key=grlex_key)


@dataclass(frozen=True)
class DiagramPoset:
    """The containment poset of diagrams inside an ``height x width`` box,
    graded by box count."""

    height: int
    width: int
    elements: tuple[YoungDiagram, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, lam) -> bool:
        lam = YoungDiagram(lam)
        return lam.fits(self.height, self.width)

    def grade(self, lam: YoungDiagram) -> int:
        return sum(lam)

    def leq(self, a: YoungDiagram, b: YoungDiagram) -> bool:
        return contains(b, a)

    def cover_relations(self) -> list[tuple[YoungDiagram, YoungDiagram]]:
        """Pairs ``(lower, upper)`` with ``upper`` covering ``lower``."""
        pairs = []
        for upper in self.elements:
            for i in range(len(upper)):
                if i + 1 == len(upper) or upper[i] > upper[i + 1]:
                    lower = list(upper)
                    lower[i] -= 1
                    pairs.append((YoungDiagram(lower), upper))
        return sorted(pairs, key=lambda p: (grlex_key(p[1]), grlex_key(p[0])))

    def rank_level(self, k: int) -> list[YoungDiagram]:
        return [lam for lam in self.elements if sum(lam) == k]


def enumerate_poset(height: int, width: int) -> DiagramPoset:
    return DiagramPoset(height, width, tuple(diagrams_in_box(height, width)))
