"""Text syntax for diagrams and weights, and JSON encodings of results.

Diagrams are written ``(3,1)`` (``()`` for the empty diagram), GL weights
``[2,0,-1]``. Every ``*_to_json`` has a matching ``*_from_json``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bbw import BBWResult
from .diagrams import YoungDiagram
from .ktheory import KClass
from .resolutions import Resolution, ResolutionTerm
from .schur import GLWeight, SpWeight

_DIAGRAM = re.compile(r"^\(\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\)$")
_WEIGHT = re.compile(r"^\[\s*-?\d+(\s*,\s*-?\d+)*\s*\]$")


def parse_diagram(text: str) -> YoungDiagram:
    s = text.strip()
    if not _DIAGRAM.match(s):
        raise ValueError(f"malformed diagram {text!r}; expected e.g. '(3,1)' or '()'")
    inner = s[1:-1].strip().rstrip(",")
    rows = [int(x) for x in inner.split(",")] if inner else []
    return YoungDiagram(rows)


def format_diagram(lam) -> str:
    return str(YoungDiagram(lam))


def parse_weight(text: str) -> GLWeight:
    s = text.strip()
    if not _WEIGHT.match(s):
        raise ValueError(f"malformed weight {text!r}; expected e.g. '[2,0,-1]'")
    return GLWeight(int(x) for x in s[1:-1].split(","))


def format_weight(w) -> str:
    return str(GLWeight(w))


def parse_bundle(text: str, n: int | None = None) -> GLWeight:
    """A diagram (padded to ``n`` rows) or an explicit weight."""
    s = text.strip()
    if s.startswith("("):
        lam = parse_diagram(s)
        if n is None:
            raise ValueError("n is required to use diagram syntax")
        return GLWeight.from_diagram(lam, n)
    w = parse_weight(s)
    if n is not None and w.n != n:
        raise ValueError(f"weight {text!r} has length {w.n}, expected {n}")
    return w


def format_fraction(x: Fraction):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(x) -> Fraction:
    return Fraction(x)


# ---------------------------------------------------------------------------


def diagram_map_to_json(d: dict) -> dict:
    return {format_diagram(k): v for k, v in d.items()}


def diagram_map_from_json(d: dict) -> dict:
    return {parse_diagram(k): v for k, v in d.items()}


def weight_map_to_json(d: dict) -> dict:
    return {format_weight(k): v for k, v in d.items()}


def weight_map_from_json(d: dict) -> dict:
    return {parse_weight(k): v for k, v in d.items()}


def character_to_json(char: dict) -> dict:
    return {str(k): weight_map_to_json(part) for k, part in char.items()}


def character_from_json(d: dict) -> dict:
    return {int(k): {SpWeight(w): m for w, m in weight_map_from_json(part).items()} for k, part in d.items()}


def bbw_to_json(res: BBWResult | None) -> dict:
    if res is None:
        return {"zero": True}
    return {"degree": res.degree, "sp_weight": list(res.weight), "dimension": res.dimension}


def bbw_from_json(d: dict) -> BBWResult | None:
    if d.get("zero"):
        return None
    return BBWResult(d["degree"], SpWeight(d["sp_weight"]))


def kclass_to_json(A: KClass) -> dict:
    return {"n": A.n, "terms": weight_map_to_json(A.terms), "rank": A.rank()}


def kclass_from_json(d: dict) -> KClass:
    return KClass(weight_map_from_json(d["terms"]), d["n"])


def resolution_to_json(r: Resolution) -> dict:
    return {
        "lam": format_diagram(r.lam),
        "h": r.h,
        "n": r.n,
        "terms": [{"t": term.t, "summands": diagram_map_to_json(term.summands)} for term in r.terms],
    }


def resolution_from_json(d: dict) -> Resolution:
    terms = tuple(ResolutionTerm(x["t"], diagram_map_from_json(x["summands"])) for x in d["terms"])
    return Resolution(parse_diagram(d["lam"]), d["h"], d["n"], terms)


def e1_to_json(page: dict) -> list:
    return [{"p": p, "q": q, "summands": diagram_map_to_json(entry)} for (p, q), entry in page.items()]


def e1_from_json(items: list) -> dict:
    return {(x["p"], x["q"]): diagram_map_from_json(x["summands"]) for x in items}


def vectors_to_json(vectors) -> list:
    return [[format_fraction(x) for x in v] for v in vectors]


def vectors_from_json(rows) -> list:
    return [tuple(parse_fraction(x) for x in row) for row in rows]
