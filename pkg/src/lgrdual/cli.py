"""Command-line entry point: ``lgrdual <command> [options]``.

Every command prints a result envelope ``{"status", "command", "payload"}``
as JSON (default) or as flattened ``path: value`` text lines. Verification
commands exit with status 1 when any identity fails; malformed input is a
usage error (status 2).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import bbw as bbw_mod
from .diagrams import (
    balanced_criterion_check,
    diagrams_in_box,
    enumerate_balanced,
    is_balanced,
)
from .ext import block_check, block_weights, ext_schur_pair
from .ktheory import kclass_E, kclass_F, verify_ext_equals_hom, verify_graded_dual
from .mutations import BilinearLattice, apply_word, decompose, left_dual_basis, left_dual_by_mutation
from .notation import (
    bbw_to_json,
    character_to_json,
    diagram_map_to_json,
    e1_to_json,
    format_diagram,
    format_weight,
    kclass_to_json,
    parse_bundle,
    parse_diagram,
    parse_weight,
    resolution_to_json,
    vectors_from_json,
    vectors_to_json,
)
from .resolutions import build_resolution, e1_page, verify_k_exactness
from .schur import (
    GLWeight,
    decompose_mixed_tensor,
    gl_dimension,
    lr_coefficient,
    skew_decompose,
    sp_dimension,
)


@dataclass
class CommandResult:
    status: str
    command: str
    payload: dict = field(default_factory=dict)
    timing_ms: float | None = None
    failed: bool = False

    def to_json(self) -> dict:
        out = {"status": self.status, "command": self.command, "payload": self.payload}
        if self.timing_ms is not None:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out


def _arg(parser_fn, what):
    def convert(text):
        try:
            return parser_fn(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"invalid {what} {text!r}: {exc}") from None

    convert.__name__ = what
    return convert


diagram_arg = _arg(parse_diagram, "diagram")
weight_arg = _arg(parse_weight, "weight")


def flatten(obj, prefix="") -> list[tuple[str, object]]:
    """Leaf values of a JSON-like object keyed by dotted paths."""
    if isinstance(obj, dict):
        if not obj:
            return [(prefix, {})]
        out = []
        for k, v in obj.items():
            out.extend(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(obj, list):
        if not obj:
            return [(prefix, [])]
        if all(not isinstance(x, (dict, list)) for x in obj):
            return [(prefix, obj)]
        out = []
        for i, v in enumerate(obj):
            out.extend(flatten(v, f"{prefix}[{i}]"))
        return out
    return [(prefix, obj)]


def render_text(result: dict) -> str:
    return "\n".join(f"{path}: {json.dumps(value)}" for path, value in flatten(result))


# ---------------------------------------------------------------------------
# command implementations: each returns (payload, ok)


def cmd_balanced(args):
    diagrams = enumerate_balanced(args.boxes, args.max_height, args.max_width)
    payload = {"boxes": args.boxes, "diagrams": [format_diagram(d) for d in diagrams]}
    if args.max_height is not None:
        payload["max_height"] = args.max_height
    if args.max_width is not None:
        payload["max_width"] = args.max_width
    return payload, True


def cmd_lr(args):
    c = lr_coefficient(args.nu, args.mu, args.lam)
    return {"nu": format_diagram(args.nu), "mu": format_diagram(args.mu), "lam": format_diagram(args.lam), "coefficient": c}, True


def cmd_skew(args):
    d = skew_decompose(args.lam, args.mu)
    return {"lam": format_diagram(args.lam), "mu": format_diagram(args.mu), "decomposition": diagram_map_to_json(d)}, True


def cmd_dim_gl(args):
    if args.weight is not None:
        w = args.weight
        if args.n is not None and args.n != w.n:
            raise ValueError(f"weight {w} has length {w.n}, not {args.n}")
        return {"weight": format_weight(w), "n": w.n, "dimension": gl_dimension(w)}, True
    if args.lam is None or args.n is None:
        raise ValueError("dim-gl needs --weight, or --lam together with --n")
    return {"lam": format_diagram(args.lam), "n": args.n, "dimension": gl_dimension(args.lam, args.n)}, True


def cmd_dim_sp(args):
    return {"weight": format_weight(args.weight), "dimension": sp_dimension(args.weight)}, True


def cmd_tensor(args):
    d = decompose_mixed_tensor(args.a, args.b)
    return {"a": format_weight(args.a), "b": format_weight(args.b), "terms": {format_weight(w): m for w, m in d.items()}}, True


def cmd_bbw(args):
    w = args.weight
    if args.n is not None and w.n != args.n:
        raise ValueError(f"weight {w} has length {w.n}, not {args.n}")
    payload = {"n": w.n, "weight": format_weight(w)}
    payload.update(bbw_to_json(bbw_mod.bbw_weight(w)))
    return payload, True


def cmd_ext(args):
    src, dst = parse_bundle(args.src, args.n), parse_bundle(args.dst, args.n)
    table = ext_schur_pair(src, dst)
    payload = {"n": args.n, "src": format_weight(src), "dst": format_weight(dst)}
    if args.equivariant:
        payload["equivariant_dims"] = {str(k): v for k, v in table.equivariant_dims.items()}
    else:
        payload["character"] = character_to_json(table.character)
        payload["dims"] = {str(k): v for k, v in table.dims.items()}
        payload["equivariant_dims"] = {str(k): v for k, v in table.equivariant_dims.items()}
        payload["euler"] = table.euler()
    return payload, True


def cmd_block_check(args):
    if args.diagrams:
        S = [GLWeight.from_diagram(parse_diagram(tok), args.n) for tok in args.diagrams]
    else:
        if args.h is None:
            raise ValueError("block-check needs --h or --diagrams")
        S = block_weights(args.h, args.n)
    report = block_check(S, args.n)
    payload = {
        "n": args.n,
        "weights": [format_weight(w) for w in S],
        "entries": [
            {"source": format_weight(e.source), "target": format_weight(e.target), "degree": e.degree,
             "ext": e.ext, "right": e.right, "left": e.left}
            for e in report.entries
        ],
        "right_block": report.right_passed,
        "left_block": report.left_passed,
    }
    if args.h is not None and not args.diagrams:
        payload["h"] = args.h
    # only B_h is claimed to be a right block; custom sets are reported as data
    ok = report.right_passed if not args.diagrams else True
    return payload, ok


def cmd_kclass(args):
    A = kclass_F(args.lam, args.n) if args.dual else kclass_E(args.lam, args.n)
    payload = {"lam": format_diagram(args.lam), "dual": args.dual}
    payload.update(kclass_to_json(A))
    return payload, True


def cmd_resolution(args):
    r = build_resolution(args.lam, args.h, args.n)
    payload = resolution_to_json(r)
    ok = True
    if args.verify:
        ok = verify_k_exactness(r)
        payload["k_exact"] = ok
    if args.e1:
        payload["e1"] = e1_to_json(e1_page(args.lam, args.h, args.n))
    return payload, ok


def _hs(args):
    return [args.h] if args.h is not None else list(range(args.n + 1))


def _pairing_payload(reports):
    return {
        "checks": [
            {"h": r.h, "n": r.n, "checked": r.checked, "passed": r.passed,
             "failures": [{k: (format_diagram(v) if k in ("lam", "mu") else v) for k, v in f.items()} for f in r.failures]}
            for r in reports
        ],
        "passed": all(r.passed for r in reports),
    }


def cmd_verify(args):
    what = args.what
    if what == "dual":
        payload = _pairing_payload([verify_graded_dual(h, args.n) for h in _hs(args)])
    elif what == "ext-hom":
        payload = _pairing_payload([verify_ext_equals_hom(h, args.n) for h in _hs(args)])
    elif what == "vanishing":
        mismatches = []
        box = diagrams_in_box(args.n, args.n + 1)
        for lam in box:
            ok, _ = bbw_mod.vanishing_check(lam, args.n)
            if not ok:
                mismatches.append(format_diagram(lam))
        payload = {"checked": len(box), "mismatches": mismatches, "passed": not mismatches}
    elif what == "resolutions":
        failures, checked = [], 0
        for h in _hs(args):
            for lam in diagrams_in_box(h, args.n - h):
                checked += 1
                if not verify_k_exactness(build_resolution(lam, h, args.n)):
                    failures.append({"h": h, "lam": format_diagram(lam)})
        payload = {"checked": checked, "failures": failures, "passed": not failures}
    elif what == "balanced":
        from .diagrams import partitions_of

        mismatches, checked = [], 0
        for size in range(args.max_boxes + 1):
            for lam in partitions_of(size):
                checked += 1
                if is_balanced(lam) != balanced_criterion_check(lam):
                    mismatches.append(format_diagram(lam))
        payload = {"checked": checked, "mismatches": mismatches, "passed": not mismatches}
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(what)
    payload = {"what": what, "n": args.n, **payload} if what != "balanced" else {"what": what, **payload}
    return payload, payload["passed"]


def _load_gram(path: str) -> BilinearLattice:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"Gram file {path!r} is not valid JSON: {exc}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError(f"Gram file {path!r} must hold a JSON array of integer rows")
    return BilinearLattice(tuple(tuple(r) for r in rows))


def cmd_mutate(args):
    L = _load_gram(args.gram)
    basis = L.standard_basis() if args.basis is None else vectors_from_json(json.loads(Path(args.basis).read_text()))
    out = apply_word(L, basis, args.word)
    return {
        "word": args.word,
        "basis": vectors_to_json(out),
        "pairings": vectors_to_json(L.pairing_matrix(out, out)),
        "semiorthonormal": L.is_semiorthonormal(out),
    }, True


def cmd_dual_basis(args):
    L = _load_gram(args.gram)
    dual = left_dual_basis(L)
    via_mutation = left_dual_by_mutation(L)
    payload = {
        "left_dual": vectors_to_json(dual),
        "matches_mutation_formula": dual == via_mutation,
        "pairings": vectors_to_json(L.pairing_matrix(L.standard_basis(), list(reversed(dual)))),
    }
    if args.vector is not None:
        v = json.loads(args.vector)
        payload["vector"] = v
        payload["coefficients"] = vectors_to_json([decompose(L, v)])[0]
    return payload, payload["matches_mutation_formula"]


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lgrdual", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--timing", action="store_true", help="include wall time in the envelope")
    # the same options are accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("balanced", help="balanced diagrams with a given number of boxes")
    p.add_argument("--boxes", type=int, required=True)
    p.add_argument("--max-height", type=int)
    p.add_argument("--max-width", type=int)
    p.set_defaults(func=cmd_balanced)

    p = add_parser("lr", help="Littlewood-Richardson coefficient c(nu, mu; lam)")
    p.add_argument("--nu", type=diagram_arg, required=True)
    p.add_argument("--mu", type=diagram_arg, required=True)
    p.add_argument("--lam", type=diagram_arg, required=True)
    p.set_defaults(func=cmd_lr)

    p = add_parser("skew", help="Schur decomposition of a skew shape lam/mu")
    p.add_argument("--lam", type=diagram_arg, required=True)
    p.add_argument("--mu", type=diagram_arg, required=True)
    p.set_defaults(func=cmd_skew)

    p = add_parser("dim-gl", help="dimension of a GL_n irreducible")
    p.add_argument("--weight", type=weight_arg)
    p.add_argument("--lam", type=diagram_arg)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_dim_gl)

    p = add_parser("dim-sp", help="dimension of an Sp_2n irreducible")
    p.add_argument("--weight", type=weight_arg, required=True)
    p.set_defaults(func=cmd_dim_sp)

    p = add_parser("tensor", help="decompose a tensor product of GL_n irreducibles")
    p.add_argument("--a", type=weight_arg, required=True)
    p.add_argument("--b", type=weight_arg, required=True)
    p.set_defaults(func=cmd_tensor)

    p = add_parser("bbw", help="cohomology of Sigma^weight U on LGr(n, 2n)")
    p.add_argument("--n", type=int)
    p.add_argument("--weight", type=weight_arg, required=True)
    p.set_defaults(func=cmd_bbw)

    p = add_parser("ext", help="Ext between Sigma^src U^* and Sigma^dst U^*")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--src", required=True, help="diagram '(..)' or weight '[..]'")
    p.add_argument("--dst", required=True, help="diagram '(..)' or weight '[..]'")
    p.add_argument("--equivariant", action="store_true")
    p.set_defaults(func=cmd_ext)

    p = add_parser("block-check", help="dimension-level exceptional block test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int)
    p.add_argument("--diagrams", nargs="+", help="custom set of diagrams instead of B_h")
    p.set_defaults(func=cmd_block_check)

    p = add_parser("kclass", help="K-class of E^lam (or F^lam with --dual)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", type=diagram_arg, required=True)
    p.add_argument("--dual", action="store_true")
    p.set_defaults(func=cmd_kclass)

    p = add_parser("resolution", help="resolution of Sigma^lam U^* by the bundles E^nu")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--lam", type=diagram_arg, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--e1", action="store_true")
    p.set_defaults(func=cmd_resolution)

    p = add_parser("verify", help="batch verification drivers")
    p.add_argument("what", choices=("dual", "ext-hom", "vanishing", "resolutions", "balanced"))
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--h", type=int)
    p.add_argument("--max-boxes", type=int, default=16)
    p.set_defaults(func=cmd_verify)

    p = add_parser("mutate", help="apply a word of mutations to a semiorthonormal basis")
    p.add_argument("--gram", required=True, help="JSON file with integer rows ('-' for stdin)")
    p.add_argument("--word", required=True, help="tokens like 'L1 R2 L1'")
    p.add_argument("--basis", help="JSON file with basis vectors (default: standard basis)")
    p.set_defaults(func=cmd_mutate)

    p = add_parser("dual-basis", help="left dual of the standard semiorthonormal basis")
    p.add_argument("--gram", required=True, help="JSON file with integer rows ('-' for stdin)")
    p.add_argument("--vector", help="JSON list; also print its decomposition coefficients")
    p.set_defaults(func=cmd_dual_basis)
    return parser


def run(argv=None, stdout=None) -> CommandResult:
    """Parse ``argv``, dispatch, print the envelope, and return it."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        payload, ok = args.func(args)
    except (ValueError, IndexError, OSError) as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")
    result = CommandResult("ok" if ok else "failed", args.command, payload, failed=not ok)
    if args.timing:
        result.timing_ms = (time.perf_counter() - start) * 1000
    doc = result.to_json()
    if args.format == "json":
        print(json.dumps(doc, indent=2), file=stdout)
    else:
        print(render_text(doc), file=stdout)
    return result


def main(argv=None) -> int:
    result = run(argv)
    return 1 if result.failed else 0


if __name__ == "__main__":
    sys.exit(main())
