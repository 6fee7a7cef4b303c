"""Command-line front end.  Every command prints one JSON report to stdout.

Exit codes: 0 success, 1 verify-paper mismatch, 2 input/parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .algebra import BoundQuiverAlgebra
from .counterexample import run_checks
from .homalg import (
    DEGREE_CAP,
    ext_module,
    is_reflexive,
    is_torsionless,
    is_two_reflexive,
    min_resolution,
    transpose,
)
from .modrep import Side, is_projective
from .search import HUNT_MODES, enumerate_candidates
from .specio import INPUT_ERRORS, SpecError, digest, field_from_flag, load_algebra, load_module


def _report(argv: Sequence[str], inputs: dict, result: dict) -> dict:
    return {
        "command": list(argv),
        "engine": {"name": "quiverhom", "version": __version__},
        "inputs": inputs,
        "result": result,
    }


def _algebra(args) -> tuple[BoundQuiverAlgebra, dict]:
    A, raw = load_algebra(args.algebra)
    return A, {"algebra": {"source": args.algebra, "sha256": digest(raw)}}


def _module(args, A, inputs):
    M, raw = load_module(A, args.module)
    inputs["module"] = {"source": args.module, "sha256": digest(raw)}
    return M


def _degree(text: str) -> int:
    k = int(text)
    if k < 0 or k > DEGREE_CAP:
        raise argparse.ArgumentTypeError(f"must be between 0 and {DEGREE_CAP}")
    return k


def cmd_check(args) -> tuple[dict, dict, int]:
    A, inputs = _algebra(args)
    blocks = [
        {"source": s, "target": t, "dim": n}
        for (s, t), n in sorted(A.dims_between().items(),
                                key=lambda kv: (A.quiver.vertex_index[kv[0][0]], A.quiver.vertex_index[kv[0][1]]))
    ]
    result = {
        "field": A.field.to_json(),
        "dimension": A.dimension,
        "basis": [str(p) for p in A.basis],
        "basis_by_source_target": blocks,
        "admissible": True,
        "commutative": A.is_commutative(),
    }
    return inputs, result, 0


def cmd_ext(args):
    A, inputs = _algebra(args)
    M = _module(args, A, inputs)
    if args.degree < 1:
        raise SpecError("Ext degree must be at least 1")
    rep = ext_module(M, args.degree)
    return inputs, {"module_dims": list(M.dims), "ext": rep.to_json()}, 0


def cmd_transpose(args):
    A, inputs = _algebra(args)
    M = _module(args, A, inputs)
    T = transpose(M)
    return inputs, {
        "module_dims": list(M.dims),
        "transpose": {"side": T.side.value, "dims": list(T.dims), "is_zero": T.is_zero()},
    }, 0


def cmd_resolve(args):
    A, inputs = _algebra(args)
    M = _module(args, A, inputs)
    res = min_resolution(M, args.length)
    return inputs, {
        "module_dims": list(M.dims),
        "terms": [list(P.dims) for P in res.terms],
        "syzygies": [list(K.dims) for K in res.syzygies],
        "projective_dimension": res.projective_dimension(),
        "exact": res.is_exact(),
        "minimal": res.is_minimal(),
    }, 0


def cmd_reflexive(args):
    A, inputs = _algebra(args)
    M = _module(args, A, inputs)
    T = transpose(M)
    return inputs, {
        "module_dims": list(M.dims),
        "is_projective": is_projective(M),
        "verdicts": {
            "torsionless": is_torsionless(M),
            "reflexive": is_reflexive(M),
            "two_reflexive": is_two_reflexive(M),
        },
        "transpose": {"side": T.side.value, "dims": list(T.dims)},
        "ext_transpose": [ext_module(T, 1).to_json(), ext_module(T, 2).to_json()],
    }, 0


def cmd_hunt(args):
    A, inputs = _algebra(args)
    cands = enumerate_candidates(A, Side(args.side), args.budget)
    witnesses = HUNT_MODES[args.mode](cands)
    return inputs, {
        "side": args.side,
        "budget": args.budget,
        "mode": args.mode,
        "candidates": len(cands),
        "witnesses": [w.to_json() for w in witnesses],
    }, 0


def cmd_verify_paper(args):
    field = field_from_flag(args.field)
    checks = run_checks(field, corrupt=args.corrupt_fixture)
    failed = [c.name for c in checks if not c.passed]
    for c in checks:
        if not c.passed:
            print(f"MISMATCH {c.name}: expected {c.expected!r}, got {c.actual!r}", file=sys.stderr)
    return {}, {
        "field": field.to_json(),
        "passed": len(checks) - len(failed),
        "total": len(checks),
        "failed": failed,
        "checks": [c.to_json() for c in checks],
    }, 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quiverhom", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_alg(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("algebra", help="algebra JSON file or built-in name (paper, dualnumbers, point)")
        sp.set_defaults(func=func)
        return sp

    with_alg("check", cmd_check, "validate an algebra and report its basis")
    sp = with_alg("ext", cmd_ext, "Ext^i(M, R) as a module")
    sp.add_argument("module")
    sp.add_argument("degree", type=_degree)
    sp = with_alg("transpose", cmd_transpose, "Auslander-Bridger transpose")
    sp.add_argument("module")
    sp = with_alg("resolve", cmd_resolve, "minimal projective resolution")
    sp.add_argument("module")
    sp.add_argument("length", type=_degree)
    sp = with_alg("reflexive", cmd_reflexive, "torsionless / reflexive / 2-reflexive verdicts")
    sp.add_argument("module")
    sp = with_alg("hunt", cmd_hunt, "search for counterexamples")
    sp.add_argument("side", choices=[s.value for s in Side])
    sp.add_argument("budget", type=int)
    sp.add_argument("mode", choices=sorted(HUNT_MODES))

    sp = sub.add_parser("verify-paper", help="recompute the built-in counterexample end to end")
    sp.add_argument("--field", default="rational", help="rational or prime<p>, e.g. prime2")
    sp.add_argument("--corrupt-fixture", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", 0) < 0:
        print("error: budget must be non-negative", file=sys.stderr)
        return 2
    try:
        inputs, result, code = args.func(args)
    except INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    json.dump(_report(argv, inputs, result), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
