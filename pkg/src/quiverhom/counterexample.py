"""Built-in counterexample: a module ``N`` with ``Ext^2(N, R)`` nonzero projective
and a simple module that is 2-reflexive but not reflexive.

``R`` is the radical-square-zero algebra of the quiver with arrows
``a: 1->2``, ``b: 2->3``, ``c: 3->4``, ``d: 1->3``.  :func:`run_checks`
recomputes every intermediate module of the argument and compares it with
the expected dimension vectors and verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra import BoundQuiverAlgebra, make_algebra
from .exactla import FieldSpec
from .homalg import (
    dual,
    ext_module,
    is_reflexive,
    is_torsionless,
    is_two_reflexive,
    min_resolution,
    syzygy,
    transpose,
)
from .modrep import Side, cyclic_quotient, direct_sum, projective, simple, socle, top

ARROWS = (("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"), ("d", "1", "3"))


def counterexample_algebra(field: FieldSpec = FieldSpec(), radical_power: int = 2) -> BoundQuiverAlgebra:
    return make_algebra(("1", "2", "3", "4"), ARROWS, radical_power=radical_power, field=field)


def dual_numbers(field: FieldSpec = FieldSpec()) -> BoundQuiverAlgebra:
    return make_algebra(("1",), (("x", "1", "1"),), radical_power=2, field=field)


def module_N(A: BoundQuiverAlgebra):
    """``e_1 R`` modulo the arrow ``a``: dimension vector ``[1, 0, 1, 0]``."""
    return cyclic_quotient(A, "1", Side.RIGHT, [["a"]])


EXPECTED: dict[str, Any] = {
    "hom_S2_R": [1, 0, 0, 0],
    "hom_e2R_R": [1, 1, 0, 0],
    "hom_S3_R": [1, 1, 0, 0],
    "ext1_S2_R": {"dims": [1, 0, 0, 0], "projective": True},
    "syzygy1_N": {"dims": [0, 1, 0, 0], "equals_S2": True},
    "ext2_N_R": {"dims": [1, 0, 0, 0], "zero": False, "projective": True, "dims_match_ext1_S2": True},
    "resolution_S3": {
        "terms": [[0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0]],
        "P0_is_e3R": True,
        "P1_is_e4R": True,
        "exact": True,
        "minimal": True,
    },
    "transpose_S3": [0, 0, 0, 1],
    "syzygy1_transpose_S3": {"dims": [0, 0, 1, 0], "equals_left_S3": True},
    "hom_Y_R": [0, 0, 0, 1],
    "hom_Re3_R": [0, 0, 1, 1],
    "hom_Y2_R": {"dims": [1, 1, 2, 0], "top": [1, 0, 1, 0], "socle": [0, 1, 2, 0], "matches_S3_plus_e1R": True},
    "ext1_Y_R": {"dims": [1, 1, 1, 0], "projective": True},
    "S3_torsionless": True,
    "S3_two_reflexive": True,
    "S3_reflexive": False,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "expected": self.expected, "actual": self.actual}


def _dims(M) -> list[int]:
    return list(M.dims)


def compute_actuals(A: BoundQuiverAlgebra) -> dict[str, Any]:
    R = Side.RIGHT
    S2, S3 = simple(A, "2", R), simple(A, "3", R)
    e1, e2, e3, e4 = (projective(A, v, R) for v in "1234")
    N = module_N(A)

    ext1_S2 = ext_module(S2, 1)
    ext2_N = ext_module(N, 2)
    res = min_resolution(S3, 2)
    tr = transpose(S3)
    Y = syzygy(tr, 1)
    Y2 = syzygy(Y, 1)
    Re3 = projective(A, "3", Side.LEFT)
    dY2 = dual(Y2)
    ref = direct_sum(S3, e1)
    ext1_Y = ext_module(Y, 1)

    return {
        "hom_S2_R": _dims(dual(S2)),
        "hom_e2R_R": _dims(dual(e2)),
        "hom_S3_R": _dims(dual(S3)),
        "ext1_S2_R": {"dims": _dims(ext1_S2.module), "projective": ext1_S2.is_projective},
        "syzygy1_N": {"dims": _dims(syzygy(N, 1)), "equals_S2": syzygy(N, 1) == S2},
        "ext2_N_R": {
            "dims": _dims(ext2_N.module),
            "zero": ext2_N.is_zero,
            "projective": ext2_N.is_projective,
            "dims_match_ext1_S2": ext2_N.dims == ext1_S2.dims,
        },
        "resolution_S3": {
            "terms": [_dims(P) for P in res.terms],
            "P0_is_e3R": res.terms[0] == e3,
            "P1_is_e4R": res.terms[1] == e4,
            "exact": res.is_exact(),
            "minimal": res.is_minimal(),
        },
        "transpose_S3": _dims(tr),
        "syzygy1_transpose_S3": {"dims": _dims(Y), "equals_left_S3": Y == simple(A, "3", Side.LEFT)},
        "hom_Y_R": _dims(dual(Y)),
        "hom_Re3_R": _dims(dual(Re3)),
        "hom_Y2_R": {
            "dims": _dims(dY2),
            "top": _dims(top(dY2)[0]),
            "socle": _dims(socle(dY2)[0]),
            "matches_S3_plus_e1R": (dY2.dims, top(dY2)[0].dims, socle(dY2)[0].dims)
            == (ref.dims, top(ref)[0].dims, socle(ref)[0].dims),
        },
        "ext1_Y_R": {"dims": _dims(ext1_Y.module), "projective": ext1_Y.is_projective},
        "S3_torsionless": is_torsionless(S3),
        "S3_two_reflexive": is_two_reflexive(S3),
        "S3_reflexive": is_reflexive(S3),
    }


def run_checks(field: FieldSpec = FieldSpec(), corrupt: bool = False) -> list[CheckResult]:
    """All sixteen checks, in order.

    ``corrupt=True`` builds the algebra with ``rad^3 = 0`` instead of
    ``rad^2 = 0``; it exists so the failure path can be exercised.
    """
    A = counterexample_algebra(field, radical_power=3 if corrupt else 2)
    actual = compute_actuals(A)
    return [CheckResult(name, exp, actual[name]) for name, exp in EXPECTED.items()]
