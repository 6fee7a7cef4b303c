"""Homological algebra over finite-dimensional bound quiver algebras.

Transposes, syzygies, duals and Ext-modules over ``KQ/I`` with monomial
relations, plus exact decision procedures for torsionless, reflexive and
2-reflexive modules.
"""

__version__ = "0.1.0"

from .algebra import BoundQuiverAlgebra, Path, Quiver, RelationSet, build_algebra, make_algebra, multiply, opposite
from .exactla import QQ, FieldSpec, Matrix
from .homalg import (
    CRITERION_INAPPLICABLE,
    ExtReport,
    Resolution,
    d_k,
    dual,
    evaluation_map,
    ext_dimension,
    ext_module,
    induced_dual_hom,
    is_reflexive,
    is_torsionless,
    is_two_reflexive,
    min_resolution,
    syzygy,
    transpose,
)
from .modrep import (
    Module,
    ModuleHom,
    Side,
    cokernel,
    cyclic_quotient,
    direct_sum,
    hom_basis,
    image,
    is_projective,
    kernel,
    projective,
    projective_cover,
    radical,
    simple,
    socle,
    top,
)
from .search import enumerate_candidates, hunt_2reflexive_not_reflexive, hunt_ext2_projective

__all__ = [
    "BoundQuiverAlgebra", "Path", "Quiver", "RelationSet", "build_algebra", "make_algebra", "multiply", "opposite",
    "QQ", "FieldSpec", "Matrix",
    "CRITERION_INAPPLICABLE", "ExtReport", "Resolution", "d_k", "dual", "evaluation_map", "ext_dimension",
    "ext_module", "induced_dual_hom", "is_reflexive", "is_torsionless", "is_two_reflexive", "min_resolution",
    "syzygy", "transpose",
    "Module", "ModuleHom", "Side", "cokernel", "cyclic_quotient", "direct_sum", "hom_basis", "image",
    "is_projective", "kernel", "projective", "projective_cover", "radical", "simple", "socle", "top",
    "enumerate_candidates", "hunt_2reflexive_not_reflexive", "hunt_ext2_projective",
]
