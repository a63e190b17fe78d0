"""fuskit: exact computational toolkit for fusion rings.

Construct the named ring families, validate the based-ring axioms,
compute Frobenius-Perron dimensions exactly in quadratic fields, find
universal gradings, classify near-group-type rings, and machine-check
the structural theorems over a built-in corpus (`fuskit verify`).
"""

from .core import (
    FusionRing,
    ObjectVec,
    ValidationReport,
    fpdim_ring,
    fpdim_simple,
    hom_mult,
    is_invertible,
    object_vec,
    self_decomp,
    tensor,
    validate,
)
from .exactreal import QuadraticReal, Rational, RealValue, char_poly, perron_root, recognize
from .groups import (
    GroupTable,
    Subgroup,
    all_subgroups,
    cyclic,
    direct_product,
    is_isomorphic,
    is_normal,
    quotient,
    subgroup_generated,
    symmetric,
)
from .structure import (
    ActionData,
    GradingData,
    SubringHandle,
    action,
    adjoint_subring,
    commutator_subring,
    graded_component_dims,
    invertibles,
    pointed_subring,
    subring_closure,
    universal_grading,
)
from .classify import (
    CdSet,
    GNGType,
    category_type,
    cd_set,
    check_rank_dim,
    check_structure_theorem,
    classify_fib_extension,
    exact_factorization,
    gng_subring_check,
    gng_type,
    is_gng,
    is_gty,
    is_near_group,
    cosine_square_solutions,
    min_summands_check,
    ring_isomorphism,
)
from .families import (
    adjoint_extract,
    build_family,
    deligne_product,
    fib_extension,
    fibonacci,
    gty,
    n_ising,
    near_group,
    pointed,
    psu2_6,
    restrict,
    su2_level,
    tambara_yamagami,
)
from .verify import run_verify

__version__ = "0.1.0"

__all__ = [
    "FusionRing", "ObjectVec", "ValidationReport", "validate", "tensor",
    "self_decomp", "hom_mult", "object_vec", "is_invertible",
    "fpdim_simple", "fpdim_ring",
    "QuadraticReal", "Rational", "RealValue", "char_poly", "perron_root", "recognize",
    "GroupTable", "Subgroup", "cyclic", "direct_product", "symmetric",
    "subgroup_generated", "is_normal", "quotient", "is_isomorphic", "all_subgroups",
    "ActionData", "GradingData", "SubringHandle", "action", "invertibles",
    "pointed_subring", "adjoint_subring", "subring_closure", "universal_grading",
    "commutator_subring", "graded_component_dims",
    "GNGType", "CdSet", "is_gng", "gng_type", "is_gty", "is_near_group",
    "cd_set", "category_type", "check_rank_dim", "check_structure_theorem",
    "classify_fib_extension", "exact_factorization", "gng_subring_check",
    "cosine_square_solutions", "min_summands_check", "ring_isomorphism",
    "pointed", "near_group", "gty", "tambara_yamagami", "fibonacci",
    "fib_extension", "su2_level", "adjoint_extract", "psu2_6", "n_ising",
    "deligne_product", "restrict", "build_family",
    "run_verify",
]
