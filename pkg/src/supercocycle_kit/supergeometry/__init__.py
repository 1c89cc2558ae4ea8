"""Grassmann algebras, A-points and integrated supergroup cocycles."""

from .apoints import (
    InducedCochain,
    a_bracket,
    apoint,
    check_apoint,
    induced_coboundary,
    induced_cochain,
    lift,
    push_forward,
    random_apoint,
    super_exp_mul,
)
from .grassmann import GrassmannAlgebra, GrassmannElement, GrassmannHom, monomial_sign
from .supergroup import (
    CocycleVerification,
    SemidirectProduct,
    SupergroupCochain,
    apply_derivation,
    heisenberg_scaling,
    homogeneity_defect,
    homogeneous_extend,
    integrand_lie_derivative,
    simplex_equivariance_defect,
    super_integrate,
    superstring_cocycle,
    grassmann_ladder,
    twobrane_cocycle,
    verify_supergroup_cocycle,
)

__all__ = [
    "GrassmannAlgebra",
    "GrassmannElement",
    "GrassmannHom",
    "monomial_sign",
    "apoint",
    "check_apoint",
    "lift",
    "random_apoint",
    "a_bracket",
    "super_exp_mul",
    "push_forward",
    "InducedCochain",
    "induced_cochain",
    "induced_coboundary",
    "SupergroupCochain",
    "super_integrate",
    "SemidirectProduct",
    "homogeneous_extend",
    "homogeneity_defect",
    "heisenberg_scaling",
    "apply_derivation",
    "simplex_equivariance_defect",
    "integrand_lie_derivative",
    "CocycleVerification",
    "verify_supergroup_cocycle",
    "grassmann_ladder",
    "superstring_cocycle",
    "twobrane_cocycle",
]
