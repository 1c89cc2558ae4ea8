"""Vectors and spinors in dimensions k+2 and k+3 built from a division algebra."""

from .operators import (
    LinearOperator,
    LorentzGenerator,
    SpinorOperator,
    flavor_of,
    gamma_operator,
    lorentz_generator,
    metric,
    module_dimension,
    rho,
    spin_normalization,
    vector_basis,
    vector_from_coords,
    vector_operator,
)
from .samples import (
    random_element,
    random_spinor_k2,
    random_spinor_k3,
    random_vector_k2,
    random_vector_k3,
)
from .spinors import (
    SpinorK2,
    SpinorK3,
    bracket_big,
    bracket_spinors,
    check_trilinear_sym,
    clifford_act,
    four_psi,
    gamma,
    gamma_tilde,
    gamma_zero,
    gamma_zero_defect,
    pairing,
    pairing_big,
    reflection_defect,
    spinor_labels,
    spinor_quartic,
    star_form,
    three_psi,
    unit_vector_defect,
)
from .vectors import (
    VectorK2,
    VectorK3,
    determinant,
    minkowski_g,
    minkowski_h,
    trace_reversal,
    vector_labels,
)

__all__ = [
    "VectorK2",
    "VectorK3",
    "SpinorK2",
    "SpinorK3",
    "LinearOperator",
    "SpinorOperator",
    "LorentzGenerator",
    "vector_labels",
    "spinor_labels",
    "trace_reversal",
    "determinant",
    "minkowski_g",
    "minkowski_h",
    "metric",
    "gamma",
    "gamma_tilde",
    "clifford_act",
    "pairing",
    "pairing_big",
    "bracket_spinors",
    "bracket_big",
    "three_psi",
    "four_psi",
    "star_form",
    "check_trilinear_sym",
    "spinor_quartic",
    "unit_vector_defect",
    "reflection_defect",
    "gamma_zero",
    "gamma_zero_defect",
    "gamma_operator",
    "lorentz_generator",
    "spin_normalization",
    "rho",
    "vector_operator",
    "vector_basis",
    "vector_from_coords",
    "flavor_of",
    "module_dimension",
    "random_element",
    "random_vector_k2",
    "random_vector_k3",
    "random_spinor_k2",
    "random_spinor_k3",
]
