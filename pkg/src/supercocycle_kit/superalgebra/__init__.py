"""Lie superalgebras as parity-labelled structure constants."""

from .basis import SuperBasis
from .builders import (
    build_abelian,
    build_heisenberg,
    build_heisenberg_torus,
    build_poincare,
    build_so,
    build_supertranslation,
    division_tag,
    lorentz_labels,
)
from .config import (
    BUILTIN_ALGEBRAS,
    algebra_from_config,
    algebra_to_config,
    builtin_algebra,
    load_algebra,
)
from .lie import (
    GradedElement,
    LieSuperalgebra,
    bracket,
    derived_algebra,
    is_ideal,
    is_two_step_nilpotent,
    restriction,
    validate,
)

__all__ = [
    "SuperBasis",
    "LieSuperalgebra",
    "GradedElement",
    "bracket",
    "validate",
    "is_two_step_nilpotent",
    "derived_algebra",
    "is_ideal",
    "restriction",
    "build_abelian",
    "build_supertranslation",
    "build_poincare",
    "build_heisenberg",
    "build_heisenberg_torus",
    "build_so",
    "division_tag",
    "lorentz_labels",
    "algebra_from_config",
    "algebra_to_config",
    "load_algebra",
    "builtin_algebra",
    "BUILTIN_ALGEBRAS",
]
