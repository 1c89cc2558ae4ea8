"""Integration of Lie algebra cochains to group cochains on 2-step nilpotent groups."""

from .bch import GroupElement, bch2, product, require_two_step, zassenhaus_split
from .group_cochain import (
    GroupCochain,
    HomogeneousCochain,
    coordinate,
    differentiate_cochain,
    group_coboundary,
    group_coboundary_value,
    group_cochain_from_json,
    group_cochain_to_json,
    integrate_cochain,
    random_group_element,
    symbolic_point,
    to_homogeneous,
    verify_group_cocycle,
)
from .heisenberg import Slim2Group, from_heisenberg_matrix, heisenberg_2group, heisenberg_matrix
from .simplices import (
    cube_exponent,
    cube_variables,
    free_two_step,
    integrate_at,
    labelled_coefficients,
    simplex_exponent,
    translated_partials,
    universal_coefficients,
    word_label,
    words,
)

__all__ = [
    "GroupElement",
    "bch2",
    "zassenhaus_split",
    "product",
    "require_two_step",
    "cube_variables",
    "cube_exponent",
    "simplex_exponent",
    "translated_partials",
    "free_two_step",
    "word_label",
    "words",
    "universal_coefficients",
    "labelled_coefficients",
    "integrate_at",
    "GroupCochain",
    "HomogeneousCochain",
    "coordinate",
    "symbolic_point",
    "integrate_cochain",
    "group_coboundary",
    "group_coboundary_value",
    "to_homogeneous",
    "differentiate_cochain",
    "group_cochain_to_json",
    "group_cochain_from_json",
    "random_group_element",
    "verify_group_cocycle",
    "Slim2Group",
    "heisenberg_2group",
    "heisenberg_matrix",
    "from_heisenberg_matrix",
]
