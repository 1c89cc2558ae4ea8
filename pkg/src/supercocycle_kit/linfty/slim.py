"""Slim Lie n-superalgebras: L∞ data from a Lie superalgebra cocycle.

An even (n+1)-cocycle ω on g with trivial coefficients gives a Lie
n-superalgebra concentrated in degrees 0 and n−1:

- V₀ = g and V_{n−1} = R (one generator, written ``r``);
- l₂ is the bracket of g, and zero whenever an argument lies in R;
- l_{n+1} = ω on g, zero on R;
- every other l_k vanishes, including the differential l₁.

The cocycle is counted from the Lie n-superalgebra side: a 3-cocycle makes
a Lie 2-superalgebra, a 4-cocycle a Lie 3-superalgebra. If ω is not closed
the generalized Jacobi identity first fails at arity n+2.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from supercocycle_kit.cohomology import (
    Cochain,
    extend_by_zero,
    make_alpha,
    make_beta,
    make_gamma,
    make_j,
)
from supercocycle_kit.exceptions import CochainError, ParentMismatchError, UsageError
from supercocycle_kit.models.enums import Flavor, Parity
from supercocycle_kit.superalgebra import LieSuperalgebra, build_poincare

logger = logging.getLogger(__name__)

Vector = dict[int, Fraction]


@dataclass(frozen=True)
class LInftyData:
    """Two-term L∞ data (g, R, trivial action, ω).

    Indices 0 … dim g − 1 are the basis of g; index ``dim g`` is the
    generator of R.
    """

    algebra: LieSuperalgebra
    n: int
    cocycle: Cochain

    @property
    def r_index(self) -> int:
        return self.algebra.dimension

    @property
    def dimension(self) -> int:
        return self.algebra.dimension + 1

    @property
    def r_label(self) -> str:
        return "r" if "r" not in self.algebra.basis else "r_"

    def label(self, index: int) -> str:
        return self.r_label if index == self.r_index else self.algebra.labels[index]

    def degree(self, index: int) -> int:
        return self.n - 1 if index == self.r_index else 0

    def parity(self, index: int) -> int:
        return 0 if index == self.r_index else int(self.algebra.parity(index))

    def grade(self, index: int) -> int:
        """Overall grade: parity plus degree, mod 2."""
        return overall_grade(self, index)

    def bracket(self, k: int, args: tuple[int, ...]) -> Vector:
        """l_k on basis arguments, as ``{index: coefficient}``."""
        if any(a == self.r_index for a in args):
            return {}
        result: Vector = {}
        if k == 2:
            result.update(self.algebra.bracket_basis(*args))
        if k == self.n + 1:
            value = self.cocycle.value(args)
            if value != 0:
                result[self.r_index] = value
        return result


def overall_grade(data: LInftyData, index: int) -> int:
    """|X| = parity + degree (mod 2) for a basis element of the L∞ data."""
    return (data.parity(index) + data.degree(index)) % 2


class SlimQuadruple(NamedTuple):
    """The inputs a slim Lie n-superalgebra is built from.

    ``action`` is None for the trivial representation on R.
    """

    algebra: LieSuperalgebra
    module_dimension: int
    action: None
    cocycle: Cochain


def build_slim(g: LieSuperalgebra, n: int, omega: Cochain) -> LInftyData:
    """Package an even (n+1)-cocycle as a Lie n-superalgebra.

    Closedness is not required here; :func:`check_linfty` is how the
    identities are tested.

    Raises:
        UsageError: If n < 1
        ParentMismatchError: If ω is defined on another algebra
        CochainError: If ω is odd or does not have n + 1 arguments
    """
    if n < 1:
        raise UsageError(f"slim Lie n-superalgebras need n >= 1, got {n}")
    if omega.parent is not g:
        raise ParentMismatchError(f"cocycle lives on {omega.parent.name}, not {g.name}")
    if omega.level != n + 1:
        raise CochainError(
            f"a Lie {n}-superalgebra needs a level {n + 1} cocycle, got level {omega.level}"
        )
    if omega.parity is not Parity.EVEN:
        raise CochainError("the top bracket must be an even cochain")
    return LInftyData(g, n, omega)


def extract(data: LInftyData) -> SlimQuadruple:
    """Recover (g, R, ρ, ω) from slim data."""
    return SlimQuadruple(data.algebra, 1, None, data.cocycle)


def build_heisenberg_2algebra() -> LInftyData:
    """The Heisenberg Lie 2-algebra from γ = p*∧q*∧z*."""
    gamma = make_gamma()
    return build_slim(gamma.parent, 2, gamma)


def build_string(n: int) -> LInftyData:
    """The string Lie 2-algebra on so(n) from j = ⟨−, [−, −]⟩."""
    j = make_j(n)
    return build_slim(j.parent, 2, j)


def build_superstring(k: int) -> LInftyData:
    """superstring(k+1,1): α extended by zero to the Poincaré superalgebra."""
    poincare = build_poincare(k, Flavor.K2)
    extension = extend_by_zero(make_alpha(k), poincare)
    if not extension.closed:
        logger.warning(f"Extended alpha is not closed on {poincare.name}")
    return build_slim(poincare, 2, extension.extended)


def build_twobrane(k: int) -> LInftyData:
    """twobrane(k+2,1): β extended by zero to the Poincaré superalgebra."""
    poincare = build_poincare(k, Flavor.K3)
    extension = extend_by_zero(make_beta(k), poincare)
    if not extension.closed:
        logger.warning(f"Extended beta is not closed on {poincare.name}")
    return build_slim(poincare, 3, extension.extended)
