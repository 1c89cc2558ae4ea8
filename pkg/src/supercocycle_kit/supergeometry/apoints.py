"""A-points of super vector spaces and Lie superalgebras.

An A-point of g is an even element of A ⊗ g: every even basis direction
carries an even Grassmann coefficient, every odd direction an odd one. They
are stored as :class:`~supercocycle_kit.superalgebra.GradedElement` with
:class:`GrassmannElement` coefficients, so the kernel bracket and cochain
evaluation (which multiply coefficients as a_p ⋯ a₁) give the induced maps
directly. The A-points n_A form an ordinary Lie algebra over A₀.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from supercocycle_kit.cohomology import Cochain
from supercocycle_kit.exceptions import ParentMismatchError, UsageError
from supercocycle_kit.integration import bch2
from supercocycle_kit.models.enums import Parity
from supercocycle_kit.superalgebra import GradedElement, LieSuperalgebra, bracket
from supercocycle_kit.utils.sampling import RationalSampler

from .grassmann import GrassmannAlgebra, GrassmannElement, GrassmannHom

logger = logging.getLogger(__name__)


def check_apoint(x: GradedElement, algebra: GrassmannAlgebra) -> None:
    """Raise UsageError unless x is an even element of A ⊗ g.

    Raises:
        UsageError: If a coefficient is not a Grassmann element of A or has
            the wrong parity for its basis direction
    """
    g = x.parent
    for i, c in x.coeffs.items():
        if not isinstance(c, GrassmannElement) or c.algebra != algebra:
            raise UsageError(f"coefficient of {g.labels[i]} is not in {algebra!r}")
        if g.parity(i) is Parity.EVEN and not c.is_even():
            raise UsageError(f"even direction {g.labels[i]} has a non-even coefficient {c}")
        if g.parity(i) is Parity.ODD and not c.is_odd():
            raise UsageError(f"odd direction {g.labels[i]} has a non-odd coefficient {c}")


def apoint(
    g: LieSuperalgebra, algebra: GrassmannAlgebra, coefficients: Mapping[str, GrassmannElement]
) -> GradedElement:
    """Build and check an A-point from labelled Grassmann coefficients."""
    x = g.element(coefficients)
    check_apoint(x, algebra)
    return x


def lift(x: GradedElement, algebra: GrassmannAlgebra) -> GradedElement:
    """Rational element of g_0 as an A-point with scalar coefficients.

    Raises:
        UsageError: If x has a component along an odd direction
    """
    if any(x.parent.parity(i) for i in x.coeffs):
        raise UsageError("only even elements lift to A-points with scalar coefficients")
    return x.map_coefficients(algebra.scalar)


def random_apoint(
    g: LieSuperalgebra,
    algebra: GrassmannAlgebra,
    sampler: RationalSampler,
    support: int | None = None,
) -> GradedElement:
    """Seeded A-point, optionally supported on ``support`` random directions."""
    labels: Sequence[str] = g.labels
    if support is not None and support < len(labels):
        labels = sorted(sampler.sample(list(labels), support), key=g.index)
    coefficients = {
        lbl: algebra.random_odd(sampler) if g.parity(lbl) else algebra.random_even(sampler)
        for lbl in labels
    }
    return apoint(g, algebra, coefficients)


def _grassmann_of(points: Sequence[GradedElement]) -> GrassmannAlgebra | None:
    for x in points:
        for c in x.coeffs.values():
            if isinstance(c, GrassmannElement):
                return c.algebra
    return None


def a_bracket(x: GradedElement, y: GradedElement) -> GradedElement:
    """[X, Y]_A, the bracket of n_A.

    Raises:
        ParentMismatchError: If X and Y live over different algebras
    """
    ax, ay = _grassmann_of([x]), _grassmann_of([y])
    if ax is not None and ay is not None and ax != ay:
        raise ParentMismatchError(f"A-points over {ax!r} and {ay!r} cannot be bracketed")
    return bracket(x, y)


def super_exp_mul(x: GradedElement, y: GradedElement) -> GradedElement:
    """exp(X)·exp(Y) in the exponential supergroup, as a 2-step BCH product over A₀."""
    return bch2(x, y)


def push_forward(f: GrassmannHom, x: GradedElement) -> GradedElement:
    """N_f: apply a Grassmann homomorphism to every coefficient of an A-point."""
    return x.map_coefficients(f.apply)


@dataclass(frozen=True)
class InducedCochain:
    """ω_A: the A₀-valued multilinear map ω induces on A-points."""

    cochain: Cochain
    algebra: GrassmannAlgebra

    @property
    def level(self) -> int:
        return self.cochain.level

    def __call__(self, *points: GradedElement) -> Any:
        for x in points:
            check_apoint(x, self.algebra)
        return self.cochain.evaluate(*points)


def induced_cochain(omega: Cochain, algebra: GrassmannAlgebra) -> InducedCochain:
    return InducedCochain(omega, algebra)


def induced_coboundary(omega_a: InducedCochain, points: Sequence[GradedElement]) -> Any:
    """d(ω_A)(X₁, …, X_{p+1}) with the ungraded Chevalley–Eilenberg formula.

    Σ_{i<j} (−1)^{i+j} ω_A([X_i, X_j]_A, X₁, …, X̂_i, …, X̂_j, …, X_{p+1}).
    """
    if len(points) != omega_a.level + 1:
        raise UsageError(f"expected {omega_a.level + 1} A-points, got {len(points)}")
    total: Any = omega_a.algebra.zero()
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            rest = [x for m, x in enumerate(points) if m not in (i, j)]
            value = omega_a(a_bracket(points[i], points[j]), *rest)
            total = total + value if (i + j) % 2 == 0 else total - value
    return total
