"""Integrated supergroup cochains and the superstring and 2-brane cocycles.

A Lie superalgebra cochain integrates to a family of maps, one for each
Grassmann algebra A, on the A-points of the exponential supergroup. Every
member of the family runs the integration engine with coefficients in A₀,
so naturality in A is checked rather than stored.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Generic, TypeVar

from supercocycle_kit.algebra.poly import Poly
from supercocycle_kit.cohomology import Cochain, make_alpha, make_beta
from supercocycle_kit.exceptions import UsageError, VerificationError
from supercocycle_kit.integration import (
    bch2,
    cube_variables,
    group_coboundary_value,
    integrate_at,
    require_two_step,
    simplex_exponent,
    translated_partials,
)
from supercocycle_kit.integration.group_cochain import describe_point
from supercocycle_kit.protocols import is_zero
from supercocycle_kit.superalgebra import GradedElement, LieSuperalgebra
from supercocycle_kit.utils.sampling import RationalSampler

from .apoints import check_apoint, push_forward, random_apoint
from .grassmann import GrassmannAlgebra, GrassmannElement, GrassmannHom

logger = logging.getLogger(__name__)

G = TypeVar("G")

Derivation = dict[int, dict[int, Fraction]]


@dataclass(frozen=True)
class SupergroupCochain:
    """(∫ω)_A for every Grassmann algebra A."""

    cochain: Cochain

    @property
    def parent(self) -> LieSuperalgebra:
        return self.cochain.parent

    @property
    def level(self) -> int:
        return self.cochain.level

    def evaluate(self, *points: GradedElement) -> Any:
        """(∫ω)_A(exp n₁, …, exp n_p) at A-points n_i."""
        algebras = {c.algebra for x in points for c in x.coeffs.values()}
        if len(algebras) > 1:
            raise UsageError("A-points over different Grassmann algebras")
        for x in points:
            for a in algebras:
                check_apoint(x, a)
        return integrate_at(self.cochain, points)

    def coboundary_value(self, *points: GradedElement) -> Any:
        """d(∫ω)_A at p + 1 A-points, multiplying with the supergroup law."""
        return group_coboundary_value(self.evaluate, points)

    def naturality_defect(self, f: GrassmannHom, points: Sequence[GradedElement]) -> Any:
        """f₀((∫ω)_A(n…)) − (∫ω)_B(N_f n…)."""
        here = self.evaluate(*points)
        there = self.evaluate(*(push_forward(f, x) for x in points))
        image = f.apply(here) if isinstance(here, GrassmannElement) else f.target.scalar(here)
        return image - there


def super_integrate(omega: Cochain, p: int | None = None) -> SupergroupCochain:
    """∫ω as a natural family of A₀-valued supergroup cochains.

    Raises:
        NilpotencyError: If ω's algebra is not 2-step nilpotent
        UsageError: On a level mismatch
    """
    if p is not None and p != omega.level:
        raise UsageError(f"level mismatch: cochain has level {omega.level}, asked for {p}")
    require_two_step(omega.parent)
    return SupergroupCochain(omega)


# Semidirect products and homogeneous extension


@dataclass
class SemidirectProduct(Generic[G]):
    """G ⋉ H with (g₁, h₁)(g₂, h₂) = (g₁g₂, h₁ · (g₁ ▷ h₂)).

    H is an exponential (super)group with the BCH product on logarithms; G
    acts by automorphisms through ``act``.
    """

    act: Callable[[G, GradedElement], GradedElement]
    multiply_g: Callable[[G, G], G]
    multiply_h: Callable[[GradedElement, GradedElement], GradedElement] = field(default=bch2)

    def multiply(
        self, x: tuple[G, GradedElement], y: tuple[G, GradedElement]
    ) -> tuple[G, GradedElement]:
        (g1, h1), (g2, h2) = x, y
        return self.multiply_g(g1, g2), self.multiply_h(h1, self.act(g1, h2))


def homogeneous_extend(
    f: Callable[..., Any],
) -> Callable[..., Any]:
    """F̃((g₀, h₀), …, (g_p, h_p)) = F(h₀, …, h_p): pull back along G ⋉ H → H."""

    def extended(*points: tuple[Any, GradedElement]) -> Any:
        return f(*(h for _, h in points))

    return extended


def homogeneity_defect(
    extended: Callable[..., Any],
    group: SemidirectProduct[G],
    shift: tuple[G, GradedElement],
    points: Sequence[tuple[G, GradedElement]],
) -> Any:
    """F̃(x·y₀, …, x·y_p) − F̃(y₀, …, y_p) for x = ``shift``."""
    moved = [group.multiply(shift, y) for y in points]
    return extended(*moved) - extended(*points)


def heisenberg_scaling(scale: Fraction, x: GradedElement) -> GradedElement:
    """The automorphism p ↦ λp, q ↦ λ⁻¹q, z ↦ z of the Heisenberg algebra."""
    weights = {"p": scale, "q": 1 / scale, "z": Fraction(1)}
    g = x.parent
    return GradedElement(g, {i: c * weights[g.labels[i]] for i, c in x.coeffs.items()})


# Infinitesimal equivariance


def apply_derivation(derivation: Derivation, x: GradedElement) -> GradedElement:
    """D(X) = Σ x_i D(e_i) for D given by ``{i: {k: c}}``."""
    result: dict[int, Any] = {}
    for i, c in x.coeffs.items():
        for k, d in derivation.get(i, {}).items():
            term = c * d
            result[k] = result[k] + term if k in result else term
    return GradedElement(x.parent, result)


def _first_order(x: GradedElement, var: str) -> GradedElement:
    def coefficient(c: Any) -> Any:
        if not isinstance(c, Poly):
            return Fraction(0)
        return c.partial(var).substitute({var: Fraction(0)})

    return x.map_coefficients(coefficient)


def simplex_equivariance_defect(
    derivation: Derivation, steps: Sequence[GradedElement]
) -> list[GradedElement]:
    """D(φ⁻¹∂_iφ) minus the first-order change of φ⁻¹∂_iφ along X_j ↦ X_j + εD X_j.

    Every entry vanishes when D is a derivation of the (2-step) algebra.
    """
    eps = Poly.variable("eps")
    p = len(steps)
    variables = cube_variables(p)
    partials = translated_partials(simplex_exponent(steps), variables)
    moved = [x + apply_derivation(derivation, x) * eps for x in steps]
    varied = translated_partials(simplex_exponent(moved), variables)
    return [
        apply_derivation(derivation, base) - _first_order(change, "eps")
        for base, change in zip(partials, varied, strict=True)
    ]


def integrand_lie_derivative(
    omega: Cochain, derivation: Derivation, steps: Sequence[GradedElement]
) -> Any:
    """Σ_s ω(P₁, …, D P_s, …, P_p) on the translated partials P of the simplex.

    Zero for every simplex when ω is D-invariant.
    """
    p = omega.level
    variables = cube_variables(p)
    partials = translated_partials(simplex_exponent(steps), variables)
    total: Any = Fraction(0)
    for s in range(p):
        args = list(partials)
        args[s] = apply_derivation(derivation, partials[s])
        total = total + omega.evaluate(*args)
    return total


# The superstring and 2-brane cocycles

GRASSMANN_LADDER = (2, 3)


@dataclass
class CocycleVerification:
    """Outcome of a sampled supergroup cocycle check.

    Attributes:
        name: Which cocycle was checked
        level: Level of the group cochain
        grassmann_generators: n for every A = ΛRⁿ the check ran over
        samples: Number of (level + 1)-tuples checked per Grassmann algebra
        normalization_checks: Number of degenerate tuples checked, over all algebras
    """

    name: str
    level: int
    grassmann_generators: list[int]
    samples: int
    normalization_checks: int


def grassmann_ladder(n: int) -> tuple[int, int]:
    """ΛRⁿ and ΛRⁿ⁺¹ with at least two generators."""
    base = max(n, GRASSMANN_LADDER[0])
    return base, base + 1


def _check_over(
    name: str,
    integrated: SupergroupCochain,
    algebra: GrassmannAlgebra,
    samples: int,
    sampler: RationalSampler,
    support: int | None,
) -> int:
    g = integrated.parent
    p = integrated.level
    for n in range(samples):
        points = [random_apoint(g, algebra, sampler, support) for _ in range(p + 1)]
        defect = integrated.coboundary_value(*points)
        if not is_zero(defect):
            raise VerificationError(
                f"{name}: group cocycle identity fails over ΛR{algebra.n} at sample {n}",
                counterexample={
                    "grassmann_generators": algebra.n,
                    "points": [describe_point(x) for x in points],
                    "defect": str(defect),
                },
            )
    checks = 0
    for slot in range(p):
        points = [random_apoint(g, algebra, sampler, support) for _ in range(p)]
        points[slot] = g.zero()
        value = integrated.evaluate(*points)
        checks += 1
        if not is_zero(value):
            raise VerificationError(
                f"{name}: not normalized in argument {slot + 1} over ΛR{algebra.n}",
                counterexample={
                    "grassmann_generators": algebra.n,
                    "points": [describe_point(x) for x in points],
                },
            )
    return checks


def verify_supergroup_cocycle(
    name: str,
    integrated: SupergroupCochain,
    grassmann: int | Sequence[int],
    samples: int,
    seed: int,
    support: int | None = None,
) -> CocycleVerification:
    """Check d(∫ω)_A = 0 and normalization at seeded A-points over each ΛRⁿ.

    With fewer than two odd generators every product of two odd
    coefficients vanishes and the identity holds for any cochain, so such
    algebras are refused.

    Raises:
        UsageError: If no algebra is given or some n < 2
        VerificationError: With the failing A-point tuple as counterexample
    """
    sizes = [grassmann] if isinstance(grassmann, int) else list(grassmann)
    if not sizes or min(sizes) < GRASSMANN_LADDER[0]:
        raise UsageError(
            f"supergroup cocycle checks need ΛRⁿ with n >= 2, got {sizes}",
            details={"grassmann": sizes},
        )
    sampler = RationalSampler(seed)
    checks = 0
    for n in sizes:
        checks += _check_over(name, integrated, GrassmannAlgebra(n), samples, sampler, support)
    logger.info(
        f"{name}: {samples} cocycle samples per algebra over ΛRⁿ, n in {sizes}, "
        f"and {checks} normalization checks passed"
    )
    return CocycleVerification(name, integrated.level, sizes, samples, checks)


def superstring_cocycle(
    k: int,
    *,
    grassmann: int | Sequence[int] = GRASSMANN_LADDER,
    samples: int = 20,
    seed: int = 0,
    support: int | None = None,
) -> CocycleVerification:
    """Verify that ∫α is a 3-cocycle on the supertranslation group in dimension k+2."""
    return verify_supergroup_cocycle(
        f"superstring k={k}", super_integrate(make_alpha(k)), grassmann, samples, seed, support
    )


def twobrane_cocycle(
    k: int,
    *,
    grassmann: int | Sequence[int] = GRASSMANN_LADDER,
    samples: int = 5,
    seed: int = 0,
    support: int | None = None,
) -> CocycleVerification:
    """Verify that ∫β is a 4-cocycle on the supertranslation group in dimension k+3."""
    return verify_supergroup_cocycle(
        f"2-brane k={k}", super_integrate(make_beta(k)), grassmann, samples, seed, support
    )
