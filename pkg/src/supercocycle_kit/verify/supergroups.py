"""Supergroup checks: A-points, the integrated superstring and 2-brane cocycles."""

from fractions import Fraction
from functools import partial

from supercocycle_kit.cohomology import Cochain, adjoint_derivation, make_alpha, make_gamma
from supercocycle_kit.exceptions import VerificationError
from supercocycle_kit.integration import integrate_at, integrate_cochain, to_homogeneous
from supercocycle_kit.integration.group_cochain import describe_point
from supercocycle_kit.models.enums import AlgebraTag, Flavor, Suite
from supercocycle_kit.superalgebra import (
    GradedElement,
    bracket,
    build_poincare,
    build_supertranslation,
)
from supercocycle_kit.supergeometry import (
    GrassmannAlgebra,
    GrassmannHom,
    SemidirectProduct,
    a_bracket,
    heisenberg_scaling,
    homogeneity_defect,
    homogeneous_extend,
    induced_coboundary,
    induced_cochain,
    integrand_lie_derivative,
    lift,
    push_forward,
    random_apoint,
    simplex_equivariance_defect,
    super_exp_mul,
    super_integrate,
    grassmann_ladder,
    superstring_cocycle,
    twobrane_cocycle,
)

from .runner import Check, SuiteOptions, Witness, expect_equal, expect_zero

TWOBRANE_SAMPLES = 5


def _grassmann(options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    n = max(options.grassmann, 2)
    a, b, c = GrassmannAlgebra(n), GrassmannAlgebra(n + 1), GrassmannAlgebra(n + 2)
    for _ in range(options.samples):
        odd, even = a.random_odd(sampler), a.random_even(sampler)
        other = a.random_even(sampler)
        expect_zero(odd * odd, "an odd element does not square to zero", odd=odd)
        expect_equal(even * other, other * even, "A₀ is not commutative", x=even, y=other)
        expect_equal(odd * even, even * odd, "A₀ is not central", odd=odd, even=even)
        f, g = GrassmannHom.random(a, b, sampler), GrassmannHom.random(b, c, sampler)
        x, y = a.random_even(sampler), a.random_odd(sampler)
        expect_equal(f(x * y), f(x) * f(y), "f is not multiplicative", x=x, y=y)
        expect_equal(g.compose(f)(y), g(f(y)), "N(g∘f) ≠ N(g)∘N(f)", y=y)
        expect_equal(GrassmannHom.identity(a)(y), y, "N(id) ≠ id", y=y)
        if not f(even).is_even():
            raise VerificationError("f₀ does not preserve A₀", counterexample={"x": str(even)})
    return {"samples": options.samples, "generators": n}


def _apoints(k: int, options: SuiteOptions, check_id: str) -> Witness:
    g = build_supertranslation(k, Flavor.K2)
    n = max(options.grassmann, 2)
    algebra = GrassmannAlgebra(n)
    theta1, theta2 = algebra.generator(1), algebra.generator(2)
    s0 = g.basis_element("s0")
    expect_equal(
        a_bracket(s0.map_coefficients(lambda _: theta1), s0.map_coefficients(lambda _: theta2)),
        bracket(s0, s0).map_coefficients(lambda c: algebra.scalar(c) * theta2 * theta1),
        "[θ₁s, θ₂s]_A does not carry θ₂θ₁",
    )
    sampler = options.sampler(check_id)
    target = GrassmannAlgebra(n + 1)
    for _ in range(options.samples):
        x, y, z = (random_apoint(g, algebra, sampler) for _ in range(3))
        expect_equal(a_bracket(x, y), -a_bracket(y, x), "[−,−]_A is not antisymmetric")
        expect_zero(a_bracket(x, x), "[X, X]_A ≠ 0", x=describe_point(x))
        expect_equal(super_exp_mul(x, g.zero()), x, "exp(X)·1 ≠ exp(X)")
        expect_equal(
            super_exp_mul(super_exp_mul(x, y), z),
            super_exp_mul(x, super_exp_mul(y, z)),
            "the supergroup product is not associative",
            x=describe_point(x),
        )
        f = GrassmannHom.random(algebra, target, sampler)
        expect_equal(
            push_forward(f, super_exp_mul(x, y)),
            super_exp_mul(push_forward(f, x), push_forward(f, y)),
            "N_f is not a group homomorphism",
            x=describe_point(x),
            y=describe_point(y),
        )
    return {"samples": options.samples, "generators": n}


def _induced(k: int, options: SuiteOptions, check_id: str) -> Witness:
    algebra = GrassmannAlgebra(max(options.grassmann, 3))
    alpha = make_alpha(k)
    alpha_a = induced_cochain(alpha, algebra)
    sampler = options.sampler(check_id)
    for _ in range(options.samples):
        points = [random_apoint(alpha.parent, algebra, sampler) for _ in range(4)]
        expect_zero(
            induced_coboundary(alpha_a, points),
            "d(α_A) ≠ 0",
            points=[describe_point(x) for x in points],
        )
    return {"samples": options.samples, "generators": algebra.n}


def _superstring(k: int, options: SuiteOptions, check_id: str) -> Witness:
    result = superstring_cocycle(
        k,
        grassmann=grassmann_ladder(options.grassmann),
        samples=options.samples,
        seed=options.sampler(check_id).integer(0, 2**31),
    )
    return {
        "samples": result.samples,
        "normalization_checks": result.normalization_checks,
        "grassmann_generators": result.grassmann_generators,
    }


def _twobrane(k: int, options: SuiteOptions, check_id: str) -> Witness:
    result = twobrane_cocycle(
        k,
        grassmann=grassmann_ladder(options.grassmann),
        samples=min(options.samples, TWOBRANE_SAMPLES),
        seed=options.sampler(check_id).integer(0, 2**31),
    )
    return {
        "samples": result.samples,
        "normalization_checks": result.normalization_checks,
        "grassmann_generators": result.grassmann_generators,
    }


def _naturality(k: int, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    integrated = super_integrate(make_alpha(k))
    n = max(options.grassmann, 2)
    source, target = GrassmannAlgebra(n), GrassmannAlgebra(n + 1)
    for _ in range(options.samples):
        f = GrassmannHom.random(source, target, sampler)
        points = [random_apoint(integrated.parent, source, sampler) for _ in range(3)]
        expect_zero(
            integrated.naturality_defect(f, points),
            "f₀∘(∫α)_A ≠ (∫α)_B∘N_f",
            points=[describe_point(x) for x in points],
        )
    return {"samples": options.samples}


def _reduction(options: SuiteOptions, check_id: str) -> Witness:
    gamma = make_gamma()
    h = gamma.parent
    integrated = super_integrate(gamma)
    algebra = GrassmannAlgebra(0)
    sampler = options.sampler(check_id)
    for _ in range(options.samples):
        points = [h.element({lbl: sampler.rational() for lbl in h.labels}) for _ in range(3)]
        expect_equal(
            integrated.evaluate(*(lift(x, algebra) for x in points)),
            algebra.scalar(integrate_at(gamma, points)),
            "(∫γ)_A over ΛR⁰ differs from ∫γ",
            points=[describe_point(x) for x in points],
        )
    return {"samples": options.samples}


def _scaling_group() -> SemidirectProduct[Fraction]:
    return SemidirectProduct(act=heisenberg_scaling, multiply_g=lambda a, b: a * b)


def _homogeneous(options: SuiteOptions, check_id: str) -> Witness:
    gamma = make_gamma()
    h = gamma.parent
    group = _scaling_group()
    extended = homogeneous_extend(to_homogeneous(integrate_cochain(gamma)).evaluate)
    sampler = options.sampler(check_id)

    def draw() -> tuple[Fraction, GradedElement]:
        scale = sampler.rational(allow_zero=False)
        return scale, h.element({lbl: sampler.rational() for lbl in h.labels})

    for _ in range(options.samples):
        shift = draw()
        points = [draw() for _ in range(4)]
        expect_zero(
            homogeneity_defect(extended, group, shift, points),
            "the extension of ∫γ to the scaling semidirect product is not homogeneous",
            shift=str(shift),
        )

    # ∫p* is not scaling invariant, so its extension must fail to be homogeneous
    p = h.basis_element("p")
    moment = to_homogeneous(integrate_cochain(Cochain.dual(h, "p")))
    control = homogeneous_extend(moment.evaluate)
    shift = (Fraction(3, 2), h.zero())
    points = [(Fraction(1), h.zero()), (Fraction(1), p)]
    defect = homogeneity_defect(control, group, shift, points)
    expect_equal(defect, Fraction(1, 2), "wrong homogeneity defect for the control cochain")
    return {"samples": options.samples, "control_defect": defect}


def _equivariance(k: int, options: SuiteOptions, check_id: str) -> Witness:
    ambient = build_poincare(k, Flavor.K2)
    alpha = make_alpha(k)
    g = alpha.parent
    sampler = options.sampler(check_id)
    lorentz = [lbl for lbl in ambient.labels if lbl.startswith("m_")]
    algebra = GrassmannAlgebra(max(options.grassmann, 2))
    for label in sampler.sample(lorentz, min(len(lorentz), 3)):
        derivation = adjoint_derivation(ambient, label, g)
        steps = [random_apoint(g, algebra, sampler) for _ in range(3)]
        for defect in simplex_equivariance_defect(derivation, steps):
            expect_zero(defect, f"the simplex is not equivariant under {label}", generator=label)
        expect_zero(
            integrand_lie_derivative(alpha, derivation, steps),
            f"the integrand of ∫α changes under {label}",
            generator=label,
        )
    return {"generators": min(len(lorentz), 3)}


def checks(options: SuiteOptions) -> list[Check]:
    specs: list[tuple[str, str, partial[Witness]]] = [
        (
            "grassmann",
            "odd elements square to zero and A ↦ A-points is a functor",
            partial(_grassmann),
        ),
        (
            "reduction.heisenberg",
            "over ΛR⁰ the supergroup integral is the ordinary one",
            partial(_reduction),
        ),
        (
            "homogeneous.heisenberg",
            "F̃ is homogeneous exactly when F is equivariant",
            partial(_homogeneous),
        ),
    ]
    for k in options.ks:
        tag = AlgebraTag.from_dimension(k).value
        specs += [
            (f"apoints.{tag}", "n_A is a Lie algebra over A₀", partial(_apoints, k)),
            (f"induced.{tag}", "d(α_A) = (dα)_A = 0", partial(_induced, k)),
            (
                f"superstring.{tag}",
                "∫α is a normalized 3-cocycle on the supertranslation group",
                partial(_superstring, k),
            ),
            (
                f"twobrane.{tag}",
                "∫β is a normalized 4-cocycle on the supertranslation group",
                partial(_twobrane, k),
            ),
            (
                f"naturality.{tag}",
                "∫α is natural in the Grassmann algebra",
                partial(_naturality, k),
            ),
            (
                f"equivariance.{tag}",
                "the simplices and the integrand of ∫α are Lorentz equivariant",
                partial(_equivariance, k),
            ),
        ]
    result = []
    for name, anchor, fn in specs:
        check_id = f"super.{name}"
        result.append(Check(check_id, Suite.SUPER, anchor, partial(fn, options, check_id)))
    return result
