"""Spinor checks in dimensions k+2 and k+3: the 3-ψ and 4-Ψ rules and their companions."""

from fractions import Fraction
from functools import partial

from supercocycle_kit.algebra import DAMatrix
from supercocycle_kit.models.enums import AlgebraTag, Chirality, Flavor, Suite
from supercocycle_kit.spacetime import (
    LinearOperator,
    bracket_spinors,
    check_trilinear_sym,
    four_psi,
    gamma,
    gamma_operator,
    gamma_zero_defect,
    lorentz_generator,
    metric,
    minkowski_g,
    module_dimension,
    pairing,
    random_spinor_k2,
    random_spinor_k3,
    random_vector_k2,
    random_vector_k3,
    reflection_defect,
    rho,
    spin_normalization,
    three_psi,
    unit_vector_defect,
    vector_basis,
)

from .runner import Check, SuiteOptions, Witness, expect_equal, expect_zero


def _three_psi(
    tag: AlgebraTag, chirality: Chirality, options: SuiteOptions, check_id: str
) -> Witness:
    sampler = options.sampler(check_id)
    samples = options.samples_for("spinor.three_psi")
    for _ in range(samples):
        psi = random_spinor_k2(tag, chirality, sampler)
        expect_zero(three_psi(psi), "[ψ, ψ]ψ ≠ 0", psi=psi.to_coords())
    return {"samples": samples}


def _trilinear(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    for _ in range(options.samples):
        psi, phi, chi = (random_spinor_k2(tag, Chirality.PLUS, sampler) for _ in range(3))
        expect_zero(
            check_trilinear_sym(psi, phi, chi),
            "polarized 3-ψ rule fails",
            psi=psi.to_coords(),
            phi=phi.to_coords(),
            chi=chi.to_coords(),
        )
    return {"samples": options.samples}


def _four_psi(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    samples = options.samples_for("spinor.four_psi")
    for _ in range(samples):
        psi = random_spinor_k3(tag, sampler)
        expect_zero(four_psi(psi), "[Ψ, [Ψ, Ψ]Ψ] ≠ 0", psi=psi.to_coords())
    return {"samples": samples}


def _bracket(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    for _ in range(options.samples):
        psi, phi = (random_spinor_k2(tag, Chirality.PLUS, sampler) for _ in range(2))
        a = random_vector_k2(tag, sampler)
        expect_equal(
            minkowski_g(bracket_spinors(psi, phi), a),
            pairing(psi, gamma(a, phi)),
            "g([ψ, φ], A) ≠ ⟨ψ, γ(A)φ⟩",
            psi=psi.to_coords(),
            phi=phi.to_coords(),
            vector=a.to_coords(),
        )
        square = bracket_spinors(psi, psi)
        expect_zero(minkowski_g(square, square), "[ψ, ψ] is not null", psi=psi.to_coords())
    return {"samples": options.samples}


def _unit_vector(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    for _ in range(options.samples):
        a = random_vector_k2(tag, sampler)
        psi = random_spinor_k2(tag, Chirality.PLUS, sampler)
        phi = random_spinor_k2(tag, Chirality.MINUS, sampler)
        expect_zero(
            unit_vector_defect(a, psi, phi),
            "⟨γ̃(A)φ, γ(A)ψ⟩ ≠ g(A, A)⟨ψ, φ⟩",
            vector=a.to_coords(),
            psi=psi.to_coords(),
            phi=phi.to_coords(),
        )
    return {"samples": options.samples}


def _reflection(tag: AlgebraTag, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    zero = DAMatrix.zeros(tag, 4, 4)
    for _ in range(options.samples):
        a = random_vector_k3(tag, sampler)
        psi, phi = random_spinor_k3(tag, sampler), random_spinor_k3(tag, sampler)
        expect_zero(
            reflection_defect(a, psi, phi),
            "⟨𝒜Ψ, 𝒜Φ⟩ ≠ −h(𝒜, 𝒜)⟨Ψ, Φ⟩",
            vector=a.to_coords(),
            psi=psi.to_coords(),
            phi=phi.to_coords(),
        )
        expect_equal(gamma_zero_defect(a), zero, "Γ⁰𝒜 + 𝒜†Γ⁰ ≠ 0", vector=a.to_coords())
    return {"samples": options.samples}


def _identity(dimension: int) -> LinearOperator:
    return LinearOperator.from_images(
        dimension, lambda j: [Fraction(int(i == j)) for i in range(dimension)]
    )


def _clifford(tag: AlgebraTag, flavor: Flavor, options: SuiteOptions, check_id: str) -> Witness:
    basis = vector_basis(tag, flavor)
    gammas = [gamma_operator(v) for v in basis]
    one = _identity(module_dimension(tag))
    for i, u in enumerate(basis):
        for j in range(i, len(basis)):
            anticommutator = gammas[i] @ gammas[j] + gammas[j] @ gammas[i]
            expect_equal(
                anticommutator,
                one.scale(2 * metric(u, basis[j])),
                "Γ(A)Γ(B) + Γ(B)Γ(A) ≠ 2g(A, B)",
                first=i,
                second=j,
            )
    return {"pairs": len(basis) * (len(basis) + 1) // 2}


def _lorentz(tag: AlgebraTag, flavor: Flavor, options: SuiteOptions, check_id: str) -> Witness:
    basis = vector_basis(tag, flavor)
    gammas = [gamma_operator(v) for v in basis]
    count = 0
    for i, u in enumerate(basis):
        for j in range(i + 1, len(basis)):
            sigma = lorentz_generator(u, basis[j]).spinor()
            for a, vector in enumerate(basis):
                count += 1
                expect_equal(
                    gamma_operator(rho(u, basis[j], vector)),
                    sigma.commutator(gammas[a]),
                    "Γ(ρ(u∧v)A) ≠ [σ(u∧v), Γ(A)]",
                    u=i,
                    v=j,
                    vector=a,
                )
    return {"triples": count, "normalization": spin_normalization(tag, flavor)}


def _suffix(flavor: Flavor) -> str:
    return "k2" if flavor is Flavor.K2 else "k3"


def _specs(tag: AlgebraTag) -> list[tuple[str, str, partial[Witness]]]:
    specs = [
        (
            f"three_psi.{chirality.value}",
            "the 3-ψ rule [ψ, ψ]ψ = 0 holds in dimension k+2",
            partial(_three_psi, tag, chirality),
        )
        for chirality in Chirality
    ]
    specs += [
        ("trilinear", "the polarized 3-ψ rule holds on S₊", partial(_trilinear, tag)),
        ("four_psi", "the 4-Ψ rule [Ψ, [Ψ, Ψ]Ψ] = 0 holds in k+3", partial(_four_psi, tag)),
        ("bracket", "g([ψ, φ], A) = ⟨ψ, γ(A)φ⟩ and [ψ, ψ] is null", partial(_bracket, tag)),
        ("unit_vector", "γ(A) is an isometry up to g(A, A)", partial(_unit_vector, tag)),
        ("reflection", "𝒜 acts on 𝒮 as a reflection up to h(𝒜, 𝒜)", partial(_reflection, tag)),
    ]
    for flavor in Flavor:
        specs.append(
            (
                f"clifford.{_suffix(flavor)}",
                "the gamma operators satisfy the Clifford relation",
                partial(_clifford, tag, flavor),
            )
        )
        specs.append(
            (
                f"lorentz.{_suffix(flavor)}",
                "σ(u∧v) ∝ [Γ(u), Γ(v)] intertwines the vector and spinor actions",
                partial(_lorentz, tag, flavor),
            )
        )
    return specs


def checks(options: SuiteOptions) -> list[Check]:
    result = []
    for k in options.ks:
        tag = AlgebraTag.from_dimension(k)
        for name, anchor, fn in _specs(tag):
            check_id = f"spinor.{name}.{tag.value}"
            result.append(Check(check_id, Suite.SPINOR, anchor, partial(fn, options, check_id)))
    return result
