"""Tests for spinors, the Clifford action and the spinor identities."""

from fractions import Fraction

import pytest

from supercocycle_kit.algebra import DAMatrix
from supercocycle_kit.exceptions import ChiralityError, ShapeError
from supercocycle_kit.models.enums import AlgebraTag, Chirality, Flavor
from supercocycle_kit.spacetime import (
    SpinorK2,
    SpinorK3,
    VectorK2,
    bracket_big,
    bracket_spinors,
    check_trilinear_sym,
    clifford_act,
    four_psi,
    gamma,
    gamma_operator,
    gamma_tilde,
    gamma_zero_defect,
    lorentz_generator,
    minkowski_g,
    minkowski_h,
    module_dimension,
    pairing,
    pairing_big,
    random_spinor_k2,
    random_spinor_k3,
    random_vector_k2,
    random_vector_k3,
    reflection_defect,
    rho,
    spin_normalization,
    spinor_labels,
    spinor_quartic,
    star_form,
    three_psi,
    unit_vector_defect,
    vector_basis,
)
from tests.conftest import ALL_TAGS


class TestSpinorK2:
    """Test half spinors and their chirality bookkeeping."""

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_coordinates_round_trip(self, tag, sampler):
        """Test from_coords inverts to_coords."""
        psi = random_spinor_k2(tag, Chirality.MINUS, sampler)
        assert SpinorK2.from_coords(tag, Chirality.MINUS, psi.to_coords()) == psi
        assert len(psi.to_coords()) == len(spinor_labels(tag))

    def test_mixing_chiralities_raises(self):
        """Test that S₊ and S₋ spinors do not add."""
        plus = SpinorK2.basis(AlgebraTag.C, Chirality.PLUS, 0)
        minus = SpinorK2.basis(AlgebraTag.C, Chirality.MINUS, 0)
        with pytest.raises(ChiralityError):
            plus + minus

    def test_equal_coordinates_different_chirality(self):
        """Test that chirality is part of equality."""
        plus = SpinorK2.basis(AlgebraTag.R, Chirality.PLUS, 1)
        minus = SpinorK2.basis(AlgebraTag.R, Chirality.MINUS, 1)
        assert plus != minus

    def test_wrong_coordinate_count(self):
        """Test that 2k coordinates are required."""
        with pytest.raises(ShapeError):
            SpinorK2.from_coords(AlgebraTag.H, Chirality.PLUS, [1] * 4)

    def test_big_spinor_needs_plus_then_minus(self):
        """Test that 𝒮 = S₊ ⊕ S₋ in that order."""
        plus = SpinorK2.zero(AlgebraTag.C, Chirality.PLUS)
        minus = SpinorK2.zero(AlgebraTag.C, Chirality.MINUS)
        with pytest.raises(ChiralityError):
            SpinorK3(minus, plus)
        assert SpinorK3(plus, minus) == 0
        assert len(spinor_labels(AlgebraTag.C, big=True)) == module_dimension(AlgebraTag.C)


class TestCliffordAction:
    """Test γ, γ̃ and the Clifford relation."""

    def test_gamma_requires_plus(self):
        """Test that γ acts on S₊ and γ̃ on S₋ only."""
        v = VectorK2.zero(AlgebraTag.R)
        plus = SpinorK2.zero(AlgebraTag.R, Chirality.PLUS)
        minus = SpinorK2.zero(AlgebraTag.R, Chirality.MINUS)
        with pytest.raises(ChiralityError):
            gamma(v, minus)
        with pytest.raises(ChiralityError):
            gamma_tilde(v, plus)

    def test_dimension_mismatch_raises(self, sampler):
        """Test that a k+3 vector cannot act on a half spinor."""
        with pytest.raises(ShapeError):
            clifford_act(
                random_vector_k3(AlgebraTag.R, sampler),
                random_spinor_k2(AlgebraTag.R, Chirality.PLUS, sampler),
            )

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_acting_twice_multiplies_by_norm(self, tag, sampler):
        """Test γ̃(A)γ(A)ψ = g(A, A)ψ."""
        a = random_vector_k2(tag, sampler)
        psi = random_spinor_k2(tag, Chirality.PLUS, sampler)
        assert gamma_tilde(a, gamma(a, psi)) == psi * minkowski_g(a, a)

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_big_action_squares_to_h(self, tag, sampler):
        """Test 𝒜(𝒜Ψ) = h(𝒜, 𝒜)Ψ."""
        a = random_vector_k3(tag, sampler)
        psi = random_spinor_k3(tag, sampler)
        assert clifford_act(a, clifford_act(a, psi)) == psi * minkowski_h(a, a)

    @pytest.mark.parametrize("flavor", list(Flavor))
    def test_gamma_operators_anticommute(self, flavor):
        """Test Γ(u)Γ(v) + Γ(v)Γ(u) = 0 for orthogonal basis vectors."""
        basis = vector_basis(AlgebraTag.H, flavor)
        gu, gv = gamma_operator(basis[0]), gamma_operator(basis[2])
        assert (gu @ gv + gv @ gu).is_zero()

    def test_time_gamma_squares_to_minus_one(self):
        """Test Γ(t)² = −1 on every coordinate vector."""
        t = vector_basis(AlgebraTag.C, Flavor.K2)[0]
        op = gamma_operator(t)
        n = module_dimension(AlgebraTag.C)
        for j in range(n):
            unit = [Fraction(int(i == j)) for i in range(n)]
            assert (op @ op)(unit) == [-x for x in unit]


class TestSpinorIdentities:
    """Test the 3-ψ and 4-Ψ rules and their companions."""

    @pytest.mark.parametrize("tag", ALL_TAGS)
    @pytest.mark.parametrize("chirality", list(Chirality))
    def test_three_psi(self, tag, chirality, sampler):
        """Test [ψ, ψ]ψ = 0 on both half-spinor spaces."""
        for _ in range(3):
            assert three_psi(random_spinor_k2(tag, chirality, sampler)) == 0

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_trilinear(self, tag, sampler):
        """Test the polarized rule [ψ, φ]χ + [χ, ψ]φ + [φ, χ]ψ = 0."""
        psi, phi, chi = (random_spinor_k2(tag, Chirality.PLUS, sampler) for _ in range(3))
        assert check_trilinear_sym(psi, phi, chi) == 0
        theta = random_spinor_k2(tag, Chirality.PLUS, sampler)
        assert spinor_quartic(theta, psi, psi, psi) == 0

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_four_psi(self, tag, sampler):
        """Test [Ψ, [Ψ, Ψ]Ψ] = 0."""
        for _ in range(2):
            assert four_psi(random_spinor_k3(tag, sampler)) == 0

    def test_shifted_bracket_breaks_the_rule(self, sampler):
        """Test that [ψ, ψ] + e_x no longer annihilates ψ."""
        psi = random_spinor_k2(AlgebraTag.O, Chirality.PLUS, sampler)
        shifted = bracket_spinors(psi, psi) + vector_basis(AlgebraTag.O, Flavor.K2)[1]
        assert clifford_act(shifted, psi) != 0

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_bracket_represents_the_pairing(self, tag, sampler):
        """Test g([ψ, φ], A) = ⟨ψ, γ(A)φ⟩ and the symmetry of [ψ, φ]."""
        psi, phi = (random_spinor_k2(tag, Chirality.PLUS, sampler) for _ in range(2))
        a = random_vector_k2(tag, sampler)
        assert minkowski_g(bracket_spinors(psi, phi), a) == pairing(psi, gamma(a, phi))
        assert bracket_spinors(psi, phi) == bracket_spinors(phi, psi)

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_bracket_of_a_spinor_with_itself_is_null(self, tag, sampler):
        """Test g([ψ, ψ], [ψ, ψ]) = 0."""
        psi = random_spinor_k2(tag, Chirality.MINUS, sampler)
        square = bracket_spinors(psi, psi)
        assert minkowski_g(square, square) == 0

    def test_bracket_and_pairing_chirality_checks(self):
        """Test that the bracket pairs equal and the form opposite chiralities."""
        plus = SpinorK2.basis(AlgebraTag.H, Chirality.PLUS, 0)
        minus = SpinorK2.basis(AlgebraTag.H, Chirality.MINUS, 0)
        with pytest.raises(ChiralityError):
            bracket_spinors(plus, minus)
        with pytest.raises(ChiralityError):
            pairing(plus, plus)
        assert pairing(plus, minus) == 1

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_big_bracket_represents_the_form(self, tag, sampler):
        """Test h([Ψ, Φ], 𝒜) = ⟨Ψ, 𝒜Φ⟩ and the skew form."""
        psi, phi = random_spinor_k3(tag, sampler), random_spinor_k3(tag, sampler)
        a = random_vector_k3(tag, sampler)
        assert minkowski_h(bracket_big(psi, phi), a) == pairing_big(psi, clifford_act(a, phi))
        assert bracket_big(psi, phi) == bracket_big(phi, psi)
        assert pairing_big(psi, phi) == -pairing_big(phi, psi)

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_unit_vector_and_reflection(self, tag, sampler):
        """Test that γ(A) and 𝒜 preserve the forms up to the norms."""
        a = random_vector_k2(tag, sampler)
        psi = random_spinor_k2(tag, Chirality.PLUS, sampler)
        phi = random_spinor_k2(tag, Chirality.MINUS, sampler)
        assert unit_vector_defect(a, psi, phi) == 0
        big = random_vector_k3(tag, sampler)
        first, second = random_spinor_k3(tag, sampler), random_spinor_k3(tag, sampler)
        assert reflection_defect(big, first, second) == 0
        assert gamma_zero_defect(big) == DAMatrix.zeros(tag, 4, 4)

    def test_star_form_is_antisymmetric_in_the_vectors(self, sampler):
        """Test (Ψ * Φ)(𝒜, ℬ) = −(Ψ * Φ)(ℬ, 𝒜)."""
        tag = AlgebraTag.C
        psi, phi = random_spinor_k3(tag, sampler), random_spinor_k3(tag, sampler)
        a, b = random_vector_k3(tag, sampler), random_vector_k3(tag, sampler)
        assert star_form(psi, phi, a, b) == -star_form(psi, phi, b, a)
        assert star_form(psi, phi, a, a) == 0


class TestLorentzAction:
    """Test the vector and spinor actions of u∧v."""

    @pytest.mark.parametrize("tag", [AlgebraTag.R, AlgebraTag.C])
    @pytest.mark.parametrize("flavor", list(Flavor))
    def test_spinor_action_intertwines(self, tag, flavor):
        """Test Γ(ρ(u∧v)A) = [σ(u∧v), Γ(A)] on every basis triple."""
        basis = vector_basis(tag, flavor)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                sigma = lorentz_generator(basis[i], basis[j]).spinor()
                for vector in basis:
                    expected = gamma_operator(rho(basis[i], basis[j], vector))
                    assert sigma.commutator(gamma_operator(vector)) == expected

    def test_normalization_is_a_nonzero_rational(self):
        """Test that the spin normalization is determined."""
        c = spin_normalization(AlgebraTag.H, Flavor.K2)
        assert isinstance(c, Fraction)
        assert c != 0

    def test_parallel_vectors_give_zero(self):
        """Test that u∧u acts as zero."""
        u = vector_basis(AlgebraTag.C, Flavor.K2)[1]
        generator = lorentz_generator(u, u)
        assert generator.vector.is_zero()
        assert generator.spinor().is_zero()
        assert generator.spinor(Chirality.PLUS).is_zero()

    def test_chiral_blocks(self):
        """Test that k+2 generators split into S₊ and S₋ blocks."""
        basis = vector_basis(AlgebraTag.C, Flavor.K2)
        generator = lorentz_generator(basis[1], basis[2])
        half = module_dimension(AlgebraTag.C) // 2
        assert generator.spinor(Chirality.PLUS).dimension == half
        assert generator.spinor(Chirality.MINUS).chirality is Chirality.MINUS

    def test_big_spinors_have_no_chiral_halves(self):
        """Test that k+3 generators refuse a chirality."""
        basis = vector_basis(AlgebraTag.R, Flavor.K3)
        generator = lorentz_generator(basis[0], basis[3])
        with pytest.raises(ShapeError):
            generator.spinor(Chirality.PLUS)

    def test_mixed_dimensions_raise(self):
        """Test that u and v must live in one vector space."""
        small = vector_basis(AlgebraTag.R, Flavor.K2)[0]
        big = vector_basis(AlgebraTag.R, Flavor.K3)[0]
        with pytest.raises(ShapeError):
            lorentz_generator(small, big)
