"""Tests for cochains, Koszul signs and cochain documents."""

from fractions import Fraction

import pytest

from supercocycle_kit.cohomology import (
    Cochain,
    bigrade,
    chi,
    cochain_from_json,
    cochain_to_json,
    count_monomials,
    koszul_sign,
    make_alpha,
    monomials,
    permutation_sign,
    random_cochain,
    sort_with_sign,
)
from supercocycle_kit.exceptions import (
    CochainError,
    ParentMismatchError,
    SerializationError,
    SizeGuardError,
)
from supercocycle_kit.models.enums import Parity
from supercocycle_kit.superalgebra import build_heisenberg, build_supertranslation
from supercocycle_kit.utils.sampling import RationalSampler


class TestSigns:
    """Test the sign engine."""

    def test_even_transposition_is_negative(self):
        """Test that swapping two even arguments costs a sign."""
        assert sort_with_sign((2, 0), [0, 0, 0]) == ((0, 2), -1)

    def test_odd_transposition_is_positive(self):
        """Test that odd arguments commute."""
        assert sort_with_sign((4, 3), [0, 0, 0, 1, 1]) == ((3, 4), 1)

    def test_repeated_even_vanishes(self):
        """Test that a repeated even index has sign 0 and a repeated odd one does not."""
        assert sort_with_sign((1, 1), [0, 0])[1] == 0
        assert sort_with_sign((1, 1), [0, 1])[1] == 1

    def test_chi_is_sgn_times_epsilon(self):
        """Test χ = sgn·ε on a mixed permutation."""
        parities = [1, 1, 0]
        order = [1, 0, 2]
        assert permutation_sign(order) == -1
        assert koszul_sign(parities, order) == -1
        assert chi(parities, order) == 1
        assert chi([0, 0, 0], [2, 0, 1]) == 1


class TestCochain:
    """Test construction, evaluation and arithmetic."""

    def test_from_labels_sorts_with_sign(self):
        """Test that ω(q, p) = 1 stores ω(p, q) = −1."""
        h = build_heisenberg()
        omega = Cochain.from_labels(h, {("q", "p"): 1})
        assert omega.value((0, 1)) == -1
        assert omega.value_at("q", "p") == 1
        assert omega.value_at("p", "p") == 0

    def test_conflicting_values_raise(self):
        """Test that values breaking antisymmetry are rejected."""
        h = build_heisenberg()
        with pytest.raises(CochainError):
            Cochain.from_values(h, 2, {(0, 1): 1, (1, 0): 1})
        with pytest.raises(CochainError):
            Cochain.from_values(h, 2, {(0, 0): 1})

    def test_canonical_monomials_only(self):
        """Test that stored monomials must be canonical and of the right level."""
        h = build_heisenberg()
        with pytest.raises(CochainError):
            Cochain(h, 2, {(1, 0): 1})
        with pytest.raises(CochainError):
            Cochain(h, 2, {(0,): 1})
        with pytest.raises(CochainError):
            Cochain(h, -1)

    def test_evaluate_on_elements(self):
        """Test (p*∧q*)(x, y) = x_p y_q − x_q y_p."""
        h = build_heisenberg()
        omega = Cochain.dual(h, "p", "q")
        x = h.element({"p": 2, "q": 1})
        y = h.element({"p": 1, "q": 3, "z": 7})
        assert omega.evaluate(x, y) == 5
        assert omega.evaluate(y, x) == -5

    def test_evaluate_checks_arguments(self):
        """Test the argument count and parent checks."""
        h = build_heisenberg()
        omega = Cochain.dual(h, "p", "q")
        with pytest.raises(CochainError):
            omega.evaluate(h.basis_element("p"))
        other = build_heisenberg()
        with pytest.raises(ParentMismatchError):
            omega.evaluate(other.basis_element("p"), other.basis_element("q"))

    def test_odd_arguments_are_symmetric(self):
        """Test ω(s1, s0) = ω(s0, s1) for an even 2-cochain on odd arguments."""
        t = build_supertranslation(1)
        omega = Cochain.dual(t, "s0", "s1")
        assert omega.value_at("s1", "s0") == 1
        assert omega.parity is Parity.EVEN
        assert Cochain.dual(t, "t", "s0").parity is Parity.ODD

    def test_mixed_parity_raises(self):
        """Test that an inhomogeneous cochain has no parity."""
        t = build_supertranslation(1)
        mixed = Cochain.dual(t, "t", "s0") + Cochain.dual(t, "t", "x")
        with pytest.raises(CochainError):
            _ = mixed.parity

    def test_arithmetic(self):
        """Test sums, scaling and equality."""
        h = build_heisenberg()
        a = Cochain.dual(h, "p", "q")
        b = Cochain.dual(h, "q", "z")
        assert (a + b) - b == a
        assert 2 * a == a + a
        assert (a * Fraction(1, 2)).value_at("p", "q") == Fraction(1, 2)
        assert a != Cochain.dual(h, "p")
        with pytest.raises(CochainError):
            a + Cochain.dual(h, "p")

    def test_bigrades(self):
        """Test the (even, odd) split of α."""
        alpha = make_alpha(1)
        assert alpha.bigrades() == {(1, 2)}
        assert bigrade(alpha.parent, (0, 3, 4)) == (1, 2)
        assert alpha.restrict_to_bigrade((3, 0)).is_zero()


class TestMonomials:
    """Test monomial enumeration and the size guard."""

    def test_counts(self):
        """Test dim C² of Heisenberg and of T(2,1)."""
        h = build_heisenberg()
        assert count_monomials(h, 2) == 3
        t = build_supertranslation(1)
        assert count_monomials(t, 2) == 12
        assert count_monomials(t, 2, (0, 2)) == 3
        assert len(list(monomials(t, 2))) == 12

    def test_odd_indices_may_repeat(self):
        """Test that (s0, s0) is a canonical monomial."""
        t = build_supertranslation(1)
        assert (3, 3) in set(monomials(t, 2, (0, 2)))

    def test_random_cochain_guard(self, sampler):
        """Test that random_cochain respects max_monomials."""
        t = build_supertranslation(2)
        with pytest.raises(SizeGuardError) as exc_info:
            random_cochain(t, 3, sampler, max_monomials=5)
        assert exc_info.value.limit == 5

    def test_random_cochain_is_seeded(self):
        """Test that equal seeds give equal cochains."""
        t = build_supertranslation(1)
        first = random_cochain(t, 2, RationalSampler(seed=3))
        second = random_cochain(t, 2, RationalSampler(seed=3))
        assert first == second


class TestCochainDocuments:
    """Test reading and writing cochains as JSON documents."""

    def test_document_layout(self):
        """Test the label-tuple and rational-string layout."""
        h = build_heisenberg()
        data = cochain_to_json(Cochain.from_labels(h, {("q", "p"): Fraction(1, 2)}))
        assert data == {
            "algebra": "heisenberg",
            "level": 2,
            "terms": [{"labels": ["p", "q"], "coef": "-1/2"}],
        }

    def test_alpha_survives_a_document(self):
        """Test that α is read back unchanged."""
        alpha = make_alpha(2)
        assert cochain_from_json(cochain_to_json(alpha), alpha.parent) == alpha

    @pytest.mark.parametrize(
        "terms",
        [
            [{"labels": ["p", "w"], "coef": "1"}],
            [{"labels": ["p"], "coef": "1"}],
            [{"labels": ["p", "q"], "coef": "0.5"}],
            [{"labels": ["p", "p"], "coef": "1"}],
        ],
        ids=["unknown-label", "wrong-level", "inexact", "repeated-even"],
    )
    def test_bad_documents(self, terms):
        """Test that malformed documents raise SerializationError."""
        h = build_heisenberg()
        with pytest.raises(SerializationError):
            cochain_from_json({"algebra": "heisenberg", "level": 2, "terms": terms}, h)
