"""Tests for unshuffles, slim L∞ data and the generalized Jacobi checker."""

from fractions import Fraction
from functools import partial

import pytest

from supercocycle_kit.cohomology import Cochain, coboundary, make_gamma, make_j, random_cochain
from supercocycle_kit.exceptions import CochainError, ParentMismatchError, UsageError
from supercocycle_kit.linfty import (
    Unshuffle,
    build_heisenberg_2algebra,
    build_slim,
    build_string,
    build_superstring,
    build_twobrane,
    check_linfty,
    extract,
    jacobi_terms,
    slim_terms,
    unshuffles,
)
from supercocycle_kit.superalgebra import build_heisenberg, build_supertranslation


class TestUnshuffles:
    """Test (j, n−j)-unshuffles and their signs."""

    def test_small_cases(self):
        """Test S(1,2) and the count of S(2,4)."""
        assert [u.order for u in unshuffles(1, 2)] == [(0, 1), (1, 0)]
        assert len(unshuffles(2, 4)) == 6
        assert len(unshuffles(1, 3)) == 3

    def test_head_and_tail(self):
        """Test the split of an unshuffle."""
        sigma = Unshuffle((1, 0, 2), 1)
        assert sigma.head() == (1,)
        assert sigma.tail() == (0, 2)
        assert sigma.sign == -1

    def test_chi_uses_grades(self):
        """Test that swapping two odd arguments has χ = +1."""
        sigma = Unshuffle((1, 0), 1)
        assert sigma.chi([1, 1]) == 1
        assert sigma.chi([0, 0]) == -1

    def test_invalid_unshuffles(self):
        """Test the permutation and block-order checks."""
        with pytest.raises(UsageError):
            Unshuffle((0, 2, 1), 1)
        with pytest.raises(UsageError):
            Unshuffle((0, 0), 1)
        with pytest.raises(UsageError):
            unshuffles(0, 3)


class TestSlimData:
    """Test packaging a cocycle as slim L∞ data."""

    def test_heisenberg_layout(self):
        """Test indices, degrees and brackets of the Heisenberg Lie 2-algebra."""
        data = build_heisenberg_2algebra()
        assert data.n == 2
        assert data.dimension == 4
        assert data.label(data.r_index) == "r"
        assert data.degree(data.r_index) == 1
        assert data.grade(data.r_index) == 1
        assert data.bracket(2, (0, 1)) == {2: 1}
        assert data.bracket(3, (0, 1, 2)) == {3: 1}
        assert data.bracket(2, (0, 3)) == {}
        assert data.bracket(1, (0,)) == {}

    def test_extract(self):
        """Test that extract recovers (g, R, ρ, ω)."""
        data = build_heisenberg_2algebra()
        quadruple = extract(data)
        assert quadruple.algebra is data.algebra
        assert quadruple.module_dimension == 1
        assert quadruple.action is None
        assert quadruple.cocycle == data.cocycle

    def test_build_errors(self):
        """Test the level, n, parent and parity checks."""
        gamma = make_gamma()
        with pytest.raises(UsageError):
            build_slim(gamma.parent, 0, gamma)
        with pytest.raises(CochainError):
            build_slim(gamma.parent, 3, gamma)
        with pytest.raises(ParentMismatchError):
            build_slim(build_heisenberg(), 2, gamma)
        t = build_supertranslation(1)
        with pytest.raises(CochainError):
            build_slim(t, 1, Cochain.dual(t, "t", "s0"))


class TestCheckLInfty:
    """Test the generalized Jacobi identities."""

    def test_heisenberg_passes(self):
        """Test that γ gives a Lie 2-algebra."""
        report = check_linfty(build_heisenberg_2algebra())
        assert report.passed
        assert report.arities == [1, 2, 3, 4]
        assert not report.sampled

    def test_jacobi_terms_at_arity_three(self):
        """Test that l₂ alone satisfies Jacobi on Heisenberg."""
        assert jacobi_terms(build_heisenberg_2algebra(), (0, 1, 2)) == {}

    @pytest.mark.parametrize("n", [3, 4])
    def test_string_passes(self, n):
        """Test the string Lie 2-algebra on so(n)."""
        report = check_linfty(build_string(n))
        assert report.passed
        assert report.tuples_checked > 0

    def test_perturbed_cocycle_fails_at_arity_n_plus_two(self, sampler):
        """Test that a non-closed top bracket breaks exactly arity 4."""
        j = make_j(4)
        while True:
            noise = random_cochain(j.parent, 3, sampler, density=0.2)
            if not coboundary(noise).is_zero():
                break
        report = check_linfty(build_slim(j.parent, 2, j + noise))
        assert not report.passed
        assert report.failing_arities == [4]
        assert report.failures[0].contributions

    def test_max_arity(self):
        """Test that max_arity stops the scan early."""
        report = check_linfty(build_heisenberg_2algebra(), max_arity=2)
        assert report.arities == [1, 2]

    def test_sampling(self):
        """Test that a small budget switches to sampled tuples."""
        report = check_linfty(build_string(4), exhaustive_tuples=10, samples=40, seed=5)
        assert report.sampled
        assert report.passed

    @pytest.mark.parametrize("k", [1, 2, 4, pytest.param(8, marks=pytest.mark.slow)])
    def test_superstring(self, k):
        """Test superstring(k+1,1) is a Lie 2-superalgebra."""
        data = build_superstring(k)
        assert data.algebra.name == f"siso({k + 1},1)"
        assert check_linfty(data).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [1, 2, 4, 8])
    def test_twobrane(self, k):
        """Test 2-brane(k+2,1) is a Lie 3-superalgebra."""
        data = build_twobrane(k)
        assert data.n == 3
        assert data.algebra.name == f"siso({k + 2},1)"
        assert check_linfty(data).passed


class TestSlimSplit:
    """Test that only the (2,2), (2,n+1) and (n+1,2) terms may contribute."""

    def test_slim_terms(self):
        """Test the allowed (i, j) pairs for n = 2 and n = 3."""
        assert slim_terms(2) == {(2, 2), (2, 3), (3, 2)}
        assert slim_terms(3) == {(2, 2), (2, 4), (4, 2)}

    @pytest.mark.parametrize(
        "build", [partial(build_string, 3), partial(build_string, 4), partial(build_superstring, 1)]
    )
    def test_nonzero_terms_stay_in_the_split(self, build):
        """Test the nonzero term keys of string(3), string(4) and superstring(2,1)."""
        report = check_linfty(build())
        assert report.passed
        assert set(report.nonzero_terms) <= {"3:2,2", "4:2,3", "4:3,2"}

    def test_stray_terms_fail_even_when_they_cancel(self, monkeypatch):
        """Test that cancelling (1,3) and (3,1) terms are recorded as a failure."""
        stray = {(1, 3): {0: Fraction(1)}, (3, 1): {0: Fraction(-1)}}
        monkeypatch.setattr(
            "supercocycle_kit.linfty.checker.jacobi_terms",
            lambda data, args: stray if len(args) == 3 else {},
        )
        report = check_linfty(build_heisenberg_2algebra(), max_arity=3)
        assert not report.passed
        assert report.failing_arities == [3]
        assert report.failures[0].unexpected == ["1,3", "3,1"]
        assert report.nonzero_terms["3:1,3"] == report.nonzero_terms["3:3,1"]
