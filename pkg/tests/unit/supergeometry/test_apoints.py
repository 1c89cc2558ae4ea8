"""Tests for A-points, their bracket and the induced cochains."""

import pytest

from supercocycle_kit.cohomology import make_alpha
from supercocycle_kit.exceptions import ParentMismatchError, UsageError
from supercocycle_kit.superalgebra import bracket, build_heisenberg, build_supertranslation
from supercocycle_kit.supergeometry import (
    GrassmannAlgebra,
    GrassmannHom,
    a_bracket,
    apoint,
    check_apoint,
    induced_coboundary,
    induced_cochain,
    lift,
    push_forward,
    random_apoint,
    super_exp_mul,
)


class TestAPoints:
    """Test construction and parity checks."""

    def test_parity_is_enforced(self):
        """Test that odd directions need odd coefficients and even ones even coefficients."""
        t = build_supertranslation(1)
        a = GrassmannAlgebra(2)
        t1 = a.generator(1)
        x = apoint(t, a, {"t": a.scalar(2), "s0": t1})
        assert x.coefficient("s0") == t1
        with pytest.raises(UsageError):
            apoint(t, a, {"s0": a.one()})
        with pytest.raises(UsageError):
            apoint(t, a, {"t": t1})
        with pytest.raises(UsageError):
            check_apoint(t.basis_element("t"), a)

    def test_random_apoints(self, sampler):
        """Test that random A-points pass the check and respect the support."""
        t = build_supertranslation(2)
        a = GrassmannAlgebra(3)
        check_apoint(random_apoint(t, a, sampler), a)
        assert len(random_apoint(t, a, sampler, support=2).support()) <= 2

    def test_lift(self):
        """Test that rational even elements lift with scalar coefficients."""
        h = build_heisenberg()
        a = GrassmannAlgebra(1)
        lifted = lift(h.element({"p": 2}), a)
        assert lifted.coefficient("p") == a.scalar(2)
        t = build_supertranslation(1)
        with pytest.raises(UsageError):
            lift(t.basis_element("s0"), a)


class TestABracket:
    """Test the Lie algebra n_A over A₀."""

    def test_sign_of_odd_directions(self):
        """Test [θ₁s0, θ₂s0]_A = θ₂θ₁[s0, s0]."""
        t = build_supertranslation(1)
        a = GrassmannAlgebra(2)
        t1, t2 = a.generators()
        s0 = t.basis_element("s0")
        lhs = a_bracket(s0.map_coefficients(lambda _: t1), s0.map_coefficients(lambda _: t2))
        expected = bracket(s0, s0).map_coefficients(lambda c: a.scalar(c) * t2 * t1)
        assert lhs == expected
        assert not lhs.is_zero()

    def test_lie_algebra_over_even_part(self, sampler):
        """Test antisymmetry and [X, X]_A = 0."""
        t = build_supertranslation(2)
        a = GrassmannAlgebra(3)
        for _ in range(3):
            x, y = random_apoint(t, a, sampler), random_apoint(t, a, sampler)
            assert a_bracket(x, y) == -a_bracket(y, x)
            assert a_bracket(x, x).is_zero()

    def test_mixed_algebras(self, sampler):
        """Test that A-points over different algebras cannot be bracketed."""
        t = build_supertranslation(1)
        x = random_apoint(t, GrassmannAlgebra(2), sampler)
        y = random_apoint(t, GrassmannAlgebra(3), sampler)
        with pytest.raises(ParentMismatchError):
            a_bracket(x, y)


class TestSupergroupProduct:
    """Test the exponential supergroup law on A-points."""

    def test_group_laws(self, sampler):
        """Test the identity, associativity and inverses."""
        t = build_supertranslation(1)
        a = GrassmannAlgebra(2)
        x, y, z = (random_apoint(t, a, sampler) for _ in range(3))
        assert super_exp_mul(x, t.zero()) == x
        assert super_exp_mul(super_exp_mul(x, y), z) == super_exp_mul(x, super_exp_mul(y, z))
        assert super_exp_mul(x, -x).is_zero()

    def test_push_forward_is_a_homomorphism(self, sampler):
        """Test N_f(xy) = N_f(x) N_f(y)."""
        t = build_supertranslation(1)
        a, b = GrassmannAlgebra(2), GrassmannAlgebra(3)
        f = GrassmannHom.random(a, b, sampler)
        x, y = random_apoint(t, a, sampler), random_apoint(t, a, sampler)
        lhs = push_forward(f, super_exp_mul(x, y))
        assert lhs == super_exp_mul(push_forward(f, x), push_forward(f, y))
        check_apoint(push_forward(f, x), b)


class TestInducedCochain:
    """Test ω_A and its ungraded coboundary."""

    def test_alpha_stays_closed(self, sampler):
        """Test d(α_A) = 0 at random A-points."""
        alpha = make_alpha(1)
        a = GrassmannAlgebra(3)
        alpha_a = induced_cochain(alpha, a)
        assert alpha_a.level == 3
        for _ in range(3):
            points = [random_apoint(alpha.parent, a, sampler) for _ in range(4)]
            assert induced_coboundary(alpha_a, points) == 0

    def test_argument_checks(self, sampler):
        """Test the point count and the A-point check."""
        alpha = make_alpha(1)
        a = GrassmannAlgebra(2)
        alpha_a = induced_cochain(alpha, a)
        points = [random_apoint(alpha.parent, a, sampler) for _ in range(3)]
        with pytest.raises(UsageError):
            induced_coboundary(alpha_a, points)
        with pytest.raises(UsageError):
            alpha_a(*points[:2], alpha.parent.basis_element("t"))
