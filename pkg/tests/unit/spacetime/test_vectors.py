"""Tests for vectors in dimensions k+2 and k+3."""

from fractions import Fraction

import pytest

from supercocycle_kit.algebra import DAElement
from supercocycle_kit.exceptions import ShapeError
from supercocycle_kit.models.enums import AlgebraTag, Flavor
from supercocycle_kit.spacetime import (
    VectorK2,
    VectorK3,
    determinant,
    metric,
    minkowski_g,
    minkowski_h,
    random_vector_k2,
    random_vector_k3,
    trace_reversal,
    vector_basis,
    vector_labels,
)
from tests.conftest import ALL_TAGS


class TestVectorK2:
    """Test hermitian 2×2 vectors and the metric g."""

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_coordinates_round_trip(self, tag, sampler):
        """Test from_coords inverts to_coords."""
        v = random_vector_k2(tag, sampler)
        assert VectorK2.from_coords(tag, v.to_coords()) == v
        assert len(v.to_coords()) == len(vector_labels(tag))

    def test_wrong_coordinate_count(self):
        """Test that k+2 coordinates are required."""
        with pytest.raises(ShapeError):
            VectorK2.from_coords(AlgebraTag.C, [1, 2, 3])

    def test_metric_signature(self):
        """Test g(t, t) = −1 and g(x, x) = g(y_i, y_i) = 1."""
        basis = vector_basis(AlgebraTag.H, Flavor.K2)
        norms = [minkowski_g(b, b) for b in basis]
        assert norms == [-1, 1, 1, 1, 1, 1]
        assert minkowski_g(basis[0], basis[1]) == 0

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_determinant_is_minus_norm(self, tag, sampler):
        """Test g(A, A) = −det(A) with det(A) = t² − x² − |y|²."""
        v = random_vector_k2(tag, sampler)
        assert determinant(v) == v.t * v.t - v.x * v.x - minkowski_g(
            VectorK2(0, 0, v.y), VectorK2(0, 0, v.y)
        )
        assert minkowski_g(v, v) == -determinant(v)

    def test_trace_reversal(self):
        """Test Ã = A − tr(A)·1 flips the time coordinate."""
        v = VectorK2(2, 3, DAElement(AlgebraTag.C, [1, 1]))
        reversed_v = trace_reversal(v)
        assert reversed_v.t == -2
        assert reversed_v.x == 3
        assert trace_reversal(reversed_v) == v

    def test_as_matrix(self):
        """Test A = [[t+x, y], [y*, t−x]]."""
        v = VectorK2(2, 3, DAElement(AlgebraTag.C, [1, 4]))
        entries = v.as_matrix().entries
        assert entries[0][0] == DAElement.real(AlgebraTag.C, 5)
        assert entries[1][1] == DAElement.real(AlgebraTag.C, -1)
        assert entries[1][0] == DAElement(AlgebraTag.C, [1, -4])

    def test_linear_structure(self, sampler):
        """Test vector arithmetic and comparison with 0."""
        v = random_vector_k2(AlgebraTag.O, sampler)
        assert v - v == 0
        assert 2 * v == v + v
        assert -v + v == VectorK2.zero(AlgebraTag.O)


class TestVectorK3:
    """Test vectors (a, A) and the metric h."""

    @pytest.mark.parametrize("tag", ALL_TAGS)
    def test_h_extends_g(self, tag, sampler):
        """Test h(𝒜, ℬ) = g(A, B) + ab."""
        u, v = random_vector_k3(tag, sampler), random_vector_k3(tag, sampler)
        assert minkowski_h(u, v) == minkowski_g(u.inner, v.inner) + u.a * v.a
        assert metric(u, v) == minkowski_h(u, v)

    def test_embed_is_the_a_zero_slice(self, sampler):
        """Test that embedded vectors keep their g-norm."""
        v = random_vector_k2(AlgebraTag.H, sampler)
        big = VectorK3.embed(v)
        assert big.a == 0
        assert minkowski_h(big, big) == minkowski_g(v, v)

    def test_a_is_the_last_coordinate(self):
        """Test the coordinate order t, x, y.., a."""
        big = VectorK3.basis(AlgebraTag.C, 4)
        assert big.a == 1
        assert big.inner == 0
        assert vector_labels(AlgebraTag.C, extra=True)[-1] == "a"

    def test_wrong_coordinate_count(self):
        """Test that k+3 coordinates are required."""
        with pytest.raises(ShapeError):
            VectorK3.from_coords(AlgebraTag.R, [1, 2, 3])

    def test_metric_rejects_mixed_dimensions(self):
        """Test that g and h do not pair across dimensions."""
        with pytest.raises(ShapeError):
            metric(VectorK2.zero(AlgebraTag.R), VectorK3.zero(AlgebraTag.R))

    def test_four_by_four_matrix(self):
        """Test the block form [[a·1, Ã], [A, −a·1]]."""
        big = VectorK3(Fraction(1, 2), VectorK2(1, 0, DAElement.zero(AlgebraTag.R)))
        entries = big.as_matrix().entries
        assert entries[0][0] == DAElement.real(AlgebraTag.R, Fraction(1, 2))
        assert entries[3][3] == DAElement.real(AlgebraTag.R, Fraction(-1, 2))
        assert entries[0][2] == DAElement.real(AlgebraTag.R, -1)
        assert entries[2][0] == DAElement.real(AlgebraTag.R, 1)
