"""Tests for the algebra builders and JSON configuration files."""

from fractions import Fraction

import orjson
import pytest

from supercocycle_kit.exceptions import ConfigurationError, SerializationError, UsageError
from supercocycle_kit.models.algebra import AlgebraConfig
from supercocycle_kit.models.enums import Flavor
from supercocycle_kit.spacetime import VectorK2, minkowski_g
from supercocycle_kit.superalgebra import (
    algebra_from_config,
    algebra_to_config,
    build_abelian,
    build_heisenberg,
    build_heisenberg_torus,
    build_poincare,
    build_so,
    build_supertranslation,
    builtin_algebra,
    division_tag,
    is_two_step_nilpotent,
    load_algebra,
    lorentz_labels,
    validate,
)


class TestBuilders:
    """Test the built-in algebras."""

    @pytest.mark.parametrize(
        "k,flavor,dims",
        [
            (1, Flavor.K2, (3, 2)),
            (2, Flavor.K2, (4, 4)),
            (4, Flavor.K2, (6, 8)),
            (8, Flavor.K2, (10, 16)),
            (1, Flavor.K3, (4, 4)),
            (8, Flavor.K3, (11, 32)),
        ],
    )
    def test_supertranslation_dimensions(self, k, flavor, dims):
        """Test dim T = (k+2 | 2k) and (k+3 | 4k)."""
        assert build_supertranslation(k, flavor).basis.dimensions == dims

    @pytest.mark.parametrize("k", [1, 2, 4])
    @pytest.mark.parametrize("flavor", list(Flavor))
    def test_supertranslations_are_valid_and_nilpotent(self, k, flavor):
        """Test that T satisfies Jacobi and is two-step nilpotent."""
        t = build_supertranslation(k, flavor)
        assert validate(t).valid
        assert is_two_step_nilpotent(t)

    def test_odd_squares_are_null(self):
        """Test that [s_i, s_i] is a null vector for every basis spinor."""
        t = build_supertranslation(4)
        tag = division_tag(4)
        n_even = t.basis.even_count
        for i in range(n_even, t.dimension):
            coords = [t.structure_constant(i, i, n) for n in range(n_even)]
            square = VectorK2.from_coords(tag, coords)
            assert not square.is_zero()
            assert minkowski_g(square, square) == 0

    def test_only_odd_brackets_in_supertranslations(self):
        """Test that even elements are central in T."""
        t = build_supertranslation(2)
        for (i, j), _ in t.nonzero_brackets():
            assert t.parity(i) and t.parity(j)

    def test_poincare_layout(self):
        """Test the basis order m_u_v, vectors, spinors."""
        g = build_poincare(1)
        assert g.basis.dimensions == (6, 2)
        assert g.labels[:3] == tuple(lorentz_labels(["t", "x", "y0"]))
        assert g.labels[3:] == ("t", "x", "y0", "s0", "s1")

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [2, 4])
    def test_poincare_is_valid(self, k):
        """Test graded Jacobi for the larger Poincaré superalgebras."""
        assert validate(build_poincare(k)).valid

    def test_big_poincare_is_valid(self):
        """Test graded Jacobi for siso(3,1)."""
        assert validate(build_poincare(1, Flavor.K3)).valid

    def test_abelian(self):
        """Test the abelian builder."""
        g = build_abelian(2, 3)
        assert g.is_abelian()
        assert g.basis.dimensions == (2, 3)
        assert g.labels[-1] == "f2"

    def test_bad_parameters(self):
        """Test the errors for unsupported k and n."""
        with pytest.raises(UsageError):
            division_tag(3)
        with pytest.raises(UsageError):
            build_supertranslation(5)
        with pytest.raises(UsageError):
            build_so(2)


class TestBuiltinLookup:
    """Test lookup by CLI name."""

    @pytest.mark.parametrize(
        "name,dimension",
        [("heisenberg", 3), ("heisenberg-torus", 4), ("so3", 3), ("so5", 10), ("T", 5)],
    )
    def test_known_names(self, name, dimension):
        """Test every built-in name resolves."""
        assert builtin_algebra(name).dimension == dimension

    def test_big_flavor(self):
        """Test that ``big`` selects the k+3 flavor."""
        assert builtin_algebra("T", k=2, big=True).basis.dimensions == (5, 8)
        assert builtin_algebra("siso", k=1).name == "siso(2,1)"

    def test_unknown_name(self):
        """Test that unknown names raise UsageError."""
        with pytest.raises(UsageError) as exc_info:
            builtin_algebra("sl2")
        assert "heisenberg" in exc_info.value.details["known"]


class TestAlgebraConfig:
    """Test AlgebraConfig conversion and files."""

    @pytest.mark.parametrize(
        "algebra",
        [build_heisenberg(), build_heisenberg_torus(), build_so(3), build_supertranslation(2)],
        ids=["heisenberg", "torus", "so3", "T"],
    )
    def test_config_round_trip(self, algebra):
        """Test that algebra_from_config inverts algebra_to_config."""
        assert algebra_from_config(algebra_to_config(algebra)) == algebra

    def test_one_entry_per_unordered_pair(self):
        """Test that the Heisenberg file lists [p, q] only."""
        config = algebra_to_config(build_heisenberg())
        assert [(e.x, e.y) for e in config.brackets] == [("p", "q")]
        assert config.brackets[0].result[0].coef == "1"

    def test_load_from_file(self, tmp_path):
        """Test reading an algebra JSON file."""
        path = tmp_path / "torus.json"
        path.write_bytes(orjson.dumps(algebra_to_config(build_heisenberg_torus()).model_dump()))
        assert load_algebra(path) == build_heisenberg_torus()

    def test_rational_coefficients(self, tmp_path):
        """Test coefficients given as rational strings."""
        raw = {
            "name": "scaled",
            "basis": [
                {"label": "p", "parity": "even"},
                {"label": "q", "parity": "even"},
                {"label": "z", "parity": "even"},
            ],
            "brackets": [{"x": "p", "y": "q", "result": [{"coef": "-3/2", "label": "z"}]}],
        }
        path = tmp_path / "scaled.json"
        path.write_bytes(orjson.dumps(raw))
        g = load_algebra(path)
        assert g.structure_constant(1, 0, 2) == Fraction(3, 2)

    def test_invalid_json(self, tmp_path):
        """Test that unreadable files raise SerializationError."""
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(SerializationError):
            load_algebra(path)
        with pytest.raises(SerializationError):
            load_algebra(tmp_path / "missing.json")

    def test_schema_errors(self, tmp_path):
        """Test that schema violations raise ConfigurationError."""
        path = tmp_path / "bad.json"
        path.write_bytes(orjson.dumps({"basis": [{"label": "p", "parity": "neutral"}]}))
        with pytest.raises(ConfigurationError):
            load_algebra(path)

    def test_failing_jacobi_is_rejected(self):
        """Test that a config violating Jacobi raises ConfigurationError."""
        config = AlgebraConfig.model_validate(
            {
                "basis": [{"label": lbl, "parity": "even"} for lbl in ("a", "b", "c")],
                "brackets": [
                    {"x": "a", "y": "b", "result": [{"coef": "1", "label": "a"}]},
                    {"x": "a", "y": "c", "result": [{"coef": "1", "label": "b"}]},
                ],
            }
        )
        with pytest.raises(ConfigurationError, match="jacobi"):
            algebra_from_config(config)

    def test_unknown_label_is_a_configuration_error(self):
        """Test that bracket labels must be declared."""
        config = AlgebraConfig.model_validate(
            {
                "basis": [{"label": "a", "parity": "even"}],
                "brackets": [{"x": "a", "y": "b", "result": []}],
            }
        )
        with pytest.raises(ConfigurationError):
            algebra_from_config(config)
