"""Tests for configuration models and the configuration factory."""

import os

import pytest

from supercocycle_kit import (
    ConfigFactory,
    ConfigurationError,
    GuardConfig,
    KitConfig,
    SamplingConfig,
    create_config,
    load_config,
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Remove SUPERCOCYCLE_ variables so defaults are predictable."""
    for key in list(os.environ):
        if key.startswith("SUPERCOCYCLE_"):
            monkeypatch.delenv(key, raising=False)


class TestDefaults:
    """Test default values of the configuration models."""

    def test_kit_config_defaults(self):
        """Test the defaults of a bare KitConfig."""
        config = KitConfig(_env_file=None)
        assert config.workers == 1
        assert config.division_dimensions == [1, 2, 4, 8]
        assert config.include_timings is False
        assert config.sampling.seed == 20260101
        assert config.sampling.samples is None
        assert config.sampling.grassmann_generators == 2
        assert config.guards.max_monomials == 50_000
        assert config.guards.exhaustive_tuples == 20_000

    def test_division_dimensions_are_normalized(self):
        """Test sorting and de-duplication of k values."""
        config = KitConfig(_env_file=None, division_dimensions=[4, 1, 4])
        assert config.division_dimensions == [1, 4]

    @pytest.mark.parametrize("dims", [[3], [], [1, 16]])
    def test_division_dimensions_are_checked(self, dims):
        """Test that only 1, 2, 4 and 8 are accepted."""
        with pytest.raises(ConfigurationError, match="Invalid configuration"):
            ConfigFactory.from_dict({"division_dimensions": dims})


class TestConfigFactory:
    """Test ConfigFactory methods."""

    def test_create_with_minimal_params(self):
        """Test creating config with default parameters."""
        config = ConfigFactory.create()

        assert config.sampling.seed == 20260101
        assert config.sampling.samples is None
        assert config.workers == 1
        assert config.division_dimensions == [1, 2, 4, 8]

    def test_create_with_all_params(self):
        """Test creating config with all parameters."""
        config = ConfigFactory.create(
            seed=11,
            samples=100,
            grassmann_generators=4,
            workers=8,
            division_dimensions=[2, 8],
            guards=GuardConfig(max_monomials=1_000, exhaustive_tuples=500),
            include_timings=True,
        )

        assert config.sampling.seed == 11
        assert config.sampling.samples == 100
        assert config.sampling.grassmann_generators == 4
        assert config.workers == 8
        assert config.division_dimensions == [2, 8]
        assert config.guards.max_monomials == 1_000
        assert config.guards.exhaustive_tuples == 500
        assert config.include_timings is True

    def test_create_with_guard_dict(self):
        """Test creating config with guards as dictionary."""
        config = ConfigFactory.create(guards={"max_monomials": 10})

        assert config.guards.max_monomials == 10
        assert config.guards.exhaustive_tuples == 20_000

    @pytest.mark.parametrize(
        "kwargs",
        [{"samples": 0}, {"workers": 0}, {"grassmann_generators": 7}, {"seed": -1}],
    )
    def test_create_validation_error(self, kwargs):
        """Test that invalid parameters raise ConfigurationError."""
        with pytest.raises(ConfigurationError, match="Invalid configuration"):
            ConfigFactory.create(**kwargs)

    def test_from_dict(self):
        """Test creating config from dictionary."""
        config = ConfigFactory.from_dict(
            {
                "workers": 4,
                "sampling": {"seed": 11, "samples": 100},
                "guards": {"max_monomials": 1000},
            }
        )

        assert config.workers == 4
        assert config.sampling.seed == 11
        assert config.sampling.samples == 100
        assert config.sampling.grassmann_generators == 2
        assert config.guards.max_monomials == 1000

    def test_from_dict_validation_error(self):
        """Test that invalid dict raises ConfigurationError."""
        with pytest.raises(ConfigurationError, match="Invalid configuration"):
            ConfigFactory.from_dict({"sampling": {"samples": -5}})

    def test_from_environment_only(self, monkeypatch):
        """Test loading config from environment variables only."""
        monkeypatch.setenv("SUPERCOCYCLE_WORKERS", "3")
        monkeypatch.setenv("SUPERCOCYCLE_SAMPLING__SEED", "42")
        monkeypatch.setenv("SUPERCOCYCLE_GUARDS__MAX_MONOMIALS", "123")
        monkeypatch.setenv("SUPERCOCYCLE_DIVISION_DIMENSIONS", "[1, 2]")

        config = ConfigFactory.from_environment_only()

        assert config.workers == 3
        assert config.sampling.seed == 42
        assert config.guards.max_monomials == 123
        assert config.division_dimensions == [1, 2]

    def test_from_environment_only_invalid(self, monkeypatch):
        """Test that invalid env vars raise ConfigurationError."""
        monkeypatch.setenv("SUPERCOCYCLE_WORKERS", "0")

        with pytest.raises(ConfigurationError, match="Invalid configuration"):
            ConfigFactory.from_environment_only()

    def test_from_env_file(self, tmp_path):
        """Test loading config from specific .env file."""
        env_file = tmp_path / ".env"
        env_file.write_text(
            "SUPERCOCYCLE_WORKERS=2\n"
            "SUPERCOCYCLE_SAMPLING__SAMPLES=50\n"
            "SUPERCOCYCLE_INCLUDE_TIMINGS=true\n"
        )

        config = ConfigFactory.from_env_file(env_file)

        assert config.workers == 2
        assert config.sampling.samples == 50
        assert config.include_timings is True

    def test_from_env_file_not_found_required(self):
        """Test that missing required .env file raises ConfigurationError."""
        with pytest.raises(ConfigurationError, match=".env file not found"):
            ConfigFactory.from_env_file("/nonexistent/.env", required=True)

    def test_from_env_file_not_found_optional(self, monkeypatch):
        """Test that missing optional .env file falls back to env vars."""
        monkeypatch.setenv("SUPERCOCYCLE_WORKERS", "5")

        config = ConfigFactory.from_env_file("/nonexistent/.env", required=False)

        assert config.workers == 5

    def test_from_env_with_search_paths(self, tmp_path):
        """Test searching multiple paths for .env file."""
        env_dir = tmp_path / "config"
        env_dir.mkdir()
        env_file = env_dir / ".env"
        env_file.write_text("SUPERCOCYCLE_SAMPLING__SEED=99\n")

        search_paths = [
            str(tmp_path / "nonexistent" / ".env"),
            str(env_file),
        ]

        config = ConfigFactory.from_env(search_paths=search_paths)

        assert config.sampling.seed == 99

    def test_from_env_no_file_found_required(self):
        """Test from_env raises error when no file found and required=True."""
        search_paths = ["/nonexistent1/.env", "/nonexistent2/.env"]

        with pytest.raises(ConfigurationError, match="No .env file found"):
            ConfigFactory.from_env(search_paths=search_paths, required=True)

    def test_from_env_default_search_paths(self, tmp_path, monkeypatch):
        """Test from_env with default search paths."""
        monkeypatch.chdir(tmp_path)
        (tmp_path / ".env").write_text("SUPERCOCYCLE_WORKERS=6\n")

        config = ConfigFactory.from_env()

        assert config.workers == 6

    def test_environment_beats_file(self, tmp_path, monkeypatch):
        """Test that environment variables override file values."""
        env_file = tmp_path / ".env"
        env_file.write_text("SUPERCOCYCLE_WORKERS=2\n")
        monkeypatch.setenv("SUPERCOCYCLE_WORKERS", "7")

        assert ConfigFactory.from_env_file(env_file).workers == 7

    def test_merge_two_configs(self):
        """Test merging two configurations."""
        base_config = ConfigFactory.create(seed=1, workers=2)
        override_config = ConfigFactory.from_dict({"workers": 4, "include_timings": True})

        merged = ConfigFactory.merge(base_config, override_config)

        assert merged.sampling.seed == 1
        assert merged.workers == 4
        assert merged.include_timings is True

    def test_merge_with_base(self):
        """Test merging with explicit base parameter."""
        base = ConfigFactory.create(seed=1)
        override1 = ConfigFactory.from_dict({"workers": 2})
        override2 = ConfigFactory.from_dict({"workers": 3})

        merged = ConfigFactory.merge(override1, override2, base=base)

        assert merged.workers == 3
        assert merged.sampling.seed == 1

    def test_merge_no_configs_raises(self):
        """Test that merge with no configs raises ValueError."""
        with pytest.raises(ValueError, match="At least one config"):
            ConfigFactory.merge()


class TestConvenienceFunctions:
    """Test convenience functions."""

    def test_load_config_with_file(self, tmp_path):
        """Test load_config with specific file."""
        env_file = tmp_path / ".env"
        env_file.write_text("SUPERCOCYCLE_SAMPLING__GRASSMANN_GENERATORS=3\n")

        config = load_config(env_file)

        assert config.sampling.grassmann_generators == 3

    def test_load_config_without_file(self, tmp_path, monkeypatch):
        """Test load_config without file uses default search."""
        monkeypatch.chdir(tmp_path)
        (tmp_path / ".env.local").write_text("SUPERCOCYCLE_WORKERS=9\n")

        config = load_config()

        assert config.workers == 9

    def test_load_config_required(self):
        """Test load_config with required=True raises when file missing."""
        with pytest.raises(ConfigurationError):
            load_config("/nonexistent/.env", required=True)

    def test_create_config(self):
        """Test create_config convenience function."""
        config = create_config(seed=5, samples=3)

        assert config.sampling.seed == 5
        assert config.sampling.samples == 3


class TestExtraEnvVarsIgnored:
    """Test that unknown settings never break loading."""

    def test_kit_config_ignores_extra_env_vars_in_file(self, tmp_path):
        """Test that unknown keys in a .env file are ignored."""
        env_file = tmp_path / ".env"
        env_file.write_text("SUPERCOCYCLE_WORKERS=2\nSUPERCOCYCLE_UNKNOWN=1\nOTHER_TOOL=x\n")

        config = ConfigFactory.from_env_file(env_file)

        assert config.workers == 2

    def test_sampling_config_reads_its_own_prefix(self, monkeypatch):
        """Test SamplingConfig on its own with the SUPERCOCYCLE_SAMPLING_ prefix."""
        monkeypatch.setenv("SUPERCOCYCLE_SAMPLING_SAMPLES", "8")
        monkeypatch.setenv("SUPERCOCYCLE_SAMPLING_COLOR", "blue")

        assert SamplingConfig().samples == 8
