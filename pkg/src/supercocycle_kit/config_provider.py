"""Configuration provider and factory.

Creates :class:`KitConfig` instances from environment variables, ``.env``
files, dictionaries or explicit keyword arguments, always translating pydantic
validation failures into :class:`ConfigurationError`.
"""

from pathlib import Path
from typing import Any

from pydantic import ValidationError

from .exceptions import ConfigurationError
from .models.config import GuardConfig, KitConfig, SamplingConfig


class ConfigFactory:
    """Factory for creating KitConfig instances from various sources.

    Examples:
        >>> # Load from .env file in current directory
        >>> config = ConfigFactory.from_env()

        >>> # Load from dictionary
        >>> config = ConfigFactory.from_dict({"workers": 2, "sampling": {"seed": 1}})

        >>> # Create with explicit values (no .env loading)
        >>> config = ConfigFactory.create(seed=3, samples=10)
    """

    @staticmethod
    def from_env(
        *,
        search_paths: list[str | Path] | None = None,
        required: bool = False,
    ) -> KitConfig:
        """Load configuration from environment variables and .env files.

        The first existing file in ``search_paths`` wins. Environment variables
        always take precedence over file values.

        Args:
            search_paths: Paths to search for .env files
                (default: [".env", ".env.local", "~/.config/supercocycle/.env"])
            required: If True, raise ConfigurationError when no file is found

        Returns:
            Configured KitConfig instance

        Raises:
            ConfigurationError: If required=True and no .env file exists,
                or if configuration values are invalid
        """
        if search_paths is None:
            search_paths = [
                ".env",
                ".env.local",
                Path.home() / ".config" / "supercocycle" / ".env",
            ]

        env_file = None
        for path in search_paths:
            resolved_path = Path(path).expanduser().resolve()
            if resolved_path.exists():
                env_file = resolved_path
                break

        if required and env_file is None:
            searched = [str(Path(p).expanduser().resolve()) for p in search_paths]
            raise ConfigurationError(f"No .env file found. Searched: {', '.join(searched)}")

        try:
            if env_file:
                return KitConfig(_env_file=str(env_file))  # type: ignore[call-arg]
            return KitConfig(_env_file=None)  # type: ignore[call-arg]
        except ValidationError as e:
            raise ConfigurationError(f"Invalid configuration: {e.error_count()} errors\n{e}") from e

    @staticmethod
    def from_env_file(
        env_file: str | Path,
        *,
        required: bool = True,
    ) -> KitConfig:
        """Load configuration from a specific .env file.

        Args:
            env_file: Path to the .env file
            required: If True, raise when the file doesn't exist

        Returns:
            Configured KitConfig instance

        Raises:
            ConfigurationError: If the file is missing (when required) or invalid
        """
        resolved_path = Path(env_file).expanduser().resolve()

        if required and not resolved_path.exists():
            raise ConfigurationError(f".env file not found: {resolved_path}")

        try:
            return KitConfig(  # type: ignore[call-arg]
                _env_file=str(resolved_path) if resolved_path.exists() else None
            )
        except ValidationError as e:
            raise ConfigurationError(
                f"Invalid configuration in {resolved_path}: {e.error_count()} errors\n{e}"
            ) from e

    @staticmethod
    def from_dict(config_dict: dict[str, Any]) -> KitConfig:
        """Create configuration from a dictionary (no .env loading).

        Args:
            config_dict: Dictionary with configuration values

        Returns:
            Configured KitConfig instance

        Raises:
            ConfigurationError: If configuration values are invalid

        Example:
            >>> config = ConfigFactory.from_dict({
            ...     "workers": 4,
            ...     "sampling": {"seed": 11, "samples": 100},
            ...     "guards": {"max_monomials": 1000},
            ... })
        """
        try:
            return KitConfig(_env_file=None, **config_dict)  # type: ignore[call-arg]
        except ValidationError as e:
            raise ConfigurationError(f"Invalid configuration: {e.error_count()} errors\n{e}") from e

    @staticmethod
    def create(
        *,
        seed: int = 20260101,
        samples: int | None = None,
        grassmann_generators: int = 2,
        workers: int = 1,
        division_dimensions: list[int] | None = None,
        guards: GuardConfig | dict[str, Any] | None = None,
        include_timings: bool = False,
    ) -> KitConfig:
        """Create configuration with explicit values (no .env loading).

        Args:
            seed: Seed for all random checks
            samples: Samples for every randomized check (None keeps per-check counts)
            grassmann_generators: Generator count of the Grassmann algebra
            workers: Worker threads
            division_dimensions: Default k values
            guards: Size guards (GuardConfig instance or dict)
            include_timings: Whether reports include wall times

        Returns:
            Configured KitConfig instance

        Raises:
            ConfigurationError: If validation fails
        """
        try:
            guard_config: GuardConfig
            if guards is None:
                guard_config = GuardConfig()
            elif isinstance(guards, dict):
                guard_config = GuardConfig(**guards)
            else:
                guard_config = guards

            return KitConfig(  # type: ignore[call-arg]
                _env_file=None,
                workers=workers,
                division_dimensions=division_dimensions or [1, 2, 4, 8],
                sampling=SamplingConfig(
                    seed=seed,
                    samples=samples,
                    grassmann_generators=grassmann_generators,
                ),
                guards=guard_config,
                include_timings=include_timings,
            )
        except ValidationError as e:
            raise ConfigurationError(f"Invalid configuration: {e.error_count()} errors\n{e}") from e

    @staticmethod
    def from_environment_only() -> KitConfig:
        """Load configuration from environment variables only (no .env files).

        Returns:
            Configured KitConfig instance

        Raises:
            ConfigurationError: If validation fails
        """
        try:
            return KitConfig(_env_file=None)  # type: ignore[call-arg]
        except ValidationError as e:
            raise ConfigurationError(
                f"Invalid configuration from environment: {e.error_count()} errors\n{e}"
            ) from e

    @staticmethod
    def merge(
        *configs: KitConfig,
        base: KitConfig | None = None,
    ) -> KitConfig:
        """Merge configurations, later ones overriding explicitly-set fields.

        Args:
            *configs: Configuration instances to merge
            base: Optional base configuration (merged first)

        Returns:
            Merged KitConfig instance
        """
        if not configs and base is None:
            raise ValueError("At least one config must be provided")

        all_configs = [base] if base else []
        all_configs.extend(configs)

        merged_dict: dict[str, Any] = all_configs[0].model_dump(exclude_unset=False)
        for config in all_configs[1:]:
            merged_dict.update(config.model_dump(exclude_unset=True))

        return ConfigFactory.from_dict(merged_dict)


def load_config(
    env_file: str | Path | None = None,
    *,
    required: bool = False,
) -> KitConfig:
    """Load configuration from a file or the default search paths.

    Args:
        env_file: Optional path to .env file (searches defaults if None)
        required: If True, raise when no .env file is found

    Returns:
        Configured KitConfig instance
    """
    if env_file:
        return ConfigFactory.from_env_file(env_file, required=required)
    return ConfigFactory.from_env(required=required)


def create_config(**kwargs: Any) -> KitConfig:
    """Create configuration with explicit values.

    Args:
        **kwargs: Options accepted by :meth:`ConfigFactory.create`

    Returns:
        Configured KitConfig instance
    """
    return ConfigFactory.create(**kwargs)
