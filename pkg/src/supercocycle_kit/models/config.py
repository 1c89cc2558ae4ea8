"""Configuration models for supercocycle-kit.

Settings are pydantic-settings models so every knob can come from the
environment (``SUPERCOCYCLE_`` prefix), a ``.env`` file, or explicit
arguments. Nothing here touches the algebra: the config only decides seeds,
sample counts and size guards.
"""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class SamplingConfig(BaseSettings):
    """Seeded sampling used by every randomized check.

    Two runs with the same sampling config produce byte-identical reports.
    """

    model_config = SettingsConfigDict(
        env_prefix="SUPERCOCYCLE_SAMPLING_",
        extra="ignore",
    )

    seed: int = Field(
        default=20260101,
        ge=0,
        description="Seed for every random rational, spinor and A-point",
    )

    samples: int | None = Field(
        default=None,
        ge=1,
        le=10_000,
        description="Samples for every randomized check; unset means each check uses its own count",
    )

    grassmann_generators: int = Field(
        default=2,
        ge=0,
        le=6,
        description="Number of generators n of the Grassmann algebra A = ΛRⁿ",
    )

    max_numerator: int = Field(
        default=5,
        ge=1,
        le=1_000,
        description="Random rationals are p/q with |p| <= max_numerator",
    )

    max_denominator: int = Field(
        default=3,
        ge=1,
        le=1_000,
        description="Random rationals are p/q with 1 <= q <= max_denominator",
    )


class GuardConfig(BaseSettings):
    """Size guards for exact linear algebra and exhaustive scans."""

    model_config = SettingsConfigDict(
        env_prefix="SUPERCOCYCLE_GUARD_",
        extra="ignore",
    )

    max_monomials: int = Field(
        default=50_000,
        ge=1,
        description="Largest cochain space (in canonical monomials) a rank computation may touch",
    )

    exhaustive_tuples: int = Field(
        default=20_000,
        ge=1,
        description="Basis-tuple budget below which Jacobi and L∞ checks scan exhaustively",
    )


class KitConfig(BaseSettings):
    """Main configuration for the verification engine and CLI.

    Example:
        ```python
        # From environment variables
        config = KitConfig()

        # From arguments
        config = KitConfig(workers=4, sampling={"seed": 7, "samples": 50})
        ```
    """

    model_config = SettingsConfigDict(
        env_prefix="SUPERCOCYCLE_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        case_sensitive=False,
        extra="ignore",
    )

    workers: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Worker threads used to run independent checks",
    )

    division_dimensions: list[int] = Field(
        default_factory=lambda: [1, 2, 4, 8],
        description="Division algebra dimensions k used when no --k is given",
    )

    sampling: SamplingConfig = Field(
        default_factory=SamplingConfig,
        description="Seeded sampling configuration",
    )

    guards: GuardConfig = Field(
        default_factory=GuardConfig,
        description="Size guards",
    )

    include_timings: bool = Field(
        default=False,
        description="Include wall times in reports (breaks byte-identical output)",
    )

    @field_validator("division_dimensions")
    @classmethod
    def validate_division_dimensions(cls, v: list[int]) -> list[int]:
        """Only the four normed division algebras exist.

        Args:
            v: Requested dimensions

        Returns:
            Sorted, de-duplicated dimensions

        Raises:
            ValueError: If a dimension is not 1, 2, 4 or 8
        """
        bad = [k for k in v if k not in (1, 2, 4, 8)]
        if bad:
            raise ValueError(f"division algebra dimension must be 1, 2, 4 or 8, got {bad}")
        if not v:
            raise ValueError("at least one division algebra dimension is required")
        return sorted(set(v))
