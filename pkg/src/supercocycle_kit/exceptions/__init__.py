"""Exception classes for supercocycle-kit."""

from .errors import (
    AlgebraValidationError,
    ChiralityError,
    CochainError,
    ConfigurationError,
    NilpotencyError,
    ParentMismatchError,
    SerializationError,
    ShapeError,
    SizeGuardError,
    SupercocycleError,
    TagMismatchError,
    UsageError,
    VerificationError,
)

__all__ = [
    "SupercocycleError",
    "ConfigurationError",
    "UsageError",
    "TagMismatchError",
    "ChiralityError",
    "ShapeError",
    "ParentMismatchError",
    "AlgebraValidationError",
    "NilpotencyError",
    "CochainError",
    "SizeGuardError",
    "VerificationError",
    "SerializationError",
]
