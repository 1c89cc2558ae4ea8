"""Exception hierarchy for supercocycle-kit.

Every error raised by the package derives from :class:`SupercocycleError`, so
callers can catch the whole family at once. The CLI maps the hierarchy onto
exit codes: usage and configuration problems exit with 2, failed
verifications with 1.
"""

from typing import Any


class SupercocycleError(Exception):
    """Base exception for all supercocycle-kit errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        """Initialize the exception.

        Args:
            message: Human-readable error message
            details: Optional dictionary with additional error context
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        """Return string representation of the error."""
        if self.details:
            return f"{self.message} (details: {self.details})"
        return self.message


class ConfigurationError(SupercocycleError):
    """Raised when settings, CLI flags or configuration files are invalid.

    This includes:
    - Out-of-range sampling or guard values
    - Malformed algebra configuration files
    - Unreadable .env files
    """

    pass


# Caller errors


class UsageError(SupercocycleError):
    """Raised when an operation is called with arguments outside its domain."""

    pass


class TagMismatchError(UsageError):
    """Raised when division-algebra elements with different tags are combined."""

    pass


class ChiralityError(UsageError):
    """Raised when a spinor of the wrong chirality is passed to an operation."""

    pass


class ShapeError(UsageError):
    """Raised when matrix shapes do not compose."""

    pass


class ParentMismatchError(UsageError):
    """Raised when elements, cochains or A-points live over different parents."""

    pass


# Structural errors


class AlgebraValidationError(SupercocycleError):
    """Raised when structure constants violate a Lie superalgebra axiom.

    The offending basis triple (or pair) is stored in ``failing``.
    """

    def __init__(
        self,
        message: str,
        failing: tuple[str, ...] = (),
        details: dict[str, Any] | None = None,
    ) -> None:
        """Initialize validation error.

        Args:
            message: Human-readable error message
            failing: Labels of the basis elements where the axiom fails
            details: Optional dictionary with additional error context
        """
        super().__init__(message, details)
        self.failing = failing


class NilpotencyError(SupercocycleError):
    """Raised when an operation needs a 2-step nilpotent Lie superalgebra."""

    pass


class CochainError(SupercocycleError):
    """Raised for cochains of the wrong level, parity or support.

    This can happen when:
    - A cochain of level p is integrated as a level q cochain
    - An odd cochain is used where an even one is required
    - A non-closed cochain is tested for exactness
    - An extension by zero is requested along a non-ideal
    """

    pass


class SizeGuardError(SupercocycleError):
    """Raised when a computation would exceed the configured monomial guard."""

    def __init__(
        self,
        message: str,
        limit: int,
        requested: int,
        details: dict[str, Any] | None = None,
    ) -> None:
        """Initialize size guard error.

        Args:
            message: Human-readable error message
            limit: Configured maximum number of monomials
            requested: Number of monomials the computation needs
            details: Optional dictionary with additional error context
        """
        super().__init__(message, details)
        self.limit = limit
        self.requested = requested


class VerificationError(SupercocycleError):
    """Raised when an identity that should hold exactly does not.

    ``counterexample`` holds a JSON-friendly description of the inputs.
    """

    def __init__(
        self,
        message: str,
        counterexample: dict[str, Any] | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        """Initialize verification error.

        Args:
            message: Human-readable error message
            counterexample: Inputs at which the identity failed
            details: Optional dictionary with additional error context
        """
        super().__init__(message, details)
        self.counterexample = counterexample or {}


class SerializationError(SupercocycleError):
    """Raised when a report, cochain or rational string cannot be read or written."""

    pass
