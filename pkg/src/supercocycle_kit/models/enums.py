"""Enumerations shared across the package.

- AlgebraTag: the four normed division algebras
- Parity: even/odd grading of super vector spaces
- Chirality: the two half-spinor spaces S₊ and S₋
- Flavor: spacetime dimension k+2 or k+3 built from a division algebra
- Suite, CheckStatus, OutputFormat: verification and reporting
"""

from enum import IntEnum, StrEnum


class AlgebraTag(StrEnum):
    """The normed division algebras R, C, H and O.

    Examples:
        >>> AlgebraTag.O.dimension
        8
        >>> AlgebraTag.from_dimension(4)
        <AlgebraTag.H: 'H'>
    """

    R = "R"
    C = "C"
    H = "H"
    O = "O"  # noqa: E741

    @property
    def dimension(self) -> int:
        """Real dimension k of the algebra."""
        return _DIMENSIONS[self]

    @classmethod
    def from_dimension(cls, k: int) -> "AlgebraTag":
        """Look up the tag of the division algebra of real dimension k.

        Raises:
            ValueError: If k is not 1, 2, 4 or 8
        """
        for tag, dim in _DIMENSIONS.items():
            if dim == k:
                return tag
        raise ValueError(f"no normed division algebra of dimension {k}")


_DIMENSIONS = {AlgebraTag.R: 1, AlgebraTag.C: 2, AlgebraTag.H: 4, AlgebraTag.O: 8}


class Parity(IntEnum):
    """Grading of a homogeneous element (0 even, 1 odd)."""

    EVEN = 0
    ODD = 1

    @classmethod
    def parse(cls, value: str | int) -> "Parity":
        """Parse ``"even"``/``"odd"`` or ``0``/``1``."""
        if isinstance(value, int):
            return cls(value % 2)
        lowered = value.strip().lower()
        if lowered in ("even", "0"):
            return cls.EVEN
        if lowered in ("odd", "1"):
            return cls.ODD
        raise ValueError(f"unknown parity: {value!r}")


class Chirality(StrEnum):
    """Half-spinor spaces in dimension k+2."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def opposite(self) -> "Chirality":
        """The other chirality."""
        return Chirality.MINUS if self is Chirality.PLUS else Chirality.PLUS


class Flavor(StrEnum):
    """Spacetime dimension built from a division algebra of dimension k."""

    K2 = "k+2"
    K3 = "k+3"

    def spacetime_dimension(self, k: int) -> int:
        """Dimension of the vector space V (k+2) or 𝒱 (k+3)."""
        return k + 2 if self is Flavor.K2 else k + 3


class Suite(StrEnum):
    """Verification suites runnable from the CLI."""

    DIVISION = "division"
    SPINOR = "spinor"
    COHOMOLOGY = "cohomology"
    LINFTY = "linfty"
    INTEGRATION = "integration"
    SUPER = "super"


class CheckStatus(StrEnum):
    """Outcome of a single verification check."""

    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"


class OutputFormat(StrEnum):
    """Report output formats."""

    JSON = "json"
    MARKDOWN = "md"
