"""Models for Lie superalgebra configuration files and validation results.

An :class:`AlgebraConfig` is the JSON schema accepted by the ``algebra``,
``cohomology`` and ``integrate`` commands:

    {
      "name": "heisenberg",
      "basis": [{"label": "p", "parity": "even"}, ...],
      "brackets": [{"x": "p", "y": "q", "result": [{"coef": "1", "label": "z"}]}]
    }

Only one of [x, y] and [y, x] needs to be given; the other follows from
graded antisymmetry.
"""

from typing import Literal

from pydantic import BaseModel, Field, field_validator

from supercocycle_kit.utils.rationals import parse_rational


class BasisEntry(BaseModel):
    """One basis label and its parity."""

    label: str = Field(..., min_length=1, description="Basis label")
    parity: Literal["even", "odd"] = Field(..., description="Parity of the label")


class BracketTerm(BaseModel):
    """coef · label inside a bracket result."""

    coef: str = Field(..., description='Rational string such as "1/2"')
    label: str = Field(..., description="Basis label")

    @field_validator("coef")
    @classmethod
    def validate_coef(cls, v: str) -> str:
        """Reject anything that is not an exact rational string."""
        parse_rational(v)
        return v


class BracketEntry(BaseModel):
    """[x, y] = Σ coef · label."""

    x: str
    y: str
    result: list[BracketTerm] = Field(default_factory=list)


class AlgebraConfig(BaseModel):
    """A Lie superalgebra as JSON: labels, parities and nonzero brackets."""

    name: str = Field(default="custom", description="Human-readable name")
    basis: list[BasisEntry] = Field(..., description="Even labels first, then odd")
    brackets: list[BracketEntry] = Field(default_factory=list)


class ValidationFailure(BaseModel):
    """One violated axiom."""

    axiom: Literal["antisymmetry", "parity", "jacobi"]
    labels: list[str] = Field(..., description="Basis labels where the axiom fails")
    detail: str = Field(default="", description="Offending value, as text")


class ValidationReport(BaseModel):
    """Result of checking the Lie superalgebra axioms.

    Attributes:
        algebra: Name of the checked algebra
        triples_checked: Number of Jacobi triples evaluated
        sampled: True when Jacobi triples were sampled instead of scanned
        failures: Violations found (empty when valid)
    """

    algebra: str
    triples_checked: int = 0
    sampled: bool = False
    failures: list[ValidationFailure] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        """True when no axiom failed."""
        return not self.failures
