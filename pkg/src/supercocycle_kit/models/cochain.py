"""JSON documents for cochains and exactness decisions.

A cochain is stored by its canonical monomials:

    {
      "algebra": "heisenberg",
      "level": 2,
      "terms": [{"labels": ["p", "q"], "coef": "-1"}]
    }
"""

from pydantic import BaseModel, Field, field_validator

from supercocycle_kit.utils.rationals import parse_rational


class CochainTerm(BaseModel):
    """coef · (e_{l1} ∧ … ∧ e_{lp})*, labels in canonical order."""

    labels: list[str] = Field(default_factory=list)
    coef: str = Field(..., description='Rational string such as "-1/12"')

    @field_validator("coef")
    @classmethod
    def validate_coef(cls, v: str) -> str:
        """Reject anything that is not an exact rational string."""
        parse_rational(v)
        return v


class CochainDocument(BaseModel):
    """A rational cochain on a named algebra."""

    algebra: str
    level: int = Field(..., ge=0)
    terms: list[CochainTerm] = Field(default_factory=list)


class ExactnessResult(BaseModel):
    """Outcome of solving dθ = ω.

    When ``exact`` is False, ``rank`` < ``augmented_rank`` certifies that the
    linear system has no solution on the searched preimages.

    Attributes:
        exact: Whether a preimage was found
        unknowns: Number of candidate preimage monomials
        equations: Number of rows of the coboundary matrix
        rank: Rank of the coboundary matrix
        augmented_rank: Rank after appending ω as a column
        bigrade: Bigrade the preimages were restricted to, if any
        witness: θ with dθ = ω, when exact
    """

    exact: bool
    unknowns: int
    equations: int
    rank: int
    augmented_rank: int
    bigrade: tuple[int, int] | None = None
    witness: CochainDocument | None = None


class GroupTerm(BaseModel):
    """coef · Π x^e over symbolic group coordinates such as ``x1_p``."""

    powers: dict[str, int] = Field(default_factory=dict)
    coef: str

    @field_validator("coef")
    @classmethod
    def validate_coef(cls, v: str) -> str:
        parse_rational(v)
        return v

    @field_validator("powers")
    @classmethod
    def validate_powers(cls, v: dict[str, int]) -> dict[str, int]:
        if any(e < 1 for e in v.values()):
            raise ValueError("exponents must be positive")
        return v


class GroupCochainDocument(BaseModel):
    """A polynomial group cochain in exponential coordinates.

    Argument i (1-based) of the cochain has coordinates ``x{i}_{label}``.
    """

    algebra: str
    level: int = Field(..., ge=0)
    terms: list[GroupTerm] = Field(default_factory=list)
