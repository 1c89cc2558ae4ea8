"""Report models for the generalized Jacobi identity checker."""

from pydantic import BaseModel, Field


class LInftyFailure(BaseModel):
    """A basis tuple at which the generalized Jacobi sum is nonzero.

    Attributes:
        arity: Number of arguments of the failing identity
        labels: Arguments, as basis labels
        contributions: Nonzero (i, j) terms keyed ``"i,j"``, each rendered as text
        unexpected: Keys of nonzero terms that slim data can never produce
    """

    arity: int
    labels: list[str]
    contributions: dict[str, str] = Field(default_factory=dict)
    unexpected: list[str] = Field(default_factory=list)


class LInftyReport(BaseModel):
    """Outcome of checking the L∞ identities of slim data up to some arity.

    Attributes:
        algebra: Name of the degree-0 algebra
        n: The data is a Lie n-superalgebra
        arities: Arities that were checked
        tuples_checked: Basis tuples evaluated, over all arities
        sampled: True when some arity was sampled instead of scanned
        nonzero_terms: For each ``"arity:i,j"``, the number of tuples at
            which that term alone was nonzero
        failures: Tuples where the full sum was nonzero or a term outside
            the slim split (2,2), (2,n+1), (n+1,2) was nonzero
    """

    algebra: str
    n: int
    arities: list[int] = Field(default_factory=list)
    tuples_checked: int = 0
    sampled: bool = False
    nonzero_terms: dict[str, int] = Field(default_factory=dict)
    failures: list[LInftyFailure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def failing_arities(self) -> list[int]:
        return sorted({f.arity for f in self.failures})
