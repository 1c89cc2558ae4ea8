"""Deciding exactness and computing cohomology dimensions.

Both reduce to exact rank computations over Q. On supertranslation algebras
d sends (p, q)-forms to (p−1, q+2)-forms, so a closed (p, q)-form can only
be the coboundary of a (p+1, q−2)-form; passing that bigrade as ``grade``
keeps the linear system small.
"""

import logging
from dataclasses import dataclass

from supercocycle_kit.algebra.linalg import is_consistent, rank, solve
from supercocycle_kit.exceptions import CochainError
from supercocycle_kit.models.cochain import ExactnessResult
from supercocycle_kit.superalgebra import LieSuperalgebra

from .coboundary import coboundary, coboundary_matrix
from .cochain import Bigrade, Cochain, cochain_to_document, count_monomials, guard_monomials

logger = logging.getLogger(__name__)


@dataclass
class ExactnessDecision:
    """Answer to "is ω = dθ?" together with its certificate.

    Attributes:
        exact: Whether a preimage exists among the searched monomials
        witness: θ with dθ = ω when exact
        rank: Rank of the coboundary matrix
        augmented_rank: Rank with ω appended; larger than ``rank`` when not exact
        unknowns: Number of candidate preimage monomials
        equations: Number of target monomials
        grade: Bigrade the preimages were restricted to
    """

    exact: bool
    witness: Cochain | None
    rank: int
    augmented_rank: int
    unknowns: int
    equations: int
    grade: Bigrade | None = None

    def to_model(self) -> ExactnessResult:
        return ExactnessResult(
            exact=self.exact,
            unknowns=self.unknowns,
            equations=self.equations,
            rank=self.rank,
            augmented_rank=self.augmented_rank,
            bigrade=self.grade,
            witness=cochain_to_document(self.witness) if self.witness is not None else None,
        )


def is_exact(
    omega: Cochain, grade: Bigrade | None = None, *, max_monomials: int = 50_000
) -> ExactnessDecision:
    """Solve dθ = ω over the rationals.

    Args:
        omega: Closed rational cochain of level p
        grade: Restrict θ to this bigrade of C^{p−1}; None searches all of it
        max_monomials: Size guard on the number of unknowns

    Returns:
        ExactnessDecision with a witness θ, or with rank < augmented_rank
        certifying that no θ exists on the searched monomials

    Raises:
        CochainError: If ω is not closed
        SizeGuardError: If the preimage space exceeds ``max_monomials``

    Example:
        >>> h = build_heisenberg()
        >>> is_exact(Cochain.dual(h, "p", "q")).exact
        True
    """
    if not coboundary(omega).is_zero():
        raise CochainError(
            f"cannot decide exactness of a non-closed level {omega.level} cochain",
            details={"algebra": omega.parent.name},
        )
    g = omega.parent
    if omega.is_zero():
        return ExactnessDecision(True, Cochain.zero(g, max(omega.level - 1, 0)), 0, 0, 0, 0, grade)
    if omega.level == 0:
        return ExactnessDecision(False, None, 0, 1, 0, 1, grade)

    system = coboundary_matrix(
        g, omega.level - 1, grade, extra_rows=sorted(omega.coeffs), max_monomials=max_monomials
    )
    rhs = {system.row_index[mono]: c for mono, c in omega.coeffs.items()}
    consistent, plain, extended = is_consistent(system.matrix, rhs)
    witness = None
    if consistent:
        solution = solve(system.matrix, rhs) or {}
        witness = Cochain(
            g, omega.level - 1, {system.columns[col]: c for col, c in solution.items()}
        )
    logger.info(
        f"Exactness on {g.name} (level {omega.level}, grade {grade}): "
        f"{'exact' if consistent else 'not exact'}, rank {plain} vs {extended}"
    )
    return ExactnessDecision(
        consistent, witness, plain, extended, len(system.columns), len(system.rows), grade
    )


def cohomology_dim(g: LieSuperalgebra, p: int, *, max_monomials: int = 50_000) -> int:
    """dim Hᵖ(g, R) = dim Cᵖ − rank d_p − rank d_{p−1}.

    Raises:
        SizeGuardError: If any of C^{p−1}, Cᵖ, C^{p+1} exceeds ``max_monomials``
    """
    if p < 0:
        raise CochainError(f"cohomology degree must be >= 0, got {p}")
    for level in (p - 1, p, p + 1):
        if level >= 0:
            guard_monomials(count_monomials(g, level), max_monomials, f"C^{level}({g.name})")
    size = count_monomials(g, p)
    outgoing = rank(coboundary_matrix(g, p, max_monomials=max_monomials).matrix)
    incoming = rank(coboundary_matrix(g, p - 1, max_monomials=max_monomials).matrix) if p else 0
    result = size - outgoing - incoming
    logger.debug(f"dim H^{p}({g.name}) = {size} - {outgoing} - {incoming} = {result}")
    return result
