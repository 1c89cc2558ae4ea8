"""The Chevalley–Eilenberg differential with trivial coefficients.

For homogeneous X₁ … X_{p+1},

    dω(X₁, …, X_{p+1}) = Σ_{i<j} (−1)^{i+j} (−1)^{|X_i||X_j|} ε_i ε_j
                          · ω([X_i, X_j], X₁, …, X̂_i, …, X̂_j, …)

where ε_m = (−1)^{|X_m|(|X₁| + … + |X_{m−1}|)} is the Koszul sign of moving
X_m to the front. On the Heisenberg algebra this gives d(z*) = −p*∧q*.

dω is computed only on monomials it can reach: from each monomial of ω,
replace one argument e_k by a pair (e_i, e_j) with c_ij^k ≠ 0.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from sympy.polys.matrices import DomainMatrix

from supercocycle_kit.algebra.linalg import sparse_matrix
from supercocycle_kit.protocols import is_zero
from supercocycle_kit.superalgebra import LieSuperalgebra

from .cochain import Bigrade, Cochain, Monomial, count_monomials, guard_monomials, monomials
from .signs import sort_with_sign

logger = logging.getLogger(__name__)


def coboundary_value(omega: Cochain, args: Sequence[int]) -> Any:
    """dω on a tuple of basis indices."""
    g = omega.parent
    parities = g.basis.parities
    before = [0]
    for i in args:
        before.append(before[-1] + parities[i])
    total: Any = Fraction(0)
    for a in range(len(args)):
        pa = parities[args[a]]
        for b in range(a + 1, len(args)):
            entries = g.bracket_basis(args[a], args[b])
            if not entries:
                continue
            pb = parities[args[b]]
            exponent = a + b + pa * pb + pa * before[a] + pb * before[b]
            sign = -1 if exponent % 2 else 1
            rest = (*args[:a], *args[a + 1 : b], *args[b + 1 :])
            for k, c in entries.items():
                value = omega.value((k, *rest))
                if not is_zero(value):
                    total = total + value * (sign * c)
    return total


def _reachable(omega: Cochain) -> set[Monomial]:
    g = omega.parent
    parities = g.basis.parities
    found: set[Monomial] = set()
    for mono in omega.coeffs:
        for pos, k in enumerate(mono):
            if pos and mono[pos - 1] == k:
                continue
            rest = mono[:pos] + mono[pos + 1 :]
            for i, j, _ in g.sources(k):
                target, sign = sort_with_sign((*rest, i, j), parities)
                if sign:
                    found.add(target)
    return found


def coboundary(omega: Cochain) -> Cochain:
    """dω, a cochain of level p + 1.

    Example:
        >>> h = build_heisenberg()
        >>> coboundary(Cochain.dual(h, "z")) == -Cochain.dual(h, "p", "q")
        True
    """
    values = {}
    for target in _reachable(omega):
        value = coboundary_value(omega, target)
        if not is_zero(value):
            values[target] = value
    return Cochain(omega.parent, omega.level + 1, values)


def is_closed(omega: Cochain) -> bool:
    return coboundary(omega).is_zero()


@dataclass
class CoboundaryMatrix:
    """Sparse matrix of d: C^p → C^{p+1} on a set of source monomials.

    Attributes:
        matrix: Exact QQ matrix, one column per source monomial
        columns: Source monomials in column order
        rows: Target monomials in row order
    """

    matrix: DomainMatrix
    columns: list[Monomial]
    rows: list[Monomial]
    row_index: dict[Monomial, int] = field(default_factory=dict)


def coboundary_matrix(
    g: LieSuperalgebra,
    p: int,
    grade: Bigrade | None = None,
    *,
    extra_rows: Sequence[Monomial] = (),
    max_monomials: int = 50_000,
) -> CoboundaryMatrix:
    """Matrix of d on level-p cochains (optionally one bigrade of them).

    Rows are the level-(p+1) monomials hit by some column, followed by
    ``extra_rows`` not already present.

    Raises:
        SizeGuardError: If the source space exceeds ``max_monomials``
    """
    guard_monomials(count_monomials(g, p, grade), max_monomials, f"d on C^{p}({g.name})")
    columns = list(monomials(g, p, grade))
    row_index: dict[Monomial, int] = {}
    images: dict[int, dict[int, Fraction]] = {}
    for col, mono in enumerate(columns):
        image = coboundary(Cochain(g, p, {mono: 1}))
        for target, value in image.coeffs.items():
            row = row_index.setdefault(target, len(row_index))
            images.setdefault(row, {})[col] = value
    for target in extra_rows:
        row_index.setdefault(target, len(row_index))
    rows = sorted(row_index, key=row_index.__getitem__)
    matrix = sparse_matrix(images, (len(rows), len(columns)))
    logger.debug(f"d on C^{p}({g.name}) restricted to {grade}: {len(rows)}x{len(columns)}")
    return CoboundaryMatrix(matrix, columns, rows, row_index)
