"""Exact linear algebra over Q on top of sympy's ``DomainMatrix``.

The rest of the package works with ``Fraction``s and sparse row dictionaries;
these helpers convert to and from the ``QQ`` domain and expose the three
questions we actually ask: rank, consistency of a linear system, and one
solution when it is consistent.
"""

from collections.abc import Mapping, Sequence
from fractions import Fraction
from typing import Any

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

SparseRows = Mapping[int, Mapping[int, Fraction]]


def to_qq(value: Fraction | int) -> Any:
    """Convert a Fraction or int to an element of QQ."""
    frac = Fraction(value)
    return QQ(frac.numerator, frac.denominator)


def from_qq(value: Any) -> Fraction:
    """Convert an element of QQ back to a Fraction."""
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def sparse_matrix(rows: SparseRows, shape: tuple[int, int]) -> DomainMatrix:
    """Build a sparse QQ matrix from ``{row: {col: value}}``; zeros are dropped."""
    data: dict[int, dict[int, Any]] = {}
    for i, row in rows.items():
        entries = {j: to_qq(v) for j, v in row.items() if v != 0}
        if entries:
            data[i] = entries
    return DomainMatrix(data, shape, QQ)


def dense_matrix(rows: Sequence[Sequence[Fraction | int]]) -> DomainMatrix:
    """Build a QQ matrix from a list of rows."""
    height = len(rows)
    width = len(rows[0]) if rows else 0
    return sparse_matrix(
        {i: dict(enumerate(row)) for i, row in enumerate(rows)}, (height, width)
    )


def to_rows(matrix: DomainMatrix) -> dict[int, dict[int, Fraction]]:
    """Read the nonzero entries of a matrix as Fractions."""
    sdm = matrix.to_sparse().rep
    return {i: {j: from_qq(v) for j, v in row.items()} for i, row in sdm.items()}


def entry(matrix: DomainMatrix, i: int, j: int) -> Fraction:
    """Single entry as a Fraction."""
    return to_rows(matrix).get(i, {}).get(j, Fraction(0))


def rank(matrix: DomainMatrix) -> int:
    """Exact rank over Q."""
    if 0 in matrix.shape:
        return 0
    return int(matrix.rank())


def augment(matrix: DomainMatrix, column: Mapping[int, Fraction]) -> DomainMatrix:
    """Append a column to ``matrix``."""
    height, width = matrix.shape
    rows = to_rows(matrix)
    for i, value in column.items():
        if value != 0:
            rows.setdefault(i, {})[width] = value
    return sparse_matrix(rows, (height, width + 1))


def solve(matrix: DomainMatrix, rhs: Mapping[int, Fraction]) -> dict[int, Fraction] | None:
    """One solution x of ``matrix · x = rhs``, or None when inconsistent.

    Free variables are set to zero. The solution is returned sparsely.
    """
    height, width = matrix.shape
    reduced, pivots = augment(matrix, rhs).rref()
    if width in pivots:
        return None
    rows = to_rows(reduced)
    solution: dict[int, Fraction] = {}
    for r, col in enumerate(pivots):
        value = rows.get(r, {}).get(width, Fraction(0))
        if value != 0:
            solution[col] = value
    return solution


def is_consistent(matrix: DomainMatrix, rhs: Mapping[int, Fraction]) -> tuple[bool, int, int]:
    """Decide solvability by comparing rank(A) with rank([A | b]).

    Returns:
        (consistent, rank of A, rank of the augmented matrix)
    """
    plain = rank(matrix)
    extended = rank(augment(matrix, rhs))
    return plain == extended, plain, extended


def apply(matrix: DomainMatrix, vector: Sequence[Fraction]) -> list[Fraction]:
    """Multiply a matrix by a column of Fractions."""
    height, width = matrix.shape
    column = sparse_matrix({i: {0: v} for i, v in enumerate(vector)}, (width, 1))
    product = to_rows(matrix * column)
    return [product.get(i, {}).get(0, Fraction(0)) for i in range(height)]
