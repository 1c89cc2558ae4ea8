"""(j, n−j)-unshuffles and the sign engine for graded argument lists."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations

from supercocycle_kit.cohomology.signs import chi, permutation_sign
from supercocycle_kit.exceptions import UsageError


@dataclass(frozen=True)
class Unshuffle:
    """σ ∈ S_n with σ(1) < … < σ(j) and σ(j+1) < … < σ(n).

    ``order`` lists the 0-based original positions in their new order; the
    first ``split`` of them feed the inner bracket.
    """

    order: tuple[int, ...]
    split: int

    def __post_init__(self) -> None:
        head, tail = self.order[: self.split], self.order[self.split :]
        if sorted(self.order) != list(range(len(self.order))):
            raise UsageError(f"{self.order} is not a permutation")
        if list(head) != sorted(head) or list(tail) != sorted(tail):
            raise UsageError(f"{self.order} is not a ({self.split}, n-{self.split})-unshuffle")

    @property
    def sign(self) -> int:
        """sgn(σ)."""
        return permutation_sign(self.order)

    def chi(self, grades: Sequence[int]) -> int:
        """χ(σ) for arguments of the given overall grades."""
        return chi(grades, self.order)

    def head(self) -> tuple[int, ...]:
        return self.order[: self.split]

    def tail(self) -> tuple[int, ...]:
        return self.order[self.split :]


def _blocks(j: int, n: int) -> Iterator[Unshuffle]:
    positions = range(n)
    for head in combinations(positions, j):
        chosen = set(head)
        tail = tuple(p for p in positions if p not in chosen)
        yield Unshuffle(head + tail, j)


def unshuffles(j: int, n: int) -> list[Unshuffle]:
    """All C(n, j) elements of S_(j, n−j).

    Example:
        >>> [u.order for u in unshuffles(1, 2)]
        [(0, 1), (1, 0)]

    Raises:
        UsageError: Unless 1 <= j <= n − 1
    """
    if not 1 <= j <= n - 1:
        raise UsageError(f"(j, n-j)-unshuffles need 1 <= j <= n-1, got j={j}, n={n}")
    return list(_blocks(j, n))


def inner_unshuffles(i: int, n: int) -> list[Unshuffle]:
    """Unshuffles indexing the generalized Jacobi sum, including i = n (the identity)."""
    if i == n:
        return [Unshuffle(tuple(range(n)), n)]
    return unshuffles(i, n)
