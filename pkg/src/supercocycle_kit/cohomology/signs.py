"""Koszul signs for graded antisymmetric multilinear maps.

One sign engine serves cochain evaluation, the coboundary and the L∞
identity checker. For homogeneous x₁..x_n and a permutation σ,

    x_{σ(1)} ⋯ x_{σ(n)} = ε(σ) x₁ ⋯ x_n

in the free graded-commutative algebra, and χ(σ) = sgn(σ)·ε(σ). A graded
antisymmetric map satisfies ω(x_{σ(1)}, …) = χ(σ)·ω(x₁, …).
"""

from collections.abc import Sequence


def koszul_sign(parities: Sequence[int], order: Sequence[int]) -> int:
    """ε(σ) for the reordering ``order`` of items with the given parities.

    ``order[n]`` is the original position of the item placed at position n.
    Each inversion of two odd items contributes −1.
    """
    sign = 1
    n = len(order)
    for a in range(n):
        pa = parities[order[a]]
        if not pa:
            continue
        for b in range(a + 1, n):
            if order[a] > order[b] and parities[order[b]]:
                sign = -sign
    return sign


def permutation_sign(order: Sequence[int]) -> int:
    """sgn(σ) by counting inversions."""
    sign = 1
    n = len(order)
    for a in range(n):
        for b in range(a + 1, n):
            if order[a] > order[b]:
                sign = -sign
    return sign


def chi(parities: Sequence[int], order: Sequence[int]) -> int:
    """χ(σ) = sgn(σ)·ε(σ)."""
    return permutation_sign(order) * koszul_sign(parities, order)


def sort_with_sign(indices: Sequence[int], parities: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort basis indices into canonical order and return the χ sign.

    ``parities`` is indexed by basis index. The sign is 0 when an even index
    repeats, since a graded antisymmetric map vanishes there.

    Example:
        >>> sort_with_sign((2, 0), [0, 0, 0])
        ((0, 2), -1)
        >>> sort_with_sign((3, 3), [0, 0, 0, 1])
        ((3, 3), 1)
    """
    items = list(indices)
    sign = 1
    # insertion sort, one adjacent transposition at a time
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            left, right = items[b - 1], items[b]
            if not (parities[left] and parities[right]):
                sign = -sign
            items[b - 1], items[b] = right, left
            b -= 1
    for a in range(1, len(items)):
        if items[a] == items[a - 1] and not parities[items[a]]:
            return tuple(items), 0
    return tuple(items), sign


def parity_sum(parities: Sequence[int], indices: Sequence[int]) -> int:
    """Σ |x_i| mod 2."""
    return sum(parities[i] for i in indices) % 2
