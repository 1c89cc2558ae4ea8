"""Parity-labelled bases of super vector spaces."""

from collections.abc import Iterable, Sequence

from supercocycle_kit.exceptions import AlgebraValidationError
from supercocycle_kit.models.enums import Parity


class SuperBasis:
    """Ordered labels with parities, even block first.

    Example:
        >>> basis = SuperBasis.from_parts(["t", "x"], ["s0", "s1"])
        >>> basis.index("s0"), basis.parity(2)
        (2, <Parity.ODD: 1>)
    """

    __slots__ = ("labels", "parities", "_index")

    def __init__(self, labels: Sequence[str], parities: Sequence[Parity]) -> None:
        if len(labels) != len(parities):
            raise AlgebraValidationError("every label needs exactly one parity")
        if len(set(labels)) != len(labels):
            duplicates = tuple(sorted({x for x in labels if list(labels).count(x) > 1}))
            raise AlgebraValidationError("basis labels must be unique", failing=duplicates)
        seen_odd = False
        for label, parity in zip(labels, parities, strict=True):
            if parity is Parity.ODD:
                seen_odd = True
            elif seen_odd:
                raise AlgebraValidationError(
                    "even labels must precede odd labels", failing=(label,)
                )
        self.labels: tuple[str, ...] = tuple(labels)
        self.parities: tuple[Parity, ...] = tuple(Parity(p) for p in parities)
        self._index = {label: i for i, label in enumerate(self.labels)}

    @classmethod
    def from_parts(cls, even: Iterable[str], odd: Iterable[str] = ()) -> "SuperBasis":
        """Build from an even and an odd label list."""
        even, odd = list(even), list(odd)
        return cls([*even, *odd], [Parity.EVEN] * len(even) + [Parity.ODD] * len(odd))

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperBasis):
            return NotImplemented
        return self.labels == other.labels and self.parities == other.parities

    def __hash__(self) -> int:
        return hash((self.labels, self.parities))

    def index(self, label: str) -> int:
        """Position of a label.

        Raises:
            KeyError: If the label is unknown
        """
        return self._index[label]

    def parity(self, item: int | str) -> Parity:
        """Parity of a label or index."""
        idx = self._index[item] if isinstance(item, str) else item
        return self.parities[idx]

    @property
    def even_count(self) -> int:
        return sum(1 for p in self.parities if p is Parity.EVEN)

    @property
    def odd_count(self) -> int:
        return len(self.parities) - self.even_count

    @property
    def dimensions(self) -> tuple[int, int]:
        """(even dimension, odd dimension)."""
        return self.even_count, self.odd_count

    def even_labels(self) -> list[str]:
        return [lbl for lbl, p in zip(self.labels, self.parities, strict=True) if not p]

    def odd_labels(self) -> list[str]:
        return [lbl for lbl, p in zip(self.labels, self.parities, strict=True) if p]

    def __repr__(self) -> str:
        return f"SuperBasis({self.even_count}|{self.odd_count})"
