"""The Heisenberg group and its Lie 2-group from the integrated cocycle γ."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from sympy.polys.matrices import DomainMatrix

from supercocycle_kit.algebra.linalg import dense_matrix, entry
from supercocycle_kit.cohomology import make_gamma
from supercocycle_kit.exceptions import UsageError, VerificationError
from supercocycle_kit.superalgebra import GradedElement, LieSuperalgebra
from supercocycle_kit.utils.sampling import RationalSampler

from .bch import GroupElement
from .group_cochain import (
    GroupArgument,
    GroupCochain,
    group_coboundary_value,
    integrate_cochain,
    random_group_element,
    verify_group_cocycle,
)

logger = logging.getLogger(__name__)

_LABELS = ("p", "q", "z")


def _check_heisenberg(g: LieSuperalgebra) -> None:
    if tuple(g.labels) != _LABELS:
        raise UsageError(f"expected a Heisenberg algebra on p, q, z, got {g.labels}")


def heisenberg_matrix(x: GroupArgument) -> DomainMatrix:
    """exp(a p + c q + b z) as the unipotent matrix [[1, a, b + ac/2], [0, 1, c], [0, 0, 1]].

    Raises:
        UsageError: If the element is not in a Heisenberg algebra on p, q, z
    """
    log = x.log if isinstance(x, GroupElement) else x
    _check_heisenberg(log.parent)
    a, c, b = (Fraction(log.coefficient(lbl)) for lbl in _LABELS)
    return dense_matrix([[1, a, b + a * c / 2], [0, 1, c], [0, 0, 1]])


def from_heisenberg_matrix(g: LieSuperalgebra, matrix: DomainMatrix) -> GroupElement:
    """Inverse of :func:`heisenberg_matrix`."""
    _check_heisenberg(g)
    a, c = entry(matrix, 0, 1), entry(matrix, 1, 2)
    b = entry(matrix, 0, 2) - a * c / 2
    return GroupElement(g.element({"p": a, "q": c, "z": b}))


@dataclass
class Slim2Group:
    """Lie 2-group with one object per group element and associator ∫γ.

    Attributes:
        algebra: The Heisenberg Lie algebra
        associator: The integrated 3-cocycle a(g₁, g₂, g₃)
    """

    algebra: LieSuperalgebra
    associator: GroupCochain

    def associator_at(self, g1: GroupArgument, g2: GroupArgument, g3: GroupArgument) -> Any:
        return self.associator.evaluate(g1, g2, g3)

    def pentagon_defect(self, *args: GradedElement) -> Any:
        """a(g₂,g₃,g₄) − a(g₁g₂,g₃,g₄) + a(g₁,g₂g₃,g₄) − a(g₁,g₂,g₃g₄) + a(g₁,g₂,g₃)."""
        if len(args) != 4:
            raise UsageError(f"the pentagon needs four group elements, got {len(args)}")
        return group_coboundary_value(self.associator.evaluate, args)

    def verify(self, samples: int, sampler: RationalSampler) -> int:
        """Check the pentagon identity at random quadruples.

        Raises:
            VerificationError: If a quadruple has a nonzero defect
        """
        checked = verify_group_cocycle(
            self.associator.evaluate,
            3,
            lambda: random_group_element(self.algebra, sampler),
            samples,
        )
        logger.info(f"Pentagon identity holds at {checked} sampled quadruples")
        return checked


def heisenberg_2group(samples: int = 100, seed: int = 0) -> Slim2Group:
    """The Heisenberg Lie 2-group: objects exp(h), associator ∫(p*∧q*∧z*).

    The associator is checked before it is returned: it must vanish when
    any argument is the identity, and the pentagon identity must hold at
    ``samples`` seeded quadruples.

    Raises:
        VerificationError: If normalization fails or a quadruple has a nonzero
            pentagon defect (the quadruple is the counterexample)
    """
    gamma = make_gamma()
    group = Slim2Group(gamma.parent, integrate_cochain(gamma))
    if not group.associator.is_normalized():
        raise VerificationError(
            "the Heisenberg associator does not vanish at the identity",
            counterexample={"associator": str(group.associator.poly)},
        )
    group.verify(samples, RationalSampler(seed))
    return group
