"""Moving cochains between algebras: extension by zero, restriction,
interior products and infinitesimal invariance.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from supercocycle_kit.exceptions import CochainError
from supercocycle_kit.protocols import is_zero
from supercocycle_kit.superalgebra import GradedElement, LieSuperalgebra, bracket, is_ideal

from .coboundary import coboundary
from .cochain import Cochain, Monomial
from .signs import sort_with_sign

logger = logging.getLogger(__name__)

Derivation = Mapping[int, Mapping[int, Fraction]]


def transport(omega: Cochain, target: LieSuperalgebra) -> Cochain:
    """Re-express ω on another algebra by matching basis labels.

    Monomials using a label that ``target`` lacks are dropped; the others
    are re-sorted into ``target``'s canonical order with their Koszul sign.
    """
    source = omega.parent
    parities = target.basis.parities
    coeffs: dict[Monomial, Any] = {}
    for mono, c in omega.coeffs.items():
        labels = [source.labels[i] for i in mono]
        if not all(lbl in target.basis for lbl in labels):
            continue
        mapped, sign = sort_with_sign([target.index(lbl) for lbl in labels], parities)
        if sign:
            coeffs[mapped] = coeffs[mapped] + c * sign if mapped in coeffs else c * sign
    return Cochain(target, omega.level, coeffs)


def restrict_cochain(omega: Cochain, sub: LieSuperalgebra) -> Cochain:
    """Pull ω back along the inclusion of a subalgebra with shared labels.

    Raises:
        CochainError: If ``sub`` has labels unknown to ω's algebra
    """
    missing = [lbl for lbl in sub.labels if lbl not in omega.parent.basis]
    if missing:
        raise CochainError(f"{sub.name} is not a subalgebra of {omega.parent.name}: {missing}")
    return transport(omega, sub)


@dataclass
class Extension:
    """ω̃ together with the split d ω̃ = widetilde(dω) + eω.

    Attributes:
        extended: ω̃ on the ambient algebra, zero on any argument outside the ideal
        coboundary: d ω̃
        extended_coboundary: dω computed on the ideal, then extended by zero
        defect: eω = d ω̃ − widetilde(dω), the failure of equivariance
    """

    extended: Cochain
    coboundary: Cochain
    extended_coboundary: Cochain
    defect: Cochain

    @property
    def closed(self) -> bool:
        return self.coboundary.is_zero()


def extend_by_zero(omega: Cochain, ambient: LieSuperalgebra) -> Extension:
    """Extend a cochain on an ideal h to g ⋉ h by zero.

    Example:
        >>> ext = extend_by_zero(make_alpha(1), build_poincare(1))
        >>> ext.closed
        True

    Raises:
        CochainError: If ω's algebra is not an ideal of ``ambient`` (by labels)
    """
    labels = omega.parent.labels
    missing = [lbl for lbl in labels if lbl not in ambient.basis]
    if missing:
        raise CochainError(
            f"{omega.parent.name} does not sit inside {ambient.name}",
            details={"missing": missing},
        )
    if not is_ideal(ambient, labels):
        raise CochainError(f"{omega.parent.name} is not an ideal of {ambient.name}")
    extended = transport(omega, ambient)
    d_extended = coboundary(extended)
    pushed = transport(coboundary(omega), ambient)
    defect = d_extended - pushed
    logger.debug(
        f"Extended {omega.parent.name} -> {ambient.name}: defect has {len(defect.coeffs)} terms"
    )
    return Extension(extended, d_extended, pushed, defect)


def _as_element(g: LieSuperalgebra, x: GradedElement | str) -> GradedElement:
    return g.basis_element(x) if isinstance(x, str) else x


def interior_product(omega: Cochain, x: GradedElement | str) -> Cochain:
    """(i_X ω)(Y₁, …, Y_{p−1}) = ω(X, Y₁, …, Y_{p−1}) for a central even X.

    Raises:
        CochainError: If ω has level 0, or X is odd or not central
    """
    g = omega.parent
    element = _as_element(g, x)
    if omega.level == 0:
        raise CochainError("cannot contract a level 0 cochain")
    if any(g.parity(i) for i in element.coeffs):
        raise CochainError("interior products are taken with even elements")
    for i in range(g.dimension):
        if not bracket(element, g.basis_element(i)).is_zero():
            raise CochainError(
                f"{element!r} is not central", details={"fails_against": g.labels[i]}
            )
    parities = g.basis.parities
    coeffs: dict[Monomial, Any] = {}
    for mono, c in omega.coeffs.items():
        for pos, label in enumerate(mono):
            weight = element.coeffs.get(label)
            if weight is None:
                continue
            rest = mono[:pos] + mono[pos + 1 :]
            _, sign = sort_with_sign((label, *rest), parities)
            term = weight * c * sign
            coeffs[rest] = coeffs[rest] + term if rest in coeffs else term
    return Cochain(g, omega.level - 1, coeffs)


def adjoint_derivation(
    ambient: LieSuperalgebra, x: GradedElement | str, onto: LieSuperalgebra
) -> dict[int, dict[int, Fraction]]:
    """ad X restricted to a subalgebra, in the subalgebra's indices.

    Raises:
        CochainError: If ad X does not preserve ``onto``
    """
    element = _as_element(ambient, x)
    derivation: dict[int, dict[int, Fraction]] = {}
    for i, label in enumerate(onto.labels):
        image = bracket(element, ambient.basis_element(label))
        mapped = {}
        for k, c in image.coeffs.items():
            target = ambient.labels[k]
            if target not in onto.basis:
                raise CochainError(f"ad X maps {label} outside {onto.name}")
            mapped[onto.index(target)] = c
        if mapped:
            derivation[i] = mapped
    return derivation


def invariance_defect(omega: Cochain, derivation: Derivation) -> Cochain:
    """Σ_s ω(Y₁, …, D Y_s, …, Y_p) for an even derivation D.

    ``derivation[i]`` is D e_i as ``{k: coefficient}``. The result vanishes
    exactly when ω is annihilated by D.

    Raises:
        CochainError: If D does not preserve parity
    """
    g = omega.parent
    parities = g.basis.parities
    preimages: dict[int, list[int]] = {}
    for i, image in derivation.items():
        for k, c in image.items():
            if c == 0:
                continue
            if parities[k] != parities[i]:
                raise CochainError("invariance is tested against even derivations only")
            preimages.setdefault(k, []).append(i)

    targets: set[Monomial] = set()
    for mono in omega.coeffs:
        for pos, k in enumerate(mono):
            for i in preimages.get(k, []):
                target, sign = sort_with_sign((*mono[:pos], i, *mono[pos + 1 :]), parities)
                if sign:
                    targets.add(target)

    values: dict[Monomial, Any] = {}
    for target in targets:
        total: Any = Fraction(0)
        for pos, i in enumerate(target):
            for k, c in derivation.get(i, {}).items():
                value = omega.value((*target[:pos], k, *target[pos + 1 :]))
                if not is_zero(value):
                    total = total + value * c
        if not is_zero(total):
            values[target] = total
    return Cochain(g, omega.level, values)
