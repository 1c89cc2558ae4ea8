"""The named cocycles: α, β on supertranslations, γ on Heisenberg, j on so(n).

- α(ψ, φ, A) = g([ψ, φ], A) on T(k+1,1), a (1, 2)-form.
- β(Ψ, Φ, 𝒜, ℬ) = ⟨Ψ, (𝒜ℬ − ℬ𝒜)Φ⟩ on T(k+2,1), a (2, 2)-form.
- γ = p*∧q*∧z* on the Heisenberg algebra.
- j(X, Y, Z) = ⟨X, [Y, Z]⟩ on so(n) with the trace form.

Moving the even arguments of α and β to the front passes each of them
across an even number of odd arguments, so the canonical coefficients are
α(e_v, s_i, s_j) and β(e_a, e_b, s_i, s_j) without extra signs.
"""

import logging
from fractions import Fraction

from supercocycle_kit.algebra.linalg import sparse_matrix, to_rows
from supercocycle_kit.exceptions import UsageError
from supercocycle_kit.models.enums import Flavor
from supercocycle_kit.spacetime import (
    SpinorK3,
    gamma_operator,
    metric,
    pairing_big,
    vector_basis,
)
from supercocycle_kit.superalgebra import (
    build_heisenberg,
    build_so,
    build_supertranslation,
    division_tag,
)

from .cochain import Cochain, Monomial

logger = logging.getLogger(__name__)


def make_alpha(k: int) -> Cochain:
    """α(ψ, φ, A) = g([ψ, φ], A) on the supertranslation algebra T(k+1,1).

    Raises:
        UsageError: If k is not 1, 2, 4 or 8
    """
    tag = division_tag(k)
    g = build_supertranslation(k, Flavor.K2)
    eta = [metric(v, v) for v in vector_basis(tag, Flavor.K2)]
    coeffs: dict[Monomial, Fraction] = {}
    for (i, j), entries in g.nonzero_brackets():
        if i > j:
            continue
        for v, c in entries.items():
            coeffs[(v, i, j)] = eta[v] * c
    logger.debug(f"alpha on {g.name}: {len(coeffs)} terms")
    return Cochain(g, 3, coeffs)


def _pairing_matrix(k: int) -> dict[int, dict[int, Fraction]]:
    tag = division_tag(k)
    n = 4 * k
    spinors = [SpinorK3.basis(tag, i) for i in range(n)]
    rows: dict[int, dict[int, Fraction]] = {}
    for i, psi in enumerate(spinors):
        for j, phi in enumerate(spinors):
            value = pairing_big(psi, phi)
            if value != 0:
                rows.setdefault(i, {})[j] = value
    return rows


def make_beta(k: int) -> Cochain:
    """β(Ψ, Φ, 𝒜, ℬ) = ⟨Ψ, (𝒜ℬ − ℬ𝒜)Φ⟩ on the supertranslation algebra T(k+2,1).

    Each commutator of Clifford operators is a real matrix M_ab, and the
    coefficients on (e_a, e_b, s_i, s_j) are the entries of Ω·M_ab, with Ω
    the matrix of the skew pairing on 𝒮.

    Raises:
        UsageError: If k is not 1, 2, 4 or 8
        CochainError: If some Ω·M_ab fails to be symmetric
    """
    tag = division_tag(k)
    g = build_supertranslation(k, Flavor.K3)
    vectors = vector_basis(tag, Flavor.K3)
    n = 4 * k
    offset = len(vectors)
    omega = sparse_matrix(_pairing_matrix(k), (n, n))
    gammas = [gamma_operator(v) for v in vectors]
    values: dict[tuple[int, ...], Fraction] = {}
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            commutator = gammas[a].commutator(gammas[b])
            for i, row in to_rows(omega * commutator.matrix).items():
                for j, value in row.items():
                    values[(a, b, offset + i, offset + j)] = value
    beta = Cochain.from_values(g, 4, values)
    logger.debug(f"beta on {g.name}: {len(beta.coeffs)} terms")
    return beta


def make_gamma() -> Cochain:
    """γ = p*∧q*∧z* on the Heisenberg algebra."""
    return Cochain.dual(build_heisenberg(), "p", "q", "z")


def make_j(n: int) -> Cochain:
    """j(X, Y, Z) = ⟨X, [Y, Z]⟩ on so(n), with ⟨−,−⟩ the trace form.

    Raises:
        UsageError: If n < 3
    """
    g = build_so(n)
    form = g.invariant_form
    if form is None:
        raise UsageError(f"{g.name} carries no invariant form")
    coeffs: dict[Monomial, Fraction] = {}
    size = g.dimension
    for a in range(size):
        for b in range(a + 1, size):
            for c in range(b + 1, size):
                bc = g.bracket_basis(b, c)
                value = sum((x * form.get((a, m), Fraction(0)) for m, x in bc.items()), Fraction(0))
                if value:
                    coeffs[(a, b, c)] = value
    return Cochain(g, 3, coeffs)
