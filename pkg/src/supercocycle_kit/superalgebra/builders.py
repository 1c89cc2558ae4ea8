"""Builders for the Lie superalgebras used throughout the package.

Basis order is fixed so that cochain coefficient files are reproducible:

- supertranslations: vector labels t, x, y0.. (then a) followed by spinor
  labels s0..;
- Poincaré superalgebras: Lorentz labels m_u_v (u before v in vector
  order), then the supertranslation labels;
- Heisenberg: p, q, z (with h first for the torus extension);
- so(n): m_a_b for 0 <= a < b < n.
"""

import logging
from fractions import Fraction
from functools import cache

from supercocycle_kit.exceptions import UsageError
from supercocycle_kit.models.enums import AlgebraTag, Chirality, Flavor
from supercocycle_kit.spacetime import (
    SpinorK2,
    SpinorK3,
    bracket_big,
    bracket_spinors,
    lorentz_generator,
    metric,
    spinor_labels,
    vector_basis,
    vector_labels,
)

from .basis import SuperBasis
from .lie import LieSuperalgebra, StructureTable

logger = logging.getLogger(__name__)


def division_tag(k: int) -> AlgebraTag:
    """Tag of the division algebra of dimension k.

    Raises:
        UsageError: If k is not 1, 2, 4 or 8
    """
    try:
        return AlgebraTag.from_dimension(k)
    except ValueError as e:
        raise UsageError(str(e), details={"k": k}) from e


def _signature_name(k: int, flavor: Flavor) -> str:
    return f"{k + 1},1" if flavor is Flavor.K2 else f"{k + 2},1"


def build_abelian(even: int, odd: int = 0) -> LieSuperalgebra:
    """Abelian superalgebra with labels e0.. and f0.."""
    basis = SuperBasis.from_parts([f"e{i}" for i in range(even)], [f"f{i}" for i in range(odd)])
    return LieSuperalgebra(f"abelian({even}|{odd})", basis, {})


def _odd_bracket_coords(tag: AlgebraTag, flavor: Flavor, i: int, j: int) -> list[Fraction]:
    if flavor is Flavor.K3:
        return bracket_big(SpinorK3.basis(tag, i), SpinorK3.basis(tag, j)).to_coords()
    return bracket_spinors(
        SpinorK2.basis(tag, Chirality.PLUS, i), SpinorK2.basis(tag, Chirality.PLUS, j)
    ).to_coords()


@cache
def build_supertranslation(k: int, flavor: Flavor = Flavor.K2) -> LieSuperalgebra:
    """Supertranslation algebra V ⊕ S₊ (k+2) or 𝒱 ⊕ 𝒮 (k+3).

    Only odd-odd brackets are nonzero; they come from the spinor-to-vector
    bracket on basis spinors.

    Example:
        >>> build_supertranslation(1).basis.dimensions
        (3, 2)

    Raises:
        UsageError: If k is not 1, 2, 4 or 8
    """
    tag = division_tag(k)
    big = flavor is Flavor.K3
    even = vector_labels(tag, extra=big)
    odd = spinor_labels(tag, big=big)
    basis = SuperBasis.from_parts(even, odd)
    offset = len(even)
    table: StructureTable = {}
    for i in range(len(odd)):
        for j in range(i, len(odd)):
            coords = _odd_bracket_coords(tag, flavor, i, j)
            entries = {n: c for n, c in enumerate(coords) if c != 0}
            if entries:
                table[(offset + i, offset + j)] = entries
                table[(offset + j, offset + i)] = dict(entries)
    name = f"T({_signature_name(k, flavor)})"
    logger.debug(f"Built {name} with {len(table)} nonzero odd brackets")
    return LieSuperalgebra(name, basis, table)


def lorentz_labels(vectors: list[str]) -> list[str]:
    """m_u_v for every pair u before v."""
    return [f"m_{u}_{v}" for n, u in enumerate(vectors) for v in vectors[n + 1 :]]


@cache
def build_poincare(k: int, flavor: Flavor = Flavor.K2) -> LieSuperalgebra:
    """Poincaré superalgebra so ⋉ T, with so acting by (ρ, σ).

    The Lorentz bracket is transported from the commutator of the vector
    operators ρ(u∧v), decomposed on the orthogonal coordinate basis.

    Raises:
        UsageError: If k is not 1, 2, 4 or 8
    """
    tag = division_tag(k)
    translations = build_supertranslation(k, flavor)
    chirality = None if flavor is Flavor.K3 else Chirality.PLUS
    vectors = vector_basis(tag, flavor)
    vec_labels = translations.basis.even_labels()
    spin_labels = translations.basis.odd_labels()
    eta = [metric(v, v) for v in vectors]
    pairs = [(u, v) for u in range(len(vectors)) for v in range(u + 1, len(vectors))]
    generators = [lorentz_generator(vectors[u], vectors[v]) for u, v in pairs]

    m_labels = lorentz_labels(vec_labels)
    basis = SuperBasis.from_parts([*m_labels, *vec_labels], spin_labels)
    n_m, n_v = len(m_labels), len(vec_labels)
    pair_index = {pair: n for n, pair in enumerate(pairs)}
    table: StructureTable = {}

    for a in range(n_m):
        for b in range(a + 1, n_m):
            commutator = generators[a].vector.commutator(generators[b].vector).entries()
            entries = {}
            for (e, f), n in pair_index.items():
                value = commutator.get(e, {}).get(f, Fraction(0))
                if value != 0:
                    entries[n] = value / eta[f]
            if entries:
                table[(a, b)] = entries
                table[(b, a)] = {n: -c for n, c in entries.items()}

    for a, generator in enumerate(generators):
        vector_rows = generator.vector.entries()
        spinor_rows = generator.spinor(chirality).entries()
        for j in range(n_v):
            image = {n_m + i: row[j] for i, row in vector_rows.items() if j in row}
            if image:
                table[(a, n_m + j)] = image
                table[(n_m + j, a)] = {n: -c for n, c in image.items()}
        for j in range(len(spin_labels)):
            image = {n_m + n_v + i: row[j] for i, row in spinor_rows.items() if j in row}
            if image:
                table[(a, n_m + n_v + j)] = image
                table[(n_m + n_v + j, a)] = {n: -c for n, c in image.items()}

    for (i, j), entries in translations.nonzero_brackets():
        table[(n_m + i, n_m + j)] = {n_m + n: c for n, c in entries.items()}

    name = f"siso({_signature_name(k, flavor)})"
    logger.debug(f"Built {name} of dimension {basis.dimensions}")
    return LieSuperalgebra(name, basis, table)


def build_heisenberg() -> LieSuperalgebra:
    """Heisenberg algebra: [p, q] = z with z central.

    Example:
        >>> h = build_heisenberg()
        >>> h.bracket_basis(h.index("p"), h.index("q"))
        {2: Fraction(1, 1)}
    """
    basis = SuperBasis.from_parts(["p", "q", "z"])
    return LieSuperalgebra.from_brackets("heisenberg", basis, {("p", "q"): {"z": 1}})


def build_heisenberg_torus() -> LieSuperalgebra:
    """Heisenberg algebra extended by h with [h, p] = p, [h, q] = −q, [h, z] = 0."""
    basis = SuperBasis.from_parts(["h", "p", "q", "z"])
    return LieSuperalgebra.from_brackets(
        "heisenberg⋊torus",
        basis,
        {("h", "p"): {"p": 1}, ("h", "q"): {"q": -1}, ("p", "q"): {"z": 1}},
    )


def _so_matrix(n: int, a: int, b: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    m[a][b], m[b][a] = 1, -1
    return m


def _matmul(x: list[list[int]], y: list[list[int]]) -> list[list[int]]:
    n = len(x)
    return [[sum(x[i][r] * y[r][j] for r in range(n)) for j in range(n)] for i in range(n)]


def build_so(n: int) -> LieSuperalgebra:
    """so(n) on the basis E_ab = e_a e_bᵀ − e_b e_aᵀ, with the trace form attached.

    Raises:
        UsageError: If n < 3
    """
    if n < 3:
        raise UsageError(f"so(n) needs n >= 3, got {n}", details={"n": n})
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    mats = [_so_matrix(n, a, b) for a, b in pairs]
    labels = [f"m_{a}_{b}" for a, b in pairs]
    table: StructureTable = {}
    for i, x in enumerate(mats):
        for j, y in enumerate(mats):
            if i == j:
                continue
            xy, yx = _matmul(x, y), _matmul(y, x)
            entries = {}
            for idx, (a, b) in enumerate(pairs):
                value = xy[a][b] - yx[a][b]
                if value:
                    entries[idx] = Fraction(value)
            if entries:
                table[(i, j)] = entries
    form: dict[tuple[int, int], Fraction] = {}
    for i, x in enumerate(mats):
        for j, y in enumerate(mats):
            product = _matmul(x, y)
            trace = sum(product[r][r] for r in range(n))
            if trace:
                form[(i, j)] = Fraction(trace)
    return LieSuperalgebra(f"so({n})", SuperBasis.from_parts(labels), table, form)
