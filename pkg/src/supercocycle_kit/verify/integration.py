"""Integration checks: universal coefficients, the Heisenberg 2-group and van Est."""

from fractions import Fraction
from functools import partial

from supercocycle_kit.cohomology import Cochain, coboundary, monomials, random_cochain
from supercocycle_kit.exceptions import VerificationError
from supercocycle_kit.integration import (
    bch2,
    differentiate_cochain,
    free_two_step,
    group_coboundary,
    heisenberg_2group,
    heisenberg_matrix,
    integrate_at,
    integrate_cochain,
    labelled_coefficients,
    random_group_element,
    symbolic_point,
    to_homogeneous,
    word_label,
)
from supercocycle_kit.models.enums import Suite
from supercocycle_kit.superalgebra import LieSuperalgebra, build_heisenberg

from .runner import Check, SuiteOptions, Witness, expect_equal

P2_COEFFICIENTS = {
    ("X1", "X2"): Fraction(1, 2),
    ("X1", "[X1,X2]"): Fraction(1, 12),
    ("X2", "[X1,X2]"): Fraction(-1, 12),
}


def _two_cochains(options: SuiteOptions, check_id: str) -> Witness:
    expect_equal(labelled_coefficients(2), P2_COEFFICIENTS, "wrong p=2 integration coefficients")
    return {" ".join(k): v for k, v in P2_COEFFICIENTS.items()}


def _three_cochains(options: SuiteOptions, check_id: str) -> Witness:
    coefficients = labelled_coefficients(3)
    top = coefficients.get((word_label(1), word_label(2), word_label(3)))
    expect_equal(top, Fraction(1, 6), "coefficient of ω(X, Y, Z) is not 1/6")
    expect_equal(len(coefficients), 17, "the evaluated 3-cochain does not have 17 terms")
    return {"nonzero_terms": len(coefficients), "top": top}


def _heisenberg_values(options: SuiteOptions, check_id: str) -> Witness:
    h = build_heisenberg()
    p, q = h.basis_element("p"), h.basis_element("q")
    value = integrate_at(Cochain.dual(h, "p", "q"), [p, q])
    expect_equal(value, Fraction(1, 2), "∫(p*∧q*)(exp p, exp q) ≠ ½")
    expect_equal(bch2(p, q), h.element({"p": 1, "q": 1, "z": Fraction(1, 2)}), "bch2(p, q)")
    return {"integral": value}


def _matrices(options: SuiteOptions, check_id: str) -> Witness:
    h = build_heisenberg()
    sampler = options.sampler(check_id)
    samples = options.samples_for("integration.heisenberg")
    for _ in range(samples):
        x, y = random_group_element(h, sampler), random_group_element(h, sampler)
        expect_equal(
            heisenberg_matrix(bch2(x, y)),
            heisenberg_matrix(x) * heisenberg_matrix(y),
            "BCH product differs from matrix multiplication",
            x=x,
            y=y,
        )
    return {"samples": samples}


def _associativity(options: SuiteOptions, check_id: str) -> Witness:
    h = build_heisenberg()
    x, y, z = (symbolic_point(h, i) for i in (1, 2, 3))
    expect_equal(bch2(bch2(x, y), z), bch2(x, bch2(y, z)), "BCH product is not associative")
    expect_equal(bch2(x, -x), h.zero(), "−X is not the inverse of X")
    return {"symbolic": True}


def _pentagon(options: SuiteOptions, check_id: str) -> Witness:
    samples = options.samples_for("integration.heisenberg")
    group = heisenberg_2group(samples, seed=options.sampler(check_id).integer(0, 2**31))
    symbolic = group_coboundary(group.associator)
    if not symbolic.is_zero():
        raise VerificationError("d(∫γ) is not identically zero")
    return {"quadruples": samples, "symbolic": True, "terms": len(group.associator.poly.terms)}


def _van_est(options: SuiteOptions, check_id: str) -> Witness:
    h = build_heisenberg()
    count = 0
    for p in (1, 2, 3):
        for mono in monomials(h, p):
            omega = Cochain(h, p, {mono: Fraction(1)})
            expect_equal(
                differentiate_cochain(integrate_cochain(omega)),
                omega,
                "D(∫ω) ≠ ω",
                monomial=[h.labels[i] for i in mono],
            )
            count += 1
    return {"basis_cochains": count}


def _cochain_map(g: LieSuperalgebra, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    for p in (1, 2):
        omega = random_cochain(g, p, sampler, density=0.6)
        lhs = group_coboundary(integrate_cochain(omega))
        rhs = integrate_cochain(coboundary(omega))
        expect_equal(lhs, rhs, "d∫ω ≠ ∫dω", level=p, algebra=g.name)
        f = integrate_cochain(omega)
        expect_equal(to_homogeneous(f).to_inhomogeneous(), f, "homogeneous round trip fails")
    return {"levels": [1, 2]}


def _negative_control(options: SuiteOptions, check_id: str) -> Witness:
    free = free_two_step(3)
    omega = Cochain.dual(free, word_label(3), word_label(1, 2))
    if coboundary(omega).is_zero():
        raise VerificationError("the control cochain is unexpectedly closed")
    points = [free.basis_element(word_label(i)) for i in (1, 2, 3)]
    defect = group_coboundary(integrate_cochain(omega)).evaluate(*points)
    if defect == 0:
        raise VerificationError(
            "d∫ω vanishes for a non-closed ω", counterexample={"points": ["X1", "X2", "X3"]}
        )
    return {"defect": defect, "points": [word_label(i) for i in (1, 2, 3)]}


def checks(options: SuiteOptions) -> list[Check]:
    specs: list[tuple[str, str, partial[Witness]]] = [
        (
            "coefficients.p2",
            "∫ω(g, h) = ½ω(X,Y) + 1/12 ω(X,[X,Y]) − 1/12 ω(Y,[X,Y])",
            partial(_two_cochains),
        ),
        (
            "coefficients.p3",
            "the evaluated 3-cochain has 17 terms and ω(X,Y,Z) has coefficient 1/6",
            partial(_three_cochains),
        ),
        ("heisenberg.values", "∫(p*∧q*)(exp p, exp q) = ½", partial(_heisenberg_values)),
        ("heisenberg.matrices", "BCH matches unipotent matrix products", partial(_matrices)),
        ("heisenberg.associativity", "the BCH group law is associative", partial(_associativity)),
        ("heisenberg.pentagon", "∫γ satisfies the pentagon identity", partial(_pentagon)),
        ("van_est", "D∘∫ is the identity on Heisenberg cochains", partial(_van_est)),
        (
            "cochain_map.heisenberg",
            "integration is a cochain map",
            partial(_cochain_map, build_heisenberg()),
        ),
        (
            "cochain_map.free2",
            "integration is a cochain map",
            partial(_cochain_map, free_two_step(3)),
        ),
        (
            "cochain_map.control",
            "d∫ω ≠ 0 when ω is not closed",
            partial(_negative_control),
        ),
    ]
    result = []
    for name, anchor, fn in specs:
        check_id = f"integration.{name}"
        result.append(Check(check_id, Suite.INTEGRATION, anchor, partial(fn, options, check_id)))
    return result
