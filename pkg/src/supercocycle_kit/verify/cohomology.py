"""Cohomology checks: closedness and non-exactness of α and β, and their extensions."""

from functools import partial

from supercocycle_kit.cohomology import (
    Cochain,
    adjoint_derivation,
    coboundary,
    cohomology_dim,
    extend_by_zero,
    interior_product,
    invariance_defect,
    is_closed,
    is_exact,
    make_alpha,
    make_beta,
    make_gamma,
    make_j,
    random_cochain,
    restrict_cochain,
)
from supercocycle_kit.exceptions import VerificationError
from supercocycle_kit.models.enums import AlgebraTag, Flavor, Suite
from supercocycle_kit.superalgebra import (
    LieSuperalgebra,
    build_heisenberg,
    build_heisenberg_torus,
    build_poincare,
    build_so,
    build_supertranslation,
)

from .runner import Check, SuiteOptions, Witness, expect_equal, expect_zero


def _make(k: int, big: bool) -> Cochain:
    return make_beta(k) if big else make_alpha(k)


def _name(big: bool) -> str:
    return "β" if big else "α"


def _closed(k: int, big: bool, options: SuiteOptions, check_id: str) -> Witness:
    omega = _make(k, big)
    d = coboundary(omega)
    if not d.is_zero():
        raise VerificationError(
            f"d{_name(big)} ≠ 0 for k={k}",
            counterexample={"terms": {" ".join(m): str(c) for m, c in d.labelled().items()}},
        )
    return {"terms": len(omega.coeffs), "level": omega.level}


def _not_exact(k: int, big: bool, options: SuiteOptions, check_id: str) -> Witness:
    omega = _make(k, big)
    grade = (3, 0) if big else (2, 0)
    decision = is_exact(omega, grade, max_monomials=options.max_monomials)
    if decision.exact:
        raise VerificationError(
            f"{_name(big)} is exact for k={k}",
            counterexample={"witness": decision.to_model().model_dump(mode="json")},
        )
    return {
        "preimage_bigrade": list(grade),
        "unknowns": decision.unknowns,
        "rank": decision.rank,
        "augmented_rank": decision.augmented_rank,
    }


def _extension(k: int, big: bool, options: SuiteOptions, check_id: str) -> Witness:
    flavor = Flavor.K3 if big else Flavor.K2
    ambient = build_poincare(k, flavor)
    extension = extend_by_zero(_make(k, big), ambient)
    expect_zero(
        len(extension.coboundary.coeffs),
        f"the extension of {_name(big)} to {ambient.name} is not closed",
        defect_terms=len(extension.defect.coeffs),
    )
    return {"ambient": ambient.name, "ambient_dimension": ambient.dimension}


def _invariance(k: int, big: bool, options: SuiteOptions, check_id: str) -> Witness:
    flavor = Flavor.K3 if big else Flavor.K2
    ambient = build_poincare(k, flavor)
    omega = _make(k, big)
    lorentz = [lbl for lbl in ambient.labels if lbl.startswith("m_")]
    for label in lorentz:
        defect = invariance_defect(omega, adjoint_derivation(ambient, label, omega.parent))
        expect_zero(
            len(defect.coeffs), f"{_name(big)} is not invariant under {label}", generator=label
        )
    return {"generators": len(lorentz)}


def _interior(k: int, options: SuiteOptions, check_id: str) -> Witness:
    contracted = interior_product(make_beta(k), "a")
    restricted = restrict_cochain(contracted, build_supertranslation(k, Flavor.K2))
    alpha = make_alpha(k)
    expect_equal(
        restricted.labelled(),
        (alpha * 2).labelled(),
        "i_a β restricted to V ⊕ S₊ is not 2α",
        k=k,
    )
    return {"terms": len(restricted.coeffs)}


def _d_squared(g: LieSuperalgebra, options: SuiteOptions, check_id: str) -> Witness:
    sampler = options.sampler(check_id)
    levels = []
    for _ in range(options.samples_for("cohomology.d_squared")):
        p = sampler.integer(0, 3)
        omega = random_cochain(g, p, sampler, density=0.3, max_monomials=options.max_monomials)
        dd = coboundary(coboundary(omega))
        expect_zero(len(dd.coeffs), f"d² ≠ 0 on a level {p} cochain of {g.name}", level=p)
        levels.append(p)
    return {"samples": len(levels), "levels": sorted(set(levels))}


def _heisenberg(options: SuiteOptions, check_id: str) -> Witness:
    h = build_heisenberg()
    expected = -Cochain.dual(h, "p", "q")
    expect_equal(coboundary(Cochain.dual(h, "z")), expected, "d(z*) ≠ −p*∧q*")
    dims = [cohomology_dim(h, p, max_monomials=options.max_monomials) for p in range(4)]
    expect_equal(dims, [1, 2, 2, 1], "wrong Heisenberg Betti numbers")
    gamma = make_gamma()
    if not is_closed(gamma) or is_exact(gamma).exact:
        raise VerificationError("γ does not define a nontrivial class")
    return {"betti": dims}


def _so3(options: SuiteOptions, check_id: str) -> Witness:
    j = make_j(3)
    if not is_closed(j):
        raise VerificationError("j is not closed on so(3)")
    if is_exact(j, max_monomials=options.max_monomials).exact:
        raise VerificationError("j is exact on so(3)")
    dims = [cohomology_dim(build_so(3), p, max_monomials=options.max_monomials) for p in range(4)]
    expect_equal(dims, [1, 0, 0, 1], "wrong so(3) Betti numbers")
    return {"betti": dims}


def checks(options: SuiteOptions) -> list[Check]:
    specs: list[tuple[str, str, partial[Witness]]] = [
        (
            "heisenberg",
            "d(z*) = −p*∧q* and γ spans H³ of the Heisenberg algebra",
            partial(_heisenberg),
        ),
        ("so3", "j generates H³(so(3))", partial(_so3)),
        ("d_squared.heisenberg", "d² = 0", partial(_d_squared, build_heisenberg())),
        ("d_squared.heisenberg_torus", "d² = 0", partial(_d_squared, build_heisenberg_torus())),
        ("d_squared.so4", "d² = 0", partial(_d_squared, build_so(4))),
    ]
    for k in options.ks:
        tag = AlgebraTag.from_dimension(k).value
        specs += [
            (f"alpha_closed.{tag}", "α is a 3-cocycle on T(k+1,1)", partial(_closed, k, False)),
            (f"beta_closed.{tag}", "β is a 4-cocycle on T(k+2,1)", partial(_closed, k, True)),
            (
                f"alpha_not_exact.{tag}",
                "α is not the coboundary of a (2,0)-form",
                partial(_not_exact, k, False),
            ),
            (
                f"beta_not_exact.{tag}",
                "β is not the coboundary of a (3,0)-form",
                partial(_not_exact, k, True),
            ),
            (
                f"alpha_extension.{tag}",
                "α extends by zero to a cocycle on siso(k+1,1)",
                partial(_extension, k, False),
            ),
            (
                f"beta_extension.{tag}",
                "β extends by zero to a cocycle on siso(k+2,1)",
                partial(_extension, k, True),
            ),
            (
                f"alpha_invariance.{tag}",
                "α is Lorentz invariant",
                partial(_invariance, k, False),
            ),
            (f"beta_invariance.{tag}", "β is Lorentz invariant", partial(_invariance, k, True)),
            (f"interior.{tag}", "i_a β restricts to 2α on T(k+1,1)", partial(_interior, k)),
            (
                f"d_squared.T.{tag}",
                "d² = 0",
                partial(_d_squared, build_supertranslation(k, Flavor.K2)),
            ),
        ]
    result = []
    for name, anchor, fn in specs:
        check_id = f"cohomology.{name}"
        result.append(Check(check_id, Suite.COHOMOLOGY, anchor, partial(fn, options, check_id)))
    return result
