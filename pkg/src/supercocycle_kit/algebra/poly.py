"""Sparse multivariate polynomials over an arbitrary coefficient ring.

A :class:`Poly` is a dictionary from monomials to coefficients. Monomials are
sorted tuples of ``(variable, exponent)`` pairs, so two polynomials with the
same terms always compare equal. Coefficients may be ``Fraction``s, other
polynomials, or Grassmann elements; products keep operand order
(``c1 * c2``), which makes ``Poly`` usable as A[t] for a Grassmann algebra A.

The integration engine uses polynomials for the cube parameters t₁..t_p and
for symbolic group coordinates, and integrates monomials over the unit cube
with ∫ t^a = 1/(a+1).
"""

from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Any

from supercocycle_kit.protocols import is_zero

Monomial = tuple[tuple[str, int], ...]

ONE: Monomial = ()


def monomial(**powers: int) -> Monomial:
    """Build a canonical monomial from keyword exponents.

    Example:
        >>> monomial(t1=2, s=1)
        (('s', 1), ('t1', 2))
    """
    return tuple(sorted((v, e) for v, e in powers.items() if e))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for var, exp in b:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


class Poly:
    """Sparse polynomial with ring coefficients.

    Example:
        >>> s, t = Poly.variable("s"), Poly.variable("t")
        >>> p = s * t + Fraction(1, 2) * s
        >>> p.integrate_unit_cube(["s", "t"]) == Fraction(1, 2)
        True
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Any] | None = None) -> None:
        self._terms: dict[Monomial, Any] = {}
        if terms:
            for mono, coef in terms.items():
                self._add_term(mono, coef)

    @classmethod
    def variable(cls, name: str, coefficient: Any = None) -> "Poly":
        """The polynomial ``coefficient * name`` (coefficient defaults to 1)."""
        coef = Fraction(1) if coefficient is None else coefficient
        return cls({((name, 1),): coef})

    @classmethod
    def constant(cls, value: Any) -> "Poly":
        """A constant polynomial."""
        return cls({ONE: value})

    @classmethod
    def _raw(cls, terms: dict[Monomial, Any]) -> "Poly":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    def _add_term(self, mono: Monomial, coef: Any) -> None:
        terms = self._terms
        if mono in terms:
            total = terms[mono] + coef
            if is_zero(total):
                del terms[mono]
            else:
                terms[mono] = total
        elif not is_zero(coef):
            terms[mono] = coef

    @property
    def terms(self) -> dict[Monomial, Any]:
        """Monomial to coefficient map (do not mutate)."""
        return self._terms

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._terms

    def variables(self) -> set[str]:
        """Variables occurring with a nonzero coefficient."""
        return {var for mono in self._terms for var, _ in mono}

    def degree_in(self, var: str) -> int:
        """Highest exponent of ``var`` (0 if absent)."""
        return max((dict(m).get(var, 0) for m in self._terms), default=0)

    def coefficient(self, mono: Monomial | Mapping[str, int]) -> Any:
        """Coefficient of a monomial, ``Fraction(0)`` when absent."""
        key = tuple(sorted(mono.items())) if isinstance(mono, Mapping) else mono
        return self._terms.get(key, Fraction(0))

    def constant_term(self) -> Any:
        """Coefficient of the empty monomial."""
        return self._terms.get(ONE, Fraction(0))

    # Arithmetic

    def __add__(self, other: Any) -> "Poly":
        result = Poly._raw(dict(self._terms))
        if isinstance(other, Poly):
            for mono, coef in other._terms.items():
                result._add_term(mono, coef)
        else:
            result._add_term(ONE, other)
        return result

    def __radd__(self, other: Any) -> "Poly":
        return self.__add__(other)

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "Poly":
        return self + (-other)

    def __rsub__(self, other: Any) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            result = Poly()
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    result._add_term(_mono_mul(m1, m2), c1 * c2)
            return result
        if is_zero(other):
            return Poly()
        return Poly({m: c * other for m, c in self._terms.items()})

    def __rmul__(self, other: Any) -> "Poly":
        if is_zero(other):
            return Poly()
        return Poly({m: other * c for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(Fraction(1))
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            if self._terms.keys() != other._terms.keys():
                return False
            return all(bool(c == other._terms[m]) for m, c in self._terms.items())
        if is_zero(other):
            return not self._terms
        return set(self._terms) == {ONE} and bool(self._terms[ONE] == other)

    __hash__ = None  # type: ignore[assignment]

    # Calculus

    def partial(self, var: str) -> "Poly":
        """Partial derivative with respect to ``var``."""
        result = Poly()
        for mono, coef in self._terms.items():
            powers = dict(mono)
            exp = powers.get(var, 0)
            if exp == 0:
                continue
            if exp == 1:
                del powers[var]
            else:
                powers[var] = exp - 1
            result._add_term(tuple(sorted(powers.items())), Fraction(exp) * coef)
        return result

    def integrate_unit_cube(self, variables: Iterable[str]) -> "Poly":
        """Integrate the given variables over [0, 1] each.

        The monomial t^a contributes 1/(a+1) per integrated variable; the
        remaining variables stay symbolic.
        """
        cube = set(variables)
        result = Poly()
        for mono, coef in self._terms.items():
            weight = Fraction(1)
            rest = []
            for var, exp in mono:
                if var in cube:
                    weight /= exp + 1
                else:
                    rest.append((var, exp))
            result._add_term(tuple(rest), coef * weight)
        return result

    def substitute(self, values: Mapping[str, Any]) -> Any:
        """Substitute ring elements for variables.

        Variables missing from ``values`` stay symbolic. The result is a ring
        element of whatever type the substituted values produce.
        """
        total: Any = Fraction(0)
        powers: dict[tuple[str, int], Any] = {}
        for mono, coef in self._terms.items():
            acc: Any = coef
            for var, exp in mono:
                key = (var, exp)
                if key not in powers:
                    base = values[var] if var in values else Poly.variable(var)
                    powers[key] = _power(base, exp)
                acc = acc * powers[key]
            total = total + acc
        return total

    def map_coefficients(self, fn: Any) -> "Poly":
        """Apply ``fn`` to every coefficient."""
        return Poly({m: fn(c) for m, c in self._terms.items()})

    def __repr__(self) -> str:
        if not self._terms:
            return "Poly(0)"
        parts = []
        for mono, coef in sorted(self._terms.items(), key=lambda item: item[0]):
            factors = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            parts.append(f"({coef})" + (f"*{factors}" if factors else ""))
        return "Poly(" + " + ".join(parts) + ")"


def _power(base: Any, exp: int) -> Any:
    result = base
    for _ in range(exp - 1):
        result = result * base
    return result
