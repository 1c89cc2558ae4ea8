"""Conversion between :class:`AlgebraConfig` files and Lie superalgebras."""

import logging
from pathlib import Path

import orjson
from pydantic import ValidationError

from supercocycle_kit.exceptions import (
    AlgebraValidationError,
    ConfigurationError,
    SerializationError,
    UsageError,
)
from supercocycle_kit.models.algebra import AlgebraConfig, BasisEntry, BracketEntry, BracketTerm
from supercocycle_kit.models.enums import Flavor, Parity
from supercocycle_kit.utils.rationals import format_rational, parse_rational

from .basis import SuperBasis
from .builders import (
    build_heisenberg,
    build_heisenberg_torus,
    build_poincare,
    build_so,
    build_supertranslation,
)
from .lie import LieSuperalgebra, validate

logger = logging.getLogger(__name__)


def algebra_from_config(config: AlgebraConfig, check: bool = True) -> LieSuperalgebra:
    """Build a Lie superalgebra from its JSON description.

    Args:
        config: Parsed algebra file
        check: Reject structure constants that fail graded Jacobi or symmetry

    Raises:
        ConfigurationError: If labels are unknown or the structure constants
            fail validation
    """
    try:
        basis = SuperBasis(
            [entry.label for entry in config.basis],
            [Parity.parse(entry.parity) for entry in config.basis],
        )
        brackets = {
            (entry.x, entry.y): {term.label: parse_rational(term.coef) for term in entry.result}
            for entry in config.brackets
        }
        algebra = LieSuperalgebra.from_brackets(config.name, basis, brackets)
    except (AlgebraValidationError, UsageError) as e:
        raise ConfigurationError(f"Invalid algebra configuration: {e.message}") from e
    if not check:
        return algebra
    report = validate(algebra)
    if not report.valid:
        first = report.failures[0]
        raise ConfigurationError(
            f"Invalid algebra configuration: {first.axiom} fails for {first.labels}",
            details={"failures": len(report.failures)},
        )
    return algebra


def algebra_to_config(g: LieSuperalgebra) -> AlgebraConfig:
    """Describe an algebra as JSON, one entry per unordered pair."""
    labels = g.labels
    entries = []
    for (i, j), result in sorted(g.nonzero_brackets()):
        if j < i:
            continue
        terms = [
            BracketTerm(coef=format_rational(c), label=labels[k])
            for k, c in sorted(result.items())
        ]
        entries.append(BracketEntry(x=labels[i], y=labels[j], result=terms))
    basis = [
        BasisEntry(label=lbl, parity="odd" if g.parity(lbl) else "even") for lbl in labels
    ]
    return AlgebraConfig(name=g.name, basis=basis, brackets=entries)


def load_algebra(path: str | Path, check: bool = True) -> LieSuperalgebra:
    """Read an AlgebraConfig JSON file (see :func:`algebra_from_config` for ``check``).

    Raises:
        SerializationError: If the file is not valid JSON
        ConfigurationError: If the content is not a valid algebra
    """
    try:
        raw = orjson.loads(Path(path).read_bytes())
    except (OSError, orjson.JSONDecodeError) as e:
        raise SerializationError(f"cannot read algebra file {path}: {e}") from e
    try:
        config = AlgebraConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigurationError(
            f"Invalid algebra configuration: {e.error_count()} errors found"
        ) from e
    logger.info(f"Loaded algebra {config.name} from {path}")
    return algebra_from_config(config, check)


BUILTIN_ALGEBRAS = ("heisenberg", "heisenberg-torus", "so3", "so4", "so5", "T", "siso")


def builtin_algebra(name: str, k: int = 1, big: bool = False) -> LieSuperalgebra:
    """Look up a built-in algebra by CLI name.

    ``T`` and ``siso`` take the division algebra dimension k and, with
    ``big``, the k+3 flavor.

    Raises:
        UsageError: If the name is unknown
    """
    flavor = Flavor.K3 if big else Flavor.K2
    if name == "heisenberg":
        return build_heisenberg()
    if name == "heisenberg-torus":
        return build_heisenberg_torus()
    if name.startswith("so") and name[2:].isdigit():
        return build_so(int(name[2:]))
    if name == "T":
        return build_supertranslation(k, flavor)
    if name == "siso":
        return build_poincare(k, flavor)
    raise UsageError(f"unknown built-in algebra {name!r}", details={"known": BUILTIN_ALGEBRAS})
