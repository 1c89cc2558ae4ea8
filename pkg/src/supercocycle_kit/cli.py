"""Command-line driver.

Subcommands:

    supercocycle verify [SUITE ...] [--k K ...] [--grassmann N] [--samples S] [--seed SEED]
    supercocycle integrate COCHAIN [--k K] [--n N] [--algebra NAME | --config FILE] [--out FILE]
    supercocycle cohomology ALGEBRA LEVEL [--witness COCHAIN] [--grade E,O]
    supercocycle algebra FILE

Exit codes: 0 when everything passed, 1 on a failed verification, 2 on a
usage or configuration error.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import orjson

from supercocycle_kit.__version__ import __version__
from supercocycle_kit.cohomology import (
    Cochain,
    cochain_from_json,
    cohomology_dim,
    is_closed,
    is_exact,
    make_alpha,
    make_beta,
    make_gamma,
    make_j,
)
from supercocycle_kit.config_provider import ConfigFactory
from supercocycle_kit.exceptions import (
    SerializationError,
    SupercocycleError,
    UsageError,
    VerificationError,
)
from supercocycle_kit.export import ReportWriter, write_document
from supercocycle_kit.integration import (
    group_cochain_to_json,
    integrate_cochain,
    require_two_step,
)
from supercocycle_kit.models.config import KitConfig
from supercocycle_kit.models.enums import OutputFormat, Suite
from supercocycle_kit.superalgebra import (
    BUILTIN_ALGEBRAS,
    LieSuperalgebra,
    builtin_algebra,
    is_two_step_nilpotent,
    load_algebra,
    validate,
)
from supercocycle_kit.verify import run_suites

logger = logging.getLogger("supercocycle_kit")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

NAMED_COCHAINS = ("gamma", "alpha", "beta", "j")


def _parse_suites(names: Sequence[str]) -> list[Suite]:
    if not names or "all" in names:
        return list(Suite)
    known = {s.value: s for s in Suite}
    unknown = [n for n in names if n not in known]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}", details={"known": sorted(known)})
    return [known[n] for n in dict.fromkeys(names)]


def _parse_grade(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        even, odd = (int(part) for part in text.split(","))
    except ValueError as e:
        raise UsageError(f"grade must look like 2,0, got {text!r}") from e
    return even, odd


def _config(args: argparse.Namespace) -> KitConfig:
    """Environment configuration overridden by explicit flags."""
    base = ConfigFactory.from_env()
    data: dict[str, Any] = base.model_dump()
    sampling = data["sampling"]
    if getattr(args, "seed", None) is not None:
        sampling["seed"] = args.seed
    if getattr(args, "samples", None) is not None:
        sampling["samples"] = args.samples
    if getattr(args, "grassmann", None) is not None:
        sampling["grassmann_generators"] = args.grassmann
    if getattr(args, "workers", None) is not None:
        data["workers"] = args.workers
    if getattr(args, "timings", False):
        data["include_timings"] = True
    if getattr(args, "max_monomials", None) is not None:
        data["guards"]["max_monomials"] = args.max_monomials
    return ConfigFactory.from_dict(data)


def _algebra(args: argparse.Namespace) -> LieSuperalgebra | None:
    if getattr(args, "config", None):
        return load_algebra(args.config)
    if getattr(args, "algebra", None):
        return builtin_algebra(args.algebra, args.k, getattr(args, "big", False))
    return None


def _named_cochain(name: str, k: int, n: int) -> Cochain:
    if name == "gamma":
        return make_gamma()
    if name == "alpha":
        return make_alpha(k)
    if name == "beta":
        return make_beta(k)
    if name == "j":
        return make_j(n)
    raise UsageError(f"unknown cochain {name!r}", details={"known": NAMED_COCHAINS})


def _load_cochain(args: argparse.Namespace, g: LieSuperalgebra | None) -> Cochain:
    if args.cochain in NAMED_COCHAINS:
        omega = _named_cochain(args.cochain, args.k, args.n)
        if g is not None and g != omega.parent:
            raise UsageError(f"{args.cochain} lives on {omega.parent.name}, not on {g.name}")
        return omega
    if g is None:
        raise UsageError("a cochain file needs --algebra or --config")
    try:
        data = orjson.loads(Path(args.cochain).read_bytes())
    except (OSError, orjson.JSONDecodeError) as e:
        raise SerializationError(f"cannot read cochain file {args.cochain}: {e}") from e
    return cochain_from_json(data, g)


# Subcommands


def cmd_verify(args: argparse.Namespace) -> int:
    suites = _parse_suites(args.suite + (args.suites or []))
    config = _config(args)
    report = run_suites(suites, config, args.k)
    output_format = OutputFormat(args.format)
    with ReportWriter(args.out, output_format, config.include_timings) as writer:
        writer.write(report)
    counts = report.counts()
    logger.info(f"verify: {counts['passed']}/{len(report.records)} checks passed")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_integrate(args: argparse.Namespace) -> int:
    g = _algebra(args)
    if g is not None:
        require_two_step(g)
    omega = _load_cochain(args, g)
    f = integrate_cochain(omega, args.p)
    write_document(group_cochain_to_json(f), args.out)
    return EXIT_OK


def cmd_cohomology(args: argparse.Namespace) -> int:
    config = _config(args)
    g = builtin_algebra(args.algebra, args.k, args.big)
    guard = config.guards.max_monomials
    result: dict[str, Any] = {
        "algebra": g.name,
        "level": args.level,
        "dimension": cohomology_dim(g, args.level, max_monomials=guard),
    }
    if args.witness:
        omega = _named_cochain(args.witness, args.k, args.n)
        if omega.parent != g:
            raise UsageError(f"{args.witness} lives on {omega.parent.name}, not on {g.name}")
        decision = is_exact(omega, _parse_grade(args.grade), max_monomials=guard)
        result["witness"] = {
            "cochain": args.witness,
            "closed": is_closed(omega),
            **decision.to_model().model_dump(mode="json"),
        }
    write_document(result, None)
    return EXIT_OK


def cmd_algebra(args: argparse.Namespace) -> int:
    g = load_algebra(args.file, check=False)
    report = validate(g)
    even, odd = g.basis.even_count, g.basis.odd_count
    write_document(
        {
            "algebra": g.name,
            "even": even,
            "odd": odd,
            "two_step_nilpotent": is_two_step_nilpotent(g),
            **report.model_dump(mode="json"),
            "valid": report.valid,
        },
        None,
    )
    return EXIT_OK if report.valid else EXIT_FAILED


# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercocycle",
        description="Exact verification of division algebra supercocycles and their integrals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log errors")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="Run verification suites and write a report")
    suite_names = ", ".join(s.value for s in Suite)
    verify.add_argument("suite", nargs="*", default=[], help=f"Suites to run: all, {suite_names}")
    verify.add_argument("--suite", dest="suites", action="append", help="Suite to run (repeatable)")
    verify.add_argument("--k", type=int, action="append", help="Division algebra dimension")
    verify.add_argument("--grassmann", type=int, help="Grassmann generators n of A = ΛRⁿ")
    verify.add_argument(
        "--samples",
        type=int,
        help="Samples for every randomized check (overrides the per-check counts)",
    )
    verify.add_argument("--seed", type=int, help="Sampling seed")
    verify.add_argument("--workers", type=int, help="Worker threads")
    verify.add_argument(
        "--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value
    )
    verify.add_argument("--out", type=Path, help="Report file (default: stdout)")
    verify.add_argument("--timings", action="store_true", help="Record wall times")
    verify.set_defaults(handler=cmd_verify)

    integrate = sub.add_parser("integrate", help="Integrate a cochain to a group cochain")
    integrate.add_argument("cochain", help=f"One of {', '.join(NAMED_COCHAINS)} or a JSON file")
    source = integrate.add_mutually_exclusive_group()
    source.add_argument("--algebra", help=f"Built-in algebra: {', '.join(BUILTIN_ALGEBRAS)}")
    source.add_argument("--config", type=Path, help="Algebra configuration file")
    integrate.add_argument("--k", type=int, default=1, help="k for alpha, beta, T and siso")
    integrate.add_argument("--n", type=int, default=3, help="n for j on so(n)")
    integrate.add_argument("--big", action="store_true", help="Use the k+3 flavor")
    integrate.add_argument("--p", type=int, help="Expected cochain level")
    integrate.add_argument("--out", type=Path, help="Output file (default: stdout)")
    integrate.set_defaults(handler=cmd_integrate)

    cohomology = sub.add_parser("cohomology", help="Dimension of a cohomology group")
    cohomology.add_argument("algebra", help=f"Built-in algebra: {', '.join(BUILTIN_ALGEBRAS)}")
    cohomology.add_argument("level", type=int)
    cohomology.add_argument("--k", type=int, default=1)
    cohomology.add_argument("--n", type=int, default=3)
    cohomology.add_argument("--big", action="store_true")
    cohomology.add_argument("--witness", choices=NAMED_COCHAINS, help="Cochain to decide")
    cohomology.add_argument("--grade", help="Preimage bigrade for the witness, e.g. 2,0")
    cohomology.add_argument("--max-monomials", type=int, dest="max_monomials")
    cohomology.set_defaults(handler=cmd_cohomology)

    algebra = sub.add_parser("algebra", help="Validate an algebra configuration file")
    algebra.add_argument("file", type=Path)
    algebra.set_defaults(handler=cmd_algebra)
    return parser


def _configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    _configure_logging(args.verbose, args.quiet)
    try:
        return int(args.handler(args))
    except VerificationError as e:
        logger.error(f"verification failed: {e}")
        return EXIT_FAILED
    except SupercocycleError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
