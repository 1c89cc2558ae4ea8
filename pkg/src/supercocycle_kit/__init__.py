"""supercocycle-kit: exact verification of division algebra supercocycles.

This package provides an exact rational toolkit for:
- Normed division algebras R, C, H, O and 2x2 matrices over them
- Spinor identities in dimensions k+2 and k+3
- Chevalley–Eilenberg cohomology of Lie superalgebras
- Slim Lie n-superalgebras and the generalized Jacobi identity
- Integration of cocycles on 2-step nilpotent Lie (super)groups
- Seeded verification suites with reproducible reports
"""

from .__version__ import __version__
from .algebra import DAElement, DAMatrix
from .cohomology import (
    Cochain,
    coboundary,
    cohomology_dim,
    is_closed,
    is_exact,
    make_alpha,
    make_beta,
    make_gamma,
    make_j,
)
from .config_provider import (
    ConfigFactory,
    create_config,
    load_config,
)
from .exceptions import (
    AlgebraValidationError,
    CochainError,
    ConfigurationError,
    NilpotencyError,
    SerializationError,
    SizeGuardError,
    SupercocycleError,
    UsageError,
    VerificationError,
)
from .export import ReportWriter
from .integration import GroupCochain, differentiate_cochain, integrate_cochain
from .linfty import LInftyData, build_slim, check_linfty
from .models import (
    AlgebraTag,
    CheckRecord,
    GuardConfig,
    KitConfig,
    Report,
    SamplingConfig,
    Suite,
)
from .protocols import RingElement
from .superalgebra import LieSuperalgebra, builtin_algebra, load_algebra
from .supergeometry import GrassmannAlgebra, super_integrate
from .verify import run_suites

__all__ = [
    "__version__",
    # Configuration
    "KitConfig",
    "SamplingConfig",
    "GuardConfig",
    "ConfigFactory",
    "load_config",
    "create_config",
    # Algebra
    "AlgebraTag",
    "DAElement",
    "DAMatrix",
    "LieSuperalgebra",
    "builtin_algebra",
    "load_algebra",
    # Cohomology
    "Cochain",
    "coboundary",
    "is_closed",
    "is_exact",
    "cohomology_dim",
    "make_alpha",
    "make_beta",
    "make_gamma",
    "make_j",
    # L∞
    "LInftyData",
    "build_slim",
    "check_linfty",
    # Integration
    "GroupCochain",
    "integrate_cochain",
    "differentiate_cochain",
    "GrassmannAlgebra",
    "super_integrate",
    # Verification
    "Suite",
    "Report",
    "CheckRecord",
    "ReportWriter",
    "run_suites",
    # Protocols
    "RingElement",
    # Exceptions
    "SupercocycleError",
    "ConfigurationError",
    "UsageError",
    "AlgebraValidationError",
    "NilpotencyError",
    "CochainError",
    "SizeGuardError",
    "VerificationError",
    "SerializationError",
]
