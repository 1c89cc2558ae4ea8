"""Data models for supercocycle-kit.

Includes configuration models and the JSON documents read and written by the
CLI: algebra configurations, cochains, group cochains, L∞ and verification
reports.
"""

from .algebra import (
    AlgebraConfig,
    BasisEntry,
    BracketEntry,
    BracketTerm,
    ValidationFailure,
    ValidationReport,
)
from .cochain import (
    CochainDocument,
    CochainTerm,
    ExactnessResult,
    GroupCochainDocument,
    GroupTerm,
)
from .config import GuardConfig, KitConfig, SamplingConfig
from .enums import AlgebraTag, CheckStatus, Chirality, Flavor, OutputFormat, Parity, Suite
from .linfty import LInftyFailure, LInftyReport
from .report import CheckRecord, Report

__all__ = [
    # Configuration
    "KitConfig",
    "SamplingConfig",
    "GuardConfig",
    # Enums
    "AlgebraTag",
    "Parity",
    "Chirality",
    "Flavor",
    "Suite",
    "CheckStatus",
    "OutputFormat",
    # Algebra files
    "AlgebraConfig",
    "BasisEntry",
    "BracketEntry",
    "BracketTerm",
    "ValidationFailure",
    "ValidationReport",
    # Cochains
    "CochainDocument",
    "CochainTerm",
    "ExactnessResult",
    "GroupCochainDocument",
    "GroupTerm",
    # Reports
    "LInftyFailure",
    "LInftyReport",
    "CheckRecord",
    "Report",
]
