"""Hypertree posets: enumeration, chain counting, homology and cycle-index identities."""

from .cycle_index import CycleIndex, extract_character, plethysm, plethystic_inverse
from .errors import (
    ConvergenceError,
    DomainError,
    HypertreeError,
    ResourceLimitError,
    StabilityError,
    ValidationError,
)
from .homology import build_chain_complex, character_table, homology_profile, lefschetz_character, whitney_dimensions
from .hypertree import Hypergraph, Hypertree, PointedHypertree, enumerate_hypertrees, enumerate_pointed
from .ledger import VerificationReport, run_ledger, verify_identity
from .poset import ChainSpec, count_large_chains, count_strict_chains, hypertree_poset, mobius_top
from .series import hal_series, named_series
from .species import KPolynomial, character_polynomial, cycle_index_from_counts, evaluate_at

__version__ = "0.1.0"

__all__ = [
    "ChainSpec",
    "ConvergenceError",
    "CycleIndex",
    "DomainError",
    "Hypergraph",
    "Hypertree",
    "HypertreeError",
    "KPolynomial",
    "PointedHypertree",
    "ResourceLimitError",
    "StabilityError",
    "ValidationError",
    "VerificationReport",
    "build_chain_complex",
    "character_polynomial",
    "character_table",
    "count_large_chains",
    "count_strict_chains",
    "cycle_index_from_counts",
    "enumerate_hypertrees",
    "enumerate_pointed",
    "evaluate_at",
    "extract_character",
    "hal_series",
    "homology_profile",
    "hypertree_poset",
    "lefschetz_character",
    "mobius_top",
    "named_series",
    "plethysm",
    "plethystic_inverse",
    "run_ledger",
    "verify_identity",
    "whitney_dimensions",
]
