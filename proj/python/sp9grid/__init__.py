"""Signed Paley graph toolkit.

GF(9) arithmetic, the order-9 signed Paley graph with its exhaustive
structure checks, a deterministic 9-coloring algorithm for signified
grids, a homomorphism verifier and a brute-force search oracle.
"""

from ._core import (
    EdgeViolation,
    Gf9,
    GridColoring,
    LemmaReport,
    OracleLimits,
    RowState,
    Sign,
    SignedGrid,
    SignedPaleyGraph,
    SignedTargetGraph,
    SweepReport,
    VertexSet,
    VerifyResult,
    all_pass,
    check_all,
    check_lemma1,
    check_lemma1_permutation_search,
    check_lemma2,
    check_lemma3,
    check_lemma4,
    check_lemma5,
    check_lemma6,
    color_grid,
    color_path,
    exhaustive_signature_sweep,
    find_homomorphism,
    negate,
    propagate_sets,
    reports_to_json,
    select_backward,
    sp9,
    to_dot,
    verify_homomorphism,
    verify_homomorphism_against,
)

__all__ = [
    "EdgeViolation",
    "Gf9",
    "GridColoring",
    "LemmaReport",
    "OracleLimits",
    "RowState",
    "Sign",
    "SignedGrid",
    "SignedPaleyGraph",
    "SignedTargetGraph",
    "SweepReport",
    "VertexSet",
    "VerifyResult",
    "all_pass",
    "check_all",
    "check_lemma1",
    "check_lemma1_permutation_search",
    "check_lemma2",
    "check_lemma3",
    "check_lemma4",
    "check_lemma5",
    "check_lemma6",
    "color_grid",
    "color_path",
    "exhaustive_signature_sweep",
    "find_homomorphism",
    "negate",
    "propagate_sets",
    "reports_to_json",
    "select_backward",
    "sp9",
    "to_dot",
    "verify_homomorphism",
    "verify_homomorphism_against",
]

__version__ = "1.0.0"
