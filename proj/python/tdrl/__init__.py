"""TDRL and mirror-TDRL rearrangement operations on permutations.

Thin re-export of the compiled core: permutations, binary insertion
patterns, one-step neighborhoods (out/in/reversible, optionally windowed),
exact closed-form counts and sphere-packing bounds, sequence
reconstruction, and greedy single-error-correcting code search.
"""

from ._core import (
    CountKind,
    Direction,
    GuardError,
    OpKind,
    Pattern,
    Permutation,
    WitnessFamily,
    __version__,
    apply,
    ball_in,
    ball_out,
    binomial,
    canonical_pattern,
    closed_form,
    factorial,
    family_matches_kind,
    greedy_code,
    intersect_out,
    inverse_reversible_pattern,
    is_reversible_pattern,
    is_unimodular,
    is_valid_permutation,
    max_intersection,
    reconstruct,
    relabel,
    reversible_fraction,
    reversible_set,
    sphere_packing_bound,
    verify_code,
    witness_pair,
)

__all__ = [
    "CountKind",
    "Direction",
    "GuardError",
    "OpKind",
    "Pattern",
    "Permutation",
    "WitnessFamily",
    "__version__",
    "apply",
    "ball_in",
    "ball_out",
    "binomial",
    "canonical_pattern",
    "closed_form",
    "factorial",
    "family_matches_kind",
    "greedy_code",
    "intersect_out",
    "inverse_reversible_pattern",
    "is_reversible_pattern",
    "is_unimodular",
    "is_valid_permutation",
    "max_intersection",
    "reconstruct",
    "relabel",
    "reversible_fraction",
    "reversible_set",
    "sphere_packing_bound",
    "verify_code",
    "witness_pair",
]
