"""Canonical form engine: reduction, recomposition and the two canonical form paths."""

from .canonical import (
    CanonicalResult,
    almost_canonical,
    canonical_by_components,
    canonical_fast,
    canonical_form,
    canonical_full,
    recompose,
    recompose_one_index,
    reduce,
    shared_index_components,
    shortcut_indices,
)

__all__ = [
    "CanonicalResult", "almost_canonical", "canonical_by_components", "canonical_fast",
    "canonical_form", "canonical_full", "recompose", "recompose_one_index", "reduce",
    "shared_index_components", "shortcut_indices",
]
