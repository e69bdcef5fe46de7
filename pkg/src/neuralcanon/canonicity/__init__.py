"""Canonicity checking and the two-generator classification."""

from .checker import (
    CanonicityVerdict,
    PreconditionFailure,
    PreconditionKind,
    Witness,
    is_canonical,
    shortcut_index_list,
)
from .two_gen import TwoGenCase, TwoGenCaseTag, classify_two_gen

__all__ = [
    "CanonicityVerdict", "PreconditionFailure", "PreconditionKind", "Witness",
    "is_canonical", "shortcut_index_list", "TwoGenCase", "TwoGenCaseTag", "classify_two_gen",
]
