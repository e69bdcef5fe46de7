"""Closed forms for structured families and generic canonical forms over placeholders."""

from .closed_forms import (
    SpreadShape,
    chain_almost_canonical,
    chain_canonical,
    chain_ideal,
    cycle_canonical,
    cycle_ideal,
    spread_canonical,
    spread_ideal,
)
from .generic import (
    ExtIdeal,
    ExtMonomial,
    Substitution,
    expand_repeats,
    generic_almost_canonical,
    generic_canonical,
    instantiate,
    parse_generic_text,
    substitute,
)

__all__ = [
    "SpreadShape", "chain_almost_canonical", "chain_canonical", "chain_ideal",
    "cycle_canonical", "cycle_ideal", "spread_canonical", "spread_ideal",
    "ExtIdeal", "ExtMonomial", "Substitution", "expand_repeats",
    "generic_almost_canonical", "generic_canonical", "instantiate",
    "parse_generic_text", "substitute",
]
