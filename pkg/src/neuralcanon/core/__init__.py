"""Core value types, monomial arithmetic, parsing and configuration."""

from .models import (
    Axis,
    MonomialIdeal,
    MonomialPrime,
    Pseudomonomial,
    SfMonomial,
    sort_key,
)
from .monomial import (
    depolarize,
    divides,
    lcm_sf,
    polarize,
    shared_indices,
)
from .parser import format_monomial, parse_monomial
from .config import NeuralCanonConfig, load_config

__all__ = [
    "Axis", "MonomialIdeal", "MonomialPrime", "Pseudomonomial", "SfMonomial", "sort_key",
    "depolarize", "divides", "lcm_sf", "polarize", "shared_indices",
    "format_monomial", "parse_monomial", "NeuralCanonConfig", "load_config",
]
