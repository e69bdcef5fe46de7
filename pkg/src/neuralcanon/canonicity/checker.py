"""Canonicity decision from shared indices alone.

For a Boolean-free ideal with no generator dividing another, the ideal is
not canonical exactly when some pair g, h shares a single index i and no
other generator divides lcm(g, h)/(x_i*y_i).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from ..core.models import MonomialIdeal, indices_of, lowest_index
from ..core.monomial import divides, lcm_sf, shared_mask, strip_index
from ..engine.canonical import shortcut_indices

logger = logging.getLogger(__name__)


class PreconditionKind(str, Enum):
    BOOLEAN_DIVISIBLE = "boolean_divisible"
    DIVISOR_PAIR = "divisor_pair"
    UNIT_IDEAL = "unit_ideal"


@dataclass(frozen=True)
class Witness:
    """A generator pair (0-based positions) sharing only `index`."""
    first: int
    second: int
    index: int


@dataclass(frozen=True)
class PreconditionFailure:
    kind: PreconditionKind
    generators: tuple[int, ...]
    index: Optional[int] = None

    def describe(self, ideal: MonomialIdeal) -> str:
        gens = [str(ideal.gens[j]) for j in self.generators]
        if self.kind is PreconditionKind.BOOLEAN_DIVISIBLE:
            return f"x{self.index}*y{self.index} divides {gens[0]}"
        if self.kind is PreconditionKind.DIVISOR_PAIR:
            return f"{gens[0]} divides {gens[1]}"
        return "the ideal is the unit ideal"


@dataclass(frozen=True)
class CanonicityVerdict:
    canonical: bool
    witness: Optional[Witness] = None
    precondition_failure: Optional[PreconditionFailure] = None

    @property
    def hypotheses_met(self) -> bool:
        return self.precondition_failure is None


def _precondition_failure(a: MonomialIdeal) -> Optional[PreconditionFailure]:
    if a.is_unit():
        return PreconditionFailure(PreconditionKind.UNIT_IDEAL, ())

    for j, g in enumerate(a.gens):
        if g.boolean_mask:
            return PreconditionFailure(PreconditionKind.BOOLEAN_DIVISIBLE, (j,), lowest_index(g.boolean_mask))

    for j1, j2 in combinations(range(len(a.gens)), 2):
        g, h = a.gens[j1], a.gens[j2]
        # Duplicates count as a divisor pair
        if divides(g, h):
            return PreconditionFailure(PreconditionKind.DIVISOR_PAIR, (j1, j2))
        if divides(h, g):
            return PreconditionFailure(PreconditionKind.DIVISOR_PAIR, (j2, j1))
    return None


def is_canonical(a: MonomialIdeal) -> CanonicityVerdict:
    """Decide canonicity without computing the canonical form.

    Hypothesis violations (a Boolean-divisible generator, a generator
    dividing another, the unit ideal) are reported in the verdict with
    canonical=False. The witness is the first failing pair in
    lexicographic order of generator positions.
    """
    failure = _precondition_failure(a)
    if failure is not None:
        logger.debug("hypotheses not met: %s", failure.kind.value)
        return CanonicityVerdict(canonical=False, precondition_failure=failure)

    gens = a.gens
    for j1, j2 in combinations(range(len(gens)), 2):
        shared = shared_mask(gens[j1], gens[j2])
        if not shared or shared & (shared - 1):
            continue

        i = lowest_index(shared)
        g, h = gens[j1], gens[j2]
        candidate = strip_index(lcm_sf(g, h), i)
        covered = any(
            divides(f, candidate)
            for j, f in enumerate(gens)
            if j not in (j1, j2)
        )
        if not covered:
            return CanonicityVerdict(canonical=False, witness=Witness(j1, j2, i))

    return CanonicityVerdict(canonical=True)


def shortcut_index_list(a: MonomialIdeal) -> list[int]:
    """Indices some generator pair shares alone, ascending."""
    return list(indices_of(shortcut_indices(a.gens)))
