"""Closed-form canonical forms of two-generator neural ideals."""

from dataclasses import dataclass
from enum import Enum

from ..core.errors import BooleanDivisibleError, DomainError
from ..core.models import MonomialIdeal, SfMonomial, lowest_index, sort_key
from ..core.monomial import divides, lcm_sf, shared_mask, strip_index


class TwoGenCaseTag(str, Enum):
    NO_SHARED = "NO_SHARED"
    MULTI_SHARED_SAME_SIDE = "MULTI_SHARED_SAME_SIDE"
    MULTI_SHARED_MIXED = "MULTI_SHARED_MIXED"
    ONE_SHARED_4a = "ONE_SHARED_4a"
    ONE_SHARED_4b = "ONE_SHARED_4b"
    ONE_SHARED_4c = "ONE_SHARED_4c"
    ONE_SHARED_4d = "ONE_SHARED_4d"


@dataclass(frozen=True)
class TwoGenCase:
    case_tag: TwoGenCaseTag
    canonical_form: MonomialIdeal


def _ideal(n: int, *gens: SfMonomial) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(sorted(set(gens), key=sort_key)))


def classify_two_gen(a: MonomialIdeal) -> TwoGenCase:
    """Classify (g, h) by its shared indices and emit the closed-form canonical ideal.

    Only a single shared index changes anything. Writing the pair as
    (x_i*g1, y_i*g2), the canonical form is (x_i*g1, y_i*g2, lcm(g1, g2))
    minus whichever of those the lcm makes redundant.

    Raises:
        DomainError: unless a has exactly two generators, neither dividing the other
        BooleanDivisibleError: if a generator is divisible by some x_i*y_i
    """
    if len(a.gens) != 2:
        raise DomainError(f"expected exactly 2 generators, got {len(a.gens)}")

    g, h = a.gens
    for m in (g, h):
        if m.boolean_mask:
            raise BooleanDivisibleError(lowest_index(m.boolean_mask), str(m))
    if divides(g, h) or divides(h, g):
        raise DomainError("one generator divides the other")

    shared = shared_mask(g, h)
    if not shared:
        return TwoGenCase(TwoGenCaseTag.NO_SHARED, _ideal(a.n, g, h))

    if shared & (shared - 1):
        # All shared x's on one side means every pair (x_i, y_i) is split the same way
        same_side = (g.xs & h.ys) == shared or (g.ys & h.xs) == shared
        tag = TwoGenCaseTag.MULTI_SHARED_SAME_SIDE if same_side else TwoGenCaseTag.MULTI_SHARED_MIXED
        return TwoGenCase(tag, _ideal(a.n, g, h))

    i = lowest_index(shared)
    bit = 1 << (i - 1)
    # Orient so the first generator carries x_i
    if not g.xs & bit:
        g, h = h, g
    g1, g2 = strip_index(g, i), strip_index(h, i)
    product = lcm_sf(g1, g2)

    if g1 == g2:
        return TwoGenCase(TwoGenCaseTag.ONE_SHARED_4d, _ideal(a.n, g1))
    if product == g2:
        return TwoGenCase(TwoGenCaseTag.ONE_SHARED_4b, _ideal(a.n, g, g2))
    if product == g1:
        return TwoGenCase(TwoGenCaseTag.ONE_SHARED_4c, _ideal(a.n, g1, h))
    return TwoGenCase(TwoGenCaseTag.ONE_SHARED_4a, _ideal(a.n, g, h, product))
