"""Divisibility, LCM, shared indices and polarization of squarefree monomials."""

from typing import Iterable

from .errors import BooleanDivisibleError, WidthMismatchError
from .models import Pseudomonomial, SfMonomial, indices_of, lowest_index, sort_key


def _same_width(a, b) -> None:
    if a.n != b.n:
        raise WidthMismatchError(a.n, b.n)


def lcm_sf(a: SfMonomial, b: SfMonomial) -> SfMonomial:
    """Least common multiple: the union of the supports."""
    _same_width(a, b)
    return SfMonomial(a.n, a.xs | b.xs, a.ys | b.ys)


def lcm_all(monomials: Iterable[SfMonomial], n: int) -> SfMonomial:
    """LCM of any number of monomials; the empty LCM is 1."""
    xs = ys = 0
    for m in monomials:
        if m.n != n:
            raise WidthMismatchError(n, m.n)
        xs |= m.xs
        ys |= m.ys
    return SfMonomial(n, xs, ys)


def divides(a: SfMonomial, b: SfMonomial) -> bool:
    """True iff a | b, i.e. both supports of a are contained in those of b."""
    _same_width(a, b)
    return not (a.xs & ~b.xs) and not (a.ys & ~b.ys)


def shared_mask(a: SfMonomial, b: SfMonomial) -> int:
    """Bitmask form of shared_indices."""
    _same_width(a, b)
    return (a.xs & b.ys) | (a.ys & b.xs)


def shared_indices(a: SfMonomial, b: SfMonomial) -> frozenset[int]:
    """Indices i with x_i dividing one monomial and y_i dividing the other.

    A monomial divisible by x_i*y_i does not share i with itself through that
    factor alone; against a different monomial the usual rule applies.
    """
    return frozenset(indices_of(shared_mask(a, b)))


def boolean_indices(g: SfMonomial) -> frozenset[int]:
    """Indices i with x_i*y_i dividing g."""
    return frozenset(indices_of(g.xs & g.ys))


def is_boolean_free(g: SfMonomial) -> bool:
    return g.is_boolean_free()


def strip_index(g: SfMonomial, i: int) -> SfMonomial:
    """g with the factors x_i and y_i removed."""
    bit = 1 << (i - 1)
    return SfMonomial(g.n, g.xs & ~bit, g.ys & ~bit)


def polarize(f: Pseudomonomial) -> SfMonomial:
    """Replace every (1 - x_i) factor by y_i."""
    return SfMonomial(f.n, f.xs, f.negs)


def depolarize(g: SfMonomial) -> Pseudomonomial:
    """Send y_i back to (1 - x_i).

    Raises:
        BooleanDivisibleError: if x_i*y_i divides g; names the lowest such i.
    """
    overlap = g.xs & g.ys
    if overlap:
        raise BooleanDivisibleError(lowest_index(overlap), str(g))
    return Pseudomonomial(g.n, g.xs, g.ys)


def minimalize(monomials: Iterable[SfMonomial]) -> list[SfMonomial]:
    """Divisibility-minimal elements, deduplicated, in presentation order."""
    # Sorting by degree first means every divisor is seen before its multiples
    ordered = sorted(set(monomials), key=sort_key)
    kept: list[SfMonomial] = []
    for m in ordered:
        if not any(not (k.xs & ~m.xs) and not (k.ys & ~m.ys) for k in kept):
            kept.append(m)
    return kept
