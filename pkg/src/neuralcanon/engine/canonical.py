"""Canonical forms of polarized neural ideals.

Two independent routes to the same answer:

- canonical_full decomposes the ideal into minimal primes, drops the primes
  containing a pair (x_i, y_i), intersects the rest and reduces.
- canonical_fast never decomposes. For every index i that some generator
  pair shares alone, it appends lcm(g, h)/(x_i*y_i) for each pair sharing
  only i, then reduces.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from ..core.errors import DomainError
from ..core.models import MonomialIdeal, SfMonomial, indices_of, sort_key
from ..core.monomial import minimalize, shared_mask, strip_index
from ..decomposition.primes import drop_boolean_primes, intersect_primes, minimal_primes

logger = logging.getLogger(__name__)

CANONICAL_STRATEGIES = ("fast", "full")


@dataclass
class CanonicalResult:
    """Canonical form of an ideal plus what changed relative to the input."""
    canonical: MonomialIdeal
    was_already_canonical: bool
    indices_processed: frozenset[int]
    added: list[SfMonomial] = field(default_factory=list)
    removed: list[SfMonomial] = field(default_factory=list)
    strategy: str = "full"


def reduce(a: MonomialIdeal) -> MonomialIdeal:
    """Drop Boolean-divisible generators, duplicates and multiples of other generators.

    The result is sorted in presentation order; reduce is idempotent.
    """
    kept = minimalize(g for g in a.gens if g.is_boolean_free())
    return MonomialIdeal(a.n, tuple(kept))


def recompose(a: MonomialIdeal, indices: Iterable[int], decomposition: str = "split") -> MonomialIdeal:
    """Intersect the minimal primes of a that contain no pair (x_i, y_i), i in indices."""
    primes = drop_boolean_primes(minimal_primes(a, decomposition), indices)
    return intersect_primes(primes, n=a.n)


def _neural_generators(a: MonomialIdeal) -> list[SfMonomial]:
    """Boolean-free generators of a, in input order without duplicates.

    Raises:
        DomainError: if a is the unit ideal
    """
    if a.is_unit():
        raise DomainError("the unit ideal is not a neural ideal")

    gens = list(dict.fromkeys(g for g in a.gens if g.is_boolean_free()))
    stripped = len(set(a.gens)) - len(gens)
    if stripped:
        logger.debug("stripped %d Boolean-divisible generators", stripped)
    return gens


def _result(a: MonomialIdeal, canonical: MonomialIdeal, indices: int, strategy: str) -> CanonicalResult:
    before = set(a.gens)
    after = set(canonical.gens)
    return CanonicalResult(
        canonical=canonical,
        was_already_canonical=before == after,
        indices_processed=frozenset(indices_of(indices)),
        added=sorted(after - before, key=sort_key),
        removed=sorted(before - after, key=sort_key),
        strategy=strategy,
    )


def canonical_full(a: MonomialIdeal, decomposition: str = "split") -> CanonicalResult:
    """Canonical form through primary decomposition.

    Args:
        a: A polarized neural ideal; Boolean-divisible generators are stripped
        decomposition: Minimal-prime strategy, "split" or "transversal"

    Returns:
        CanonicalResult whose canonical ideal is reduce(recompose(a, {1..n}))

    Raises:
        DomainError: if a is the unit ideal
    """
    gens = _neural_generators(a)
    everything = (1 << a.n) - 1
    recomposed = recompose(a.with_gens(gens), indices_of(everything), decomposition)
    return _result(a, reduce(recomposed), everything, "full")


def shortcut_indices(gens: Sequence[SfMonomial]) -> int:
    """Mask of indices i such that some pair of generators shares only i."""
    mask = 0
    for g, h in combinations(gens, 2):
        shared = shared_mask(g, h)
        if shared and not shared & (shared - 1):
            mask |= shared
    return mask


def recompose_one_index(gens: Sequence[SfMonomial], i: int) -> list[SfMonomial]:
    """Recompose with respect to the single index i without decomposing.

    Appends lcm(g, h)/(x_i*y_i) for every generator pair sharing only the
    index i. Pairs sharing further indices would only contribute
    Boolean-divisible monomials and are skipped.
    """
    bit = 1 << (i - 1)
    with_x = [g for g in gens if g.xs & bit]
    with_y = [h for h in gens if h.ys & bit]

    out = list(dict.fromkeys(gens))
    seen = set(out)
    for g in with_x:
        for h in with_y:
            if shared_mask(g, h) != bit:
                continue
            m = strip_index(SfMonomial(g.n, g.xs | h.xs, g.ys | h.ys), i)
            if m not in seen:
                seen.add(m)
                out.append(m)
    return out


def _expand_shortcut(gens: list[SfMonomial], eager_reduce: bool) -> tuple[list[SfMonomial], int]:
    indices = shortcut_indices(gens)
    logger.debug("shortcut indices: %s", list(indices_of(indices)))

    for i in indices_of(indices):
        before = len(gens)
        gens = recompose_one_index(gens, i)
        logger.debug("index %d: %d generators added", i, len(gens) - before)
        if eager_reduce:
            gens = minimalize(gens)
    return gens, indices


def canonical_fast(a: MonomialIdeal) -> CanonicalResult:
    """Canonical form by recomposing only at indices some pair shares alone.

    Indices are taken from the reduced input and processed in ascending
    order; generators added at one index take part in the pair scan of the
    later indices.

    Raises:
        DomainError: if a is the unit ideal
    """
    gens = minimalize(_neural_generators(a))
    gens, indices = _expand_shortcut(gens, eager_reduce=True)
    return _result(a, reduce(a.with_gens(gens)), indices, "fast")


def almost_canonical(a: MonomialIdeal) -> MonomialIdeal:
    """The recomposed ideal with Boolean-divisible generators removed.

    Generators that are multiples of other generators are kept: the
    presentation is the input generators followed by every lcm added during
    one-index recomposition.

    Raises:
        DomainError: if a is the unit ideal
    """
    gens, _ = _expand_shortcut(_neural_generators(a), eager_reduce=False)
    return MonomialIdeal(a.n, tuple(sorted(gens, key=sort_key)))


def canonical_form(a: MonomialIdeal, strategy: str = "fast", decomposition: str = "split") -> CanonicalResult:
    """Dispatch to canonical_fast or canonical_full."""
    if strategy == "fast":
        return canonical_fast(a)
    if strategy == "full":
        return canonical_full(a, decomposition)
    raise ValueError(f"unknown canonical form strategy {strategy!r}")


def shared_index_components(a: MonomialIdeal) -> list[list[SfMonomial]]:
    """Group generators so that no index is shared across groups.

    Returns:
        Groups in order of their first generator; each group keeps input order
    """
    gens = list(dict.fromkeys(a.gens))
    G = nx.Graph()
    G.add_nodes_from(range(len(gens)))
    for j1, j2 in combinations(range(len(gens)), 2):
        if shared_mask(gens[j1], gens[j2]):
            G.add_edge(j1, j2)

    components = sorted((sorted(c) for c in nx.connected_components(G)), key=lambda c: c[0])
    return [[gens[j] for j in c] for c in components]


def canonical_by_components(a: MonomialIdeal, strategy: str = "fast") -> MonomialIdeal:
    """Canonical form assembled from the canonical forms of independent groups.

    Groups sharing no index recompose independently, so the canonical form
    of the whole is the reduced sum of the group canonical forms.
    """
    pieces: list[SfMonomial] = []
    groups = shared_index_components(a)
    logger.debug("%d independent generator groups", len(groups))
    for group in groups:
        pieces.extend(canonical_form(a.with_gens(group), strategy).canonical.gens)
    return reduce(a.with_gens(pieces))
