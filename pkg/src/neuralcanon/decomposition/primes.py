"""Primary decomposition of squarefree monomial ideals.

A squarefree monomial ideal has no embedded primes, so its decomposition is
the set of its minimal primes, each generated by variables. Internally a
monomial or a prime over x_1..x_n, y_1..y_n is one 2n-bit word: x_i in bit
i-1 and y_i in bit n+i-1.
"""

import logging
from functools import lru_cache
from typing import Iterable, Optional

from ..core.errors import WidthMismatchError
from ..core.models import MonomialIdeal, MonomialPrime, SfMonomial, mask_of, prime_sort_key, sort_key

logger = logging.getLogger(__name__)

STRATEGIES = ("split", "transversal")


def _pack(n: int, xs: int, ys: int) -> int:
    return xs | (ys << n)


def _unpack(n: int, word: int) -> tuple[int, int]:
    low = (1 << n) - 1
    return word & low, word >> n


def _bits(word: int) -> list[int]:
    out = []
    while word:
        low = word & -word
        out.append(low)
        word ^= low
    return out


def _minimal_words(words: Iterable[int]) -> list[int]:
    """Words with no proper sub-word among the others (set containment order)."""
    kept: list[int] = []
    for w in sorted(set(words), key=lambda w: (w.bit_count(), w)):
        if not any(k & w == k for k in kept):
            kept.append(w)
    return kept


@lru_cache(maxsize=65536)
def _split_primes(gens: tuple[int, ...]) -> frozenset[int]:
    """Minimal primes by repeatedly splitting a generator into its variables.

    (m1*m2, rest) = (m1, rest) ∩ (m2, rest) for coprime m1, m2; once every
    generator is a single variable the ideal is itself prime.
    """
    if not gens:
        # The zero ideal is prime
        return frozenset({0})

    widest = max(gens, key=lambda g: g.bit_count())
    if widest.bit_count() == 1:
        prime = 0
        for g in gens:
            prime |= g
        return frozenset({prime})

    found: set[int] = set()
    for var in _bits(widest):
        branch = [h for h in gens if h != widest and not h & var]
        branch.append(var)
        found.update(_split_primes(tuple(sorted(branch))))

    return frozenset(_minimal_words(found))


def _transversal_primes(gens: tuple[int, ...]) -> frozenset[int]:
    """Minimal primes as minimal transversals of the support hypergraph (Berge)."""
    transversals = [0]
    for edge in gens:
        grown: set[int] = set()
        for t in transversals:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | var for var in _bits(edge))
        transversals = _minimal_words(grown)
    return frozenset(transversals)


def minimal_primes(a: MonomialIdeal, strategy: str = "split") -> frozenset[MonomialPrime]:
    """Compute the minimal primes of a squarefree monomial ideal.

    Args:
        a: The ideal; any generator list, duplicates and multiples allowed
        strategy: "split" (generator splitting, memoized) or "transversal"

    Returns:
        The unique set of minimal primes. The unit ideal has none (the empty
        intersection), the zero ideal has the single prime (0).
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown decomposition strategy {strategy!r}")

    if a.is_unit():
        logger.debug("unit ideal has no minimal primes")
        return frozenset()

    key = tuple(_minimal_words(_pack(a.n, g.xs, g.ys) for g in a.gens))
    if strategy == "split":
        words = _split_primes(key)
    else:
        words = _transversal_primes(key)

    logger.debug("decomposed %d generators into %d primes (%s)", len(key), len(words), strategy)
    return frozenset(MonomialPrime(a.n, *_unpack(a.n, w)) for w in words)


def sorted_primes(primes: Iterable[MonomialPrime]) -> list[MonomialPrime]:
    return sorted(primes, key=prime_sort_key)


def intersect_primes(primes: Iterable[MonomialPrime], n: Optional[int] = None) -> MonomialIdeal:
    """Intersect monomial primes back into a minimal generating set.

    Every generator of the intersection is an lcm of one variable chosen from
    each prime. The choices are folded in prime by prime, keeping only the
    divisibility-minimal frontier.

    Args:
        primes: Primes over a common width
        n: Width; required when primes is empty (result is the unit ideal)
    """
    primes = sorted_primes(primes)
    if n is None:
        if not primes:
            raise ValueError("width n is required to intersect an empty list of primes")
        n = primes[0].n
    for p in primes:
        if p.n != n:
            raise WidthMismatchError(n, p.n)

    frontier = [0]
    for p in primes:
        word = _pack(n, p.xs, p.ys)
        variables = _bits(word)
        grown: set[int] = set()
        for f in frontier:
            if f & word:
                # f already lies in p
                grown.add(f)
            else:
                grown.update(f | var for var in variables)
        frontier = _minimal_words(grown)

    gens = [SfMonomial(n, *_unpack(n, w)) for w in frontier]
    return MonomialIdeal(n, tuple(sorted(gens, key=sort_key)))


def drop_boolean_primes(primes: Iterable[MonomialPrime], indices: Iterable[int]) -> frozenset[MonomialPrime]:
    """Remove every prime containing both x_i and y_i for some i in indices."""
    mask = mask_of(indices)
    return frozenset(p for p in primes if not p.pair_mask & mask)
