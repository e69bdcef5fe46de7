"""Seeded random monomials and ideals for benchmarks and randomized checks."""

from typing import Optional, Sequence

import numpy as np

from .models import MonomialIdeal, SfMonomial
from .monomial import minimalize


def random_monomial(rng: np.random.Generator, n: int, density: float = 0.35) -> SfMonomial:
    """A Boolean-free monomial: each index is absent, x_i or y_i.

    Args:
        rng: numpy random generator
        n: Ambient width
        density: Probability that an index appears at all
    """
    present = rng.random(n) < density
    as_y = rng.random(n) < 0.5
    xs = ys = 0
    for i in range(n):
        if present[i]:
            if as_y[i]:
                ys |= 1 << i
            else:
                xs |= 1 << i
    return SfMonomial(n, xs, ys)


def random_ideal(
    rng: np.random.Generator,
    n: int,
    max_gens: int,
    min_gens: int = 1,
    density: float = 0.35,
    reduced: bool = True,
) -> MonomialIdeal:
    """A random polarized neural ideal with no generator equal to 1.

    Args:
        reduced: Drop duplicates and multiples of other generators
    """
    count = int(rng.integers(min_gens, max_gens + 1))
    gens: list[SfMonomial] = []
    while len(gens) < count:
        g = random_monomial(rng, n, density)
        if not g.is_one():
            gens.append(g)
    if reduced:
        gens = minimalize(gens)
    return MonomialIdeal(n, tuple(gens))


def random_polarized_monomial(
    rng: np.random.Generator,
    n: int,
    indices: Sequence[int],
    y_side: Optional[set[int]] = None,
    density: float = 0.5,
) -> SfMonomial:
    """A monomial over the given indices with a fixed side per index.

    Indices in y_side appear as y_i, the rest as x_i, so monomials drawn
    with the same y_side never share an index.
    """
    y_side = y_side or set()
    xs = ys = 0
    for i in indices:
        if rng.random() < density:
            if i in y_side:
                ys |= 1 << (i - 1)
            else:
                xs |= 1 << (i - 1)
    return SfMonomial(n, xs, ys)
