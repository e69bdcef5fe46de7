"""Shared builders and hypothesis strategies for the test suite."""

import hypothesis.strategies as st

from neuralcanon.core.models import MonomialIdeal, SfMonomial
from neuralcanon.core.parser import parse_monomial


def mono(text: str, n: int) -> SfMonomial:
    return parse_monomial(text, n)


def ideal(n: int, *texts: str) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(parse_monomial(t, n) for t in texts))


def gens_of(n: int, *texts: str) -> frozenset[SfMonomial]:
    return frozenset(parse_monomial(t, n) for t in texts)


def monomial_from_digits(n: int, digits: list[int]) -> SfMonomial:
    """Digit i is 0 (absent), 1 (x_{i+1}) or 2 (y_{i+1})."""
    xs = ys = 0
    for i, d in enumerate(digits):
        if d == 1:
            xs |= 1 << i
        elif d == 2:
            ys |= 1 << i
    return SfMonomial(n, xs, ys)


def boolean_free_monomials(n: int):
    return st.lists(st.integers(0, 2), min_size=n, max_size=n).map(lambda d: monomial_from_digits(n, d))


def any_monomials(n: int):
    """Squarefree monomials that may be divisible by x_i*y_i."""
    full = (1 << n) - 1
    return st.builds(lambda xs, ys: SfMonomial(n, xs, ys), st.integers(0, full), st.integers(0, full))


@st.composite
def neural_ideals(draw, max_n: int = 5, max_gens: int = 4):
    """Boolean-free ideals with no generator equal to 1."""
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(
        boolean_free_monomials(n).filter(lambda g: not g.is_one()),
        min_size=1,
        max_size=max_gens,
    ))
    return MonomialIdeal(n, tuple(gens))
