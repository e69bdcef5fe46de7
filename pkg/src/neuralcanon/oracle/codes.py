"""Brute-force ground truth through binary codes.

Codewords are bit-packed integers, bit i-1 holding neuron i. The canonical
form of a code is found by tabulating all 3^n pseudomonomials in one numpy
array with one axis per neuron (0 = absent, 1 = x_i, 2 = 1-x_i) and
keeping the vanishing entries that no single-factor deletion keeps vanishing.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from ..core.config import ORACLE_HARD_LIMIT
from ..core.errors import BooleanDivisibleError, DomainError, WidthMismatchError
from ..core.models import MonomialIdeal, Pseudomonomial, SfMonomial, lowest_index, sort_key
from ..core.parser import format_word, parse_code_text

logger = logging.getLogger(__name__)

Word = Union[int, Sequence[int]]


def _pack_word(v: Word, n: int) -> int:
    if isinstance(v, (int, np.integer)):
        v = int(v)
        if v < 0 or v >> n:
            raise ValueError(f"word {v:#x} does not fit in {n} bits")
        return v
    if len(v) != n:
        raise WidthMismatchError(n, len(v))
    word = 0
    for i, bit in enumerate(v):
        if bit not in (0, 1):
            raise ValueError(f"codeword entries must be 0 or 1, got {bit!r}")
        word |= bit << i
    return word


@dataclass(frozen=True)
class NeuralCode:
    """A set of length-n binary words."""
    n: int
    words: frozenset[int]

    @classmethod
    def from_words(cls, n: int, words: Iterable[Word]) -> "NeuralCode":
        """Build a code from bit-packed ints or 0/1 sequences (first entry is neuron 1)."""
        return cls(n, frozenset(_pack_word(v, n) for v in words))

    @classmethod
    def from_text(cls, text: str) -> "NeuralCode":
        n, words = parse_code_text(text)
        return cls(n, frozenset(words))

    @classmethod
    def full(cls, n: int) -> "NeuralCode":
        return cls(n, frozenset(range(1 << n)))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, v: Word) -> bool:
        return _pack_word(v, self.n) in self.words

    def is_empty(self) -> bool:
        return not self.words

    def is_full(self) -> bool:
        return len(self.words) == 1 << self.n

    def sorted_words(self) -> list[int]:
        return sorted(self.words)

    def __str__(self) -> str:
        return "\n".join(format_word(w, self.n) for w in self.sorted_words())


def evaluate(f: Pseudomonomial, v: Word) -> int:
    """Value of prod x_i prod (1-x_i) at the 0/1 point v."""
    word = _pack_word(v, f.n)
    return int((word & f.xs) == f.xs and not word & f.negs)


def _check_cap(n: int, max_n: int) -> None:
    if n > max_n:
        raise DomainError(f"oracle refuses n={n}: the limit is {max_n} (hard limit {ORACLE_HARD_LIMIT})")


def code_of_ideal(a: MonomialIdeal, max_n: int = ORACLE_HARD_LIMIT) -> NeuralCode:
    """All points of {0,1}^n where every depolarized generator vanishes.

    Raises:
        BooleanDivisibleError: if some generator is divisible by x_i*y_i
        DomainError: if n exceeds max_n
    """
    _check_cap(a.n, max_n)
    for g in a.gens:
        if g.boolean_mask:
            raise BooleanDivisibleError(lowest_index(g.boolean_mask), str(g))

    words = np.arange(1 << a.n, dtype=np.int64)
    alive = np.ones(words.shape, dtype=bool)
    for g in a.gens:
        alive &= ~(((words & g.xs) == g.xs) & ((words & g.ys) == 0))

    code = NeuralCode(a.n, frozenset(int(w) for w in words[alive]))
    logger.debug("ideal with %d generators has %d codewords over n=%d", len(a), len(code), a.n)
    return code


def _axis_slice(n: int, axis: int, digit: int) -> tuple:
    index: list = [slice(None)] * n
    index[axis] = digit
    return tuple(index)


def oracle_canonical(c: NeuralCode, max_n: int = ORACLE_HARD_LIMIT) -> MonomialIdeal:
    """Divisibility-minimal pseudomonomials vanishing on c, polarized.

    Raises:
        DomainError: if c is empty or n exceeds max_n
    """
    if c.is_empty():
        raise DomainError("degenerate code: every pseudomonomial vanishes on the empty code")
    _check_cap(c.n, max_n)
    n = c.n
    logger.debug("oracle over n=%d: %d candidates, %d codewords", n, 3 ** n, len(c))

    words = np.fromiter(c.sorted_words(), dtype=np.int64, count=len(c))
    # hit[p] is True when some codeword satisfies the pseudomonomial p
    hit = np.zeros((3,) * n, dtype=bool)
    hit[tuple(np.where((words >> axis) & 1, 1, 2) for axis in range(n))] = True
    for axis in range(n):
        hit[_axis_slice(n, axis, 0)] = hit[_axis_slice(n, axis, 1)] | hit[_axis_slice(n, axis, 2)]

    vanish = ~hit
    minimal = vanish.copy()
    for axis in range(n):
        dropped = vanish[_axis_slice(n, axis, 0)]
        for digit in (1, 2):
            minimal[_axis_slice(n, axis, digit)] &= ~dropped

    gens = []
    for digits in np.argwhere(minimal):
        xs = ys = 0
        for axis, digit in enumerate(digits):
            if digit == 1:
                xs |= 1 << axis
            elif digit == 2:
                ys |= 1 << axis
        gens.append(SfMonomial(n, xs, ys))
    return MonomialIdeal(n, tuple(sorted(gens, key=sort_key)))


def ideal_of_code(c: NeuralCode, max_n: int = ORACLE_HARD_LIMIT) -> MonomialIdeal:
    """The indicator monomials of the non-codewords.

    The indicator of v has x-support where v_i = 1 and y-support where v_i = 0.
    """
    _check_cap(c.n, max_n)
    everything = (1 << c.n) - 1
    gens = [
        SfMonomial(c.n, v, everything & ~v)
        for v in range(1 << c.n)
        if v not in c.words
    ]
    return MonomialIdeal(c.n, tuple(sorted(gens, key=sort_key)))
