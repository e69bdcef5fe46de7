"""Core value types for squarefree monomials over x_1..x_n, y_1..y_n.

Index sets are stored as integer bitmasks: index i lives in bit i-1, so a
monomial is two machine words (x-support and y-support) and every set
operation is word-parallel.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .errors import BooleanDivisibleError, WidthMismatchError

MAX_WIDTH = 128


class Axis(str, Enum):
    """The two variable families of the polarized ring."""
    X = "x"
    Y = "y"


def mask_of(indices: Iterable[int]) -> int:
    """Pack 1-based indices into a bitmask."""
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"index must be positive, got {i}")
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into sorted 1-based indices."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def lowest_index(mask: int) -> int:
    """Smallest index in a non-empty mask."""
    return (mask & -mask).bit_length()


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_WIDTH:
        raise ValueError(f"ambient width must lie in 1..{MAX_WIDTH}, got {n}")


def _check_mask(n: int, mask: int, label: str) -> None:
    if mask < 0 or mask >> n:
        raise ValueError(f"{label} support {indices_of(abs(mask))} exceeds width n={n}")


@dataclass(frozen=True, slots=True)
class SfMonomial:
    """A squarefree monomial prod_{i in xsupp} x_i prod_{i in ysupp} y_i.

    xsupp and ysupp may overlap: intermediate stages of recomposition carry
    monomials divisible by x_i*y_i. Use is_boolean_free() to test for that.
    """
    n: int
    xs: int = 0
    ys: int = 0

    def __post_init__(self):
        _check_width(self.n)
        _check_mask(self.n, self.xs, "x")
        _check_mask(self.n, self.ys, "y")

    @classmethod
    def from_indices(
        cls, n: int, xsupp: Iterable[int] = (), ysupp: Iterable[int] = ()
    ) -> "SfMonomial":
        return cls(n, mask_of(xsupp), mask_of(ysupp))

    @classmethod
    def one(cls, n: int) -> "SfMonomial":
        """The constant monomial 1."""
        return cls(n)

    @property
    def xsupp(self) -> frozenset[int]:
        return frozenset(indices_of(self.xs))

    @property
    def ysupp(self) -> frozenset[int]:
        return frozenset(indices_of(self.ys))

    @property
    def degree(self) -> int:
        return self.xs.bit_count() + self.ys.bit_count()

    @property
    def boolean_mask(self) -> int:
        """Indices i with x_i*y_i dividing this monomial."""
        return self.xs & self.ys

    def is_one(self) -> bool:
        return not (self.xs or self.ys)

    def is_boolean_free(self) -> bool:
        return not self.xs & self.ys

    def __str__(self) -> str:
        from .parser import format_monomial
        return format_monomial(self)


@dataclass(frozen=True, slots=True)
class Pseudomonomial:
    """A product prod_{i in xsupp} x_i prod_{i in negsupp} (1 - x_i)."""
    n: int
    xs: int = 0
    negs: int = 0

    def __post_init__(self):
        _check_width(self.n)
        _check_mask(self.n, self.xs, "x")
        _check_mask(self.n, self.negs, "(1-x)")
        overlap = self.xs & self.negs
        if overlap:
            raise BooleanDivisibleError(lowest_index(overlap))

    @classmethod
    def from_indices(
        cls, n: int, xsupp: Iterable[int] = (), negsupp: Iterable[int] = ()
    ) -> "Pseudomonomial":
        return cls(n, mask_of(xsupp), mask_of(negsupp))

    @property
    def xsupp(self) -> frozenset[int]:
        return frozenset(indices_of(self.xs))

    @property
    def negsupp(self) -> frozenset[int]:
        return frozenset(indices_of(self.negs))

    @property
    def degree(self) -> int:
        return self.xs.bit_count() + self.negs.bit_count()

    def __str__(self) -> str:
        from .parser import format_pseudomonomial
        return format_pseudomonomial(self)


def sort_key(g: SfMonomial) -> tuple:
    """Presentation order: total degree, then lexicographic support."""
    return (g.degree, indices_of(g.xs), indices_of(g.ys))


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """An ideal given by an ordered list of squarefree monomial generators."""
    n: int
    gens: tuple[SfMonomial, ...] = field(default_factory=tuple)

    def __post_init__(self):
        _check_width(self.n)
        gens = tuple(self.gens)
        for g in gens:
            if g.n != self.n:
                raise WidthMismatchError(self.n, g.n)
        object.__setattr__(self, "gens", gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[SfMonomial]:
        return iter(self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    @property
    def generator_set(self) -> frozenset[SfMonomial]:
        return frozenset(self.gens)

    def same_generators(self, other: "MonomialIdeal") -> bool:
        """Set equality of generator lists (order and duplicates ignored)."""
        return self.n == other.n and self.generator_set == other.generator_set

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.gens)

    def is_boolean_free(self) -> bool:
        return all(g.is_boolean_free() for g in self.gens)

    def with_gens(self, gens: Iterable[SfMonomial]) -> "MonomialIdeal":
        return MonomialIdeal(self.n, tuple(gens))


@dataclass(frozen=True, slots=True)
class MonomialPrime:
    """A prime generated by single variables x_i (bits of xs) and y_i (bits of ys)."""
    n: int
    xs: int = 0
    ys: int = 0

    def __post_init__(self):
        _check_width(self.n)
        _check_mask(self.n, self.xs, "x")
        _check_mask(self.n, self.ys, "y")

    @property
    def pair_mask(self) -> int:
        """Indices i with both x_i and y_i among the generators."""
        return self.xs & self.ys

    def variables(self) -> list[tuple[Axis, int]]:
        """Generators as (axis, index), x-variables first."""
        return [(Axis.X, i) for i in indices_of(self.xs)] + [
            (Axis.Y, i) for i in indices_of(self.ys)
        ]

    def contains(self, g: SfMonomial) -> bool:
        """A squarefree monomial lies in the prime iff one of its variables divides it."""
        if g.n != self.n:
            raise WidthMismatchError(self.n, g.n)
        return bool((g.xs & self.xs) | (g.ys & self.ys))

    def __len__(self) -> int:
        return self.xs.bit_count() + self.ys.bit_count()

    def __str__(self) -> str:
        if not len(self):
            return "(0)"
        return "(" + ", ".join(f"{axis.value}{i}" for axis, i in self.variables()) + ")"


def prime_sort_key(p: MonomialPrime) -> tuple:
    return (len(p), indices_of(p.xs), indices_of(p.ys))
