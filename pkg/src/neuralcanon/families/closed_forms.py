"""Closed-form canonical forms of the chain, cycle and spread families.

Each family is built from structural indices 1..k plus one monomial g_j per
generator. The g_j must avoid the structural indices and share no index
with each other; under those conditions the canonical form is a fixed
pattern of lcm's of consecutive g_j, computed here without decomposing.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..core.errors import DomainError
from ..core.models import MonomialIdeal, SfMonomial, indices_of, mask_of, sort_key
from ..core.monomial import lcm_all, minimalize, shared_mask

logger = logging.getLogger(__name__)


def _check_parameters(k: int, gs: Sequence[SfMonomial], structural: int) -> int:
    """Validate the g_j against the first `structural` indices and return the width."""
    if not gs:
        raise DomainError("at least one g monomial is required")
    n = gs[0].n
    if n < structural:
        raise DomainError(f"width n={n} leaves no room for {structural} structural indices")

    reserved = (1 << structural) - 1
    for j, g in enumerate(gs, start=1):
        if g.n != n:
            raise DomainError(f"g{j} has width {g.n}, expected {n}")
        if g.boolean_mask:
            raise DomainError(f"g{j} = {g} is divisible by some x_i*y_i")
        touched = (g.xs | g.ys) & reserved
        if touched:
            raise DomainError(f"g{j} = {g} uses structural index {indices_of(touched)[0]}")

    for (j1, g), (j2, h) in combinations(enumerate(gs, start=1), 2):
        if shared_mask(g, h):
            raise DomainError(f"g{j1} and g{j2} share index {indices_of(shared_mask(g, h))[0]}")
    return n


def _x(n: int, i: int) -> SfMonomial:
    return SfMonomial(n, 1 << (i - 1), 0)


def _y(n: int, i: int) -> SfMonomial:
    return SfMonomial(n, 0, 1 << (i - 1))


def chain_ideal(k: int, gs: Sequence[SfMonomial]) -> MonomialIdeal:
    """The chain (x1*g1, x2*y1*g2, ..., x_{k-1}*y_{k-2}*g_{k-1}, y_{k-1}*g_k)."""
    if k < 1 or len(gs) != k:
        raise DomainError(f"a chain of length {k} needs k >= 1 and k g-monomials, got {len(gs)}")
    n = _check_parameters(k, gs, k - 1)

    gens = []
    for j, g in enumerate(gs, start=1):
        parts = [g]
        if j < k:
            parts.append(_x(n, j))
        if j > 1:
            parts.append(_y(n, j - 1))
        gens.append(lcm_all(parts, n))
    return MonomialIdeal(n, tuple(gens))


def chain_almost_canonical(k: int, gs: Sequence[SfMonomial]) -> MonomialIdeal:
    """Unreduced closed form of the chain: one generator per run s..e of consecutive g's.

    The run s..e contributes y_{s-1} (when s > 1) times x_e (when e < k)
    times lcm(g_s, ..., g_e), giving k(k+1)/2 generators.
    """
    ideal = chain_ideal(k, gs)
    n = ideal.n

    gens = []
    for s in range(1, k + 1):
        for e in range(s, k + 1):
            parts = list(gs[s - 1:e])
            if s > 1:
                parts.append(_y(n, s - 1))
            if e < k:
                parts.append(_x(n, e))
            gens.append(lcm_all(parts, n))
    return MonomialIdeal(n, tuple(sorted(gens, key=sort_key)))


def chain_canonical(k: int, gs: Sequence[SfMonomial]) -> MonomialIdeal:
    """Canonical form of the chain ideal.

    Collisions among the lcm's of consecutive g's are resolved by reduction
    rather than case analysis.
    """
    almost = chain_almost_canonical(k, gs)
    canonical = almost.with_gens(minimalize(almost.gens))
    logger.debug("chain k=%d: %d of %d generators survive reduction", k, len(canonical), len(almost))
    return canonical


def cycle_ideal(k: int, gs: Sequence[SfMonomial]) -> MonomialIdeal:
    """The cycle (x1*y_k*g1, x2*y1*g2, ..., x_k*y_{k-1}*g_k)."""
    if k < 3:
        raise DomainError(f"cycles need k >= 3, got {k}; two generators are a classify_two_gen case")
    if len(gs) != k:
        raise DomainError(f"a cycle of length {k} needs {k} g-monomials, got {len(gs)}")
    n = _check_parameters(k, gs, k)

    gens = []
    for i, g in enumerate(gs, start=1):
        previous = k if i == 1 else i - 1
        gens.append(lcm_all((_x(n, i), _y(n, previous), g), n))
    return MonomialIdeal(n, tuple(gens))


def cycle_canonical(k: int, gs: Sequence[SfMonomial]) -> MonomialIdeal:
    """Canonical form of the cycle ideal.

    For every start j and run length 1 <= L < k it holds
    x_{j+L} * y_j * lcm(g_{j+1}, ..., g_{j+L}), indices taken cyclically.
    Each generator carries a distinct pair x_a*y_b, so nothing is reduced.
    """
    ideal = cycle_ideal(k, gs)
    n = ideal.n

    gens = []
    for j in range(1, k + 1):
        for length in range(1, k):
            run = [gs[(j + t - 1) % k] for t in range(1, length + 1)]
            end = (j + length - 1) % k + 1
            gens.append(lcm_all(run + [_x(n, end), _y(n, j)], n))
    return MonomialIdeal(n, tuple(sorted(gens, key=sort_key)))


@dataclass(frozen=True)
class SpreadShape:
    """x_1*...*x_k*g split against y-blocks y_B*g_B partitioning 1..k.

    Blocks of size one may sit anywhere in the partition. With flipped set
    the roles of x and y are exchanged on the structural indices.
    """
    k: int
    blocks: tuple[tuple[int, ...], ...]
    flipped: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"spread width must be positive, got {self.k}")
        seen: list[int] = []
        for block in self.blocks:
            if not block:
                raise DomainError("spread blocks must be nonempty")
            seen.extend(block)
        if sorted(seen) != list(range(1, self.k + 1)):
            raise DomainError(f"blocks {self.blocks} do not partition 1..{self.k}")

    @property
    def singletons(self) -> list[int]:
        """Positions (0-based) of the blocks of size one."""
        return [b for b, block in enumerate(self.blocks) if len(block) == 1]

    def full(self, n: int, mask: int) -> SfMonomial:
        """The product of the x's (y's when flipped) over mask."""
        return SfMonomial(n, 0, mask) if self.flipped else SfMonomial(n, mask, 0)

    def block(self, n: int, mask: int) -> SfMonomial:
        return SfMonomial(n, mask, 0) if self.flipped else SfMonomial(n, 0, mask)


def spread_ideal(shape: SpreadShape, g: SfMonomial, gs: Sequence[SfMonomial]) -> MonomialIdeal:
    """The spread (x_1*...*x_k*g, y_B*g_B for each block B)."""
    if len(gs) != len(shape.blocks):
        raise DomainError(f"{len(shape.blocks)} blocks need as many g-monomials, got {len(gs)}")
    n = _check_parameters(shape.k, [g, *gs], shape.k)

    gens = [lcm_all((shape.full(n, mask_of(range(1, shape.k + 1))), g), n)]
    for block, gb in zip(shape.blocks, gs):
        gens.append(lcm_all((shape.block(n, mask_of(block)), gb), n))
    return MonomialIdeal(n, tuple(gens))


def spread_canonical(shape: SpreadShape, g: SfMonomial, gs: Sequence[SfMonomial]) -> MonomialIdeal:
    """Canonical form of the spread ideal.

    Every subset S of the singleton blocks contributes the x-generator with
    the indices of S removed and lcm(g, g_b for b in S) in their place; the
    block generators are kept. Blocks of size two or more share at least
    two indices with every such generator and contribute nothing. Without
    singleton blocks the ideal is already canonical.
    """
    ideal = spread_ideal(shape, g, gs)
    n = ideal.n
    everything = mask_of(range(1, shape.k + 1))
    singletons = shape.singletons

    gens = list(ideal.gens[1:])
    for size in range(len(singletons) + 1):
        for chosen in combinations(singletons, size):
            removed = mask_of(shape.blocks[b][0] for b in chosen)
            parts = [shape.full(n, everything & ~removed), g] + [gs[b] for b in chosen]
            gens.append(lcm_all(parts, n))

    logger.debug("spread k=%d with %d singleton blocks: %d generators before reduction",
                 shape.k, len(singletons), len(gens))
    return ideal.with_gens(minimalize(gens))
