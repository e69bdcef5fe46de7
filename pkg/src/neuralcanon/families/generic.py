"""Generic canonical forms over placeholder variables z_1..z_k.

A placeholder z_j stands for an arbitrary monomial g_j that touches no
shared index. The engine runs on the ring extended by the z's, embedded as
extra x-variables x_{n+1}..x_{n+k} that never receive a y-partner, so the
Boolean relations x_i*y_i never touch them. Concrete canonical forms are
then recovered by substitution.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from ..core.errors import DomainError, InvalidSubstitutionError
from ..core.models import MAX_WIDTH, MonomialIdeal, SfMonomial, indices_of, lowest_index, sort_key
from ..core.monomial import lcm_all, minimalize
from ..core.parser import monomial_from_factors, scan_ideal_text
from ..engine.canonical import almost_canonical, canonical_full

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ExtMonomial:
    """A monomial base * prod_{j in zsupp} z_j of the extended ring."""
    base: SfMonomial
    zs: int = 0

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def zsupp(self) -> frozenset[int]:
        return frozenset(indices_of(self.zs))

    def __str__(self) -> str:
        zpart = [f"z{j}" for j in indices_of(self.zs)]
        if not zpart:
            return str(self.base)
        if self.base.is_one():
            return "*".join(zpart)
        return "*".join([str(self.base)] + zpart)


def _ext_key(g: ExtMonomial) -> tuple:
    return (g.base.degree + g.zs.bit_count(),) + sort_key(g.base)[1:] + (indices_of(g.zs),)


@dataclass(frozen=True, slots=True)
class ExtIdeal:
    """An ideal of S[z_1..z_k] generated by extended monomials."""
    n: int
    k: int
    gens: tuple[ExtMonomial, ...] = field(default_factory=tuple)

    def __post_init__(self):
        gens = tuple(self.gens)
        if self.k < 0 or self.n + self.k > MAX_WIDTH:
            raise DomainError(f"cannot extend width {self.n} by {self.k} placeholders")
        for g in gens:
            if g.n != self.n:
                raise DomainError(f"generator {g} has width {g.n}, expected {self.n}")
            if g.zs >> self.k:
                raise DomainError(f"placeholder z{indices_of(g.zs)[-1]} out of range 1..{self.k}")
        object.__setattr__(self, "gens", gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    @property
    def generator_set(self) -> frozenset[ExtMonomial]:
        return frozenset(self.gens)

    def sorted(self) -> "ExtIdeal":
        return ExtIdeal(self.n, self.k, tuple(sorted(set(self.gens), key=_ext_key)))

    def shared_mask(self) -> int:
        """Indices i with x_i in one generator and y_i in another."""
        xs = ys = 0
        for g in self.gens:
            xs |= g.base.xs
            ys |= g.base.ys
        return xs & ys


def _embed(a: ExtIdeal) -> MonomialIdeal:
    width = a.n + a.k
    return MonomialIdeal(width, tuple(
        SfMonomial(width, g.base.xs | (g.zs << a.n), g.base.ys) for g in a.gens
    ))


def _unembed(m: MonomialIdeal, n: int, k: int) -> ExtIdeal:
    low = (1 << n) - 1
    gens = tuple(ExtMonomial(SfMonomial(n, g.xs & low, g.ys), g.xs >> n) for g in m.gens)
    return ExtIdeal(n, k, gens).sorted()


def generic_canonical(a: ExtIdeal, decomposition: str = "split") -> ExtIdeal:
    """Canonical form of an ideal over placeholders.

    Placeholders are never dropped and never Boolean; with no placeholders
    this is canonical_full.

    Raises:
        DomainError: if a is the unit ideal
    """
    result = canonical_full(_embed(a), decomposition)
    logger.debug("generic canonical form has %d generators", len(result.canonical))
    return _unembed(result.canonical, a.n, a.k)


def generic_almost_canonical(a: ExtIdeal) -> ExtIdeal:
    """Almost canonical form over placeholders; divisor-redundant generators are kept."""
    return _unembed(almost_canonical(_embed(a)), a.n, a.k)


@dataclass(frozen=True)
class Substitution:
    """Images g_1..g_k of the placeholders z_1..z_k."""
    images: tuple[SfMonomial, ...]

    @property
    def k(self) -> int:
        return len(self.images)

    def validate(self, a: ExtIdeal) -> None:
        """Check that no image introduces a shared index.

        An image may not contain x_i or y_i when the opposite variable
        appears in a base generator or in another image, and may not be
        divisible by x_i*y_i itself.

        Raises:
            DomainError: on a placeholder count or width mismatch
            InvalidSubstitutionError: naming the first offending z_j and index
        """
        if self.k != a.k:
            raise DomainError(f"substitution has {self.k} images, the ideal has {a.k} placeholders")

        base_xs = base_ys = 0
        for g in a.gens:
            base_xs |= g.base.xs
            base_ys |= g.base.ys

        for j, image in enumerate(self.images, start=1):
            if image.n != a.n:
                raise DomainError(f"image of z{j} has width {image.n}, expected {a.n}")
            other_xs, other_ys = base_xs, base_ys
            for j2, other in enumerate(self.images, start=1):
                if j2 != j:
                    other_xs |= other.xs
                    other_ys |= other.ys
            bad = (image.xs & image.ys) | (image.xs & other_ys) | (image.ys & other_xs)
            if bad:
                raise InvalidSubstitutionError(j, lowest_index(bad))

    def apply(self, g: ExtMonomial) -> SfMonomial:
        """The lcm-normalized image of one extended monomial."""
        return lcm_all([g.base] + [self.images[j - 1] for j in indices_of(g.zs)], g.n)


def instantiate(a: ExtIdeal, sub: Substitution) -> MonomialIdeal:
    """Replace every z_j by its image, keeping each generator in input order."""
    sub.validate(a)
    return MonomialIdeal(a.n, tuple(sub.apply(g) for g in a.gens))


def substitute(generic: ExtIdeal, sub: Substitution) -> MonomialIdeal:
    """Instantiate a generic canonical form and reduce it to a concrete canonical form.

    Args:
        generic: Output of generic_canonical
        sub: Images of the placeholders

    Returns:
        The lcm-normalized images with Boolean-divisible generators and
        multiples of other generators removed, in presentation order
    """
    images = instantiate(generic, sub)
    return images.with_gens(minimalize(g for g in images.gens if g.is_boolean_free()))


def expand_repeats(generic: ExtIdeal, groups: Sequence[Sequence[SfMonomial]]) -> MonomialIdeal:
    """Almost canonical form when each placeholder repeats over a group of monomials.

    generic is the generic almost canonical form of (b_1*z_1, ..., b_k*z_k);
    the concrete ideal has generators b_j*g for every g in groups[j]. The last
    monomial of each group is fed to the f's; the others range freely.

    Returns:
        Every lcm(prod of free choices, f_s evaluated at the fixed
        representatives) where f_s involves every free placeholder,
        Boolean-free and deduplicated, in presentation order

    Raises:
        DomainError: on an empty group or a group count mismatch
        InvalidSubstitutionError: if a group member touches a shared index
    """
    if len(groups) != generic.k:
        raise DomainError(f"{len(groups)} groups given for {generic.k} placeholders")
    for j, group in enumerate(groups, start=1):
        if not group:
            raise DomainError(f"group {j} is empty")

    shared = generic.shared_mask()
    for j, group in enumerate(groups, start=1):
        for g in group:
            if g.n != generic.n:
                raise DomainError(f"group {j} member {g} has width {g.n}, expected {generic.n}")
            bad = ((g.xs | g.ys) & shared) | (g.xs & g.ys)
            if bad:
                raise InvalidSubstitutionError(j, lowest_index(bad))

    k = generic.k
    last = [group[-1] for group in groups]
    one = SfMonomial.one(generic.n)
    out: dict[SfMonomial, None] = {}

    for fixed in product((False, True), repeat=k):
        free = [j for j in range(k) if not fixed[j]]
        free_mask = sum(1 << j for j in free)
        images = tuple(last[j] if fixed[j] else one for j in range(k))
        # f_s without a free z_j only yields multiples of a line where z_j is fixed
        evaluated = [Substitution(images).apply(f) for f in generic.gens if (f.zs & free_mask) == free_mask]
        # A free placeholder with a singleton group has nothing to range over
        for choice in product(*(groups[j][:-1] for j in free)):
            prefix = lcm_all(choice, generic.n)
            for f in evaluated:
                m = lcm_all((prefix, f), generic.n)
                if m.is_boolean_free():
                    out.setdefault(m)

    logger.debug("expanded %d generic generators into %d", len(generic), len(out))
    return MonomialIdeal(generic.n, tuple(sorted(out, key=sort_key)))


def parse_generic_text(
    text: str, n: Optional[int] = None, k: Optional[int] = None, min_n: int = 1
) -> ExtIdeal:
    """Parse an ideal file whose generators may carry zK factors.

    The width is n when given, otherwise the header or largest index but at
    least min_n; k defaults to the largest placeholder index.
    """
    source = scan_ideal_text(text, allow_z=True)
    width = n if n is not None else max(source.width(), min_n)
    placeholders = source.max_placeholder if k is None else k

    gens = []
    for line_no, factors in source.lines:
        base = monomial_from_factors([f for f in factors if f.kind != "z"], width, line_no)
        zs = 0
        for f in factors:
            if f.kind == "z":
                zs |= 1 << (f.index - 1)
        gens.append(ExtMonomial(base, zs))
    return ExtIdeal(width, placeholders, tuple(gens))
