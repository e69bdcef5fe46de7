"""Tests for the chain, cycle and spread closed forms."""

import numpy as np
import pytest

from neuralcanon.core.errors import DomainError
from neuralcanon.core.models import SfMonomial
from neuralcanon.core.monomial import divides
from neuralcanon.core.sampling import random_polarized_monomial
from neuralcanon.engine.canonical import canonical_full
from neuralcanon.families.closed_forms import (
    SpreadShape,
    chain_almost_canonical,
    chain_canonical,
    chain_ideal,
    cycle_canonical,
    cycle_ideal,
    spread_canonical,
    spread_ideal,
)

from .helpers import gens_of, mono

FAMILY_SEED = 7


def monos(n: int, *texts: str) -> list[SfMonomial]:
    return [mono(t, n) for t in texts]


def random_gs(rng: np.random.Generator, count: int, structural: int, n: int) -> list[SfMonomial]:
    """g-monomials over the free indices; each index has one fixed side so none is shared."""
    free = list(range(structural + 1, n + 1))
    y_side = {i for i in free if rng.random() < 0.5}
    return [random_polarized_monomial(rng, n, free, y_side, density=0.3) for _ in range(count)]


def test_chain_ideal():
    """Test the chain builder."""
    a = chain_ideal(3, monos(6, "x4", "x5", "x6"))
    assert [str(g) for g in a.gens] == ["x1*x4", "x2*x5*y1", "x6*y2"]


def test_chain_generic_position():
    """Test the chain with independent g's."""
    form = chain_canonical(3, monos(6, "x4", "x5", "x6"))
    assert form.generator_set == gens_of(6, "x1*x4", "x2*x4*x5", "x4*x5*x6", "x2*y1*x5", "y1*x5*x6", "y2*x6")


def test_chain_collisions():
    """Test chains whose lcm's collide."""
    assert chain_canonical(3, monos(4, "x3", "x4", "x3*x4")).generator_set == gens_of(4, "x1*x3", "x2*y1*x4", "x3*x4")
    assert chain_canonical(3, monos(3, "x3", "x3", "x3")).generator_set == gens_of(3, "x3")


def test_chain_almost_canonical_size():
    """Test that the unreduced closed form has k(k+1)/2 generators."""
    for k in range(1, 6):
        gs = [SfMonomial.from_indices(2 * k, [k + j]) for j in range(1, k + 1)]
        assert len(chain_almost_canonical(k, gs)) == k * (k + 1) // 2


def test_chain_rejects_structural_indices():
    """Test that g's may not use the chain indices."""
    with pytest.raises(DomainError):
        chain_canonical(3, monos(4, "x1", "x3", "x4"))
    with pytest.raises(DomainError):
        chain_canonical(3, monos(5, "x3", "y3", "x4"))
    with pytest.raises(DomainError):
        chain_canonical(3, monos(4, "x3", "x4"))


def test_cycle_bare():
    """Test the cycle with every g equal to 1."""
    ones = [SfMonomial.one(3)] * 3
    assert cycle_canonical(3, ones).generator_set == gens_of(
        3, "x1*y3", "x2*y3", "x2*y1", "x3*y1", "x3*y2", "x1*y2",
    )
    form = cycle_canonical(4, [SfMonomial.one(4)] * 4)
    assert len(form) == 12
    assert all(g.degree == 2 for g in form.gens)


def test_cycle_with_gs_matches_engine():
    """Test a decorated 3-cycle against the engine."""
    gs = monos(6, "x4", "x5", "x6")
    assert [str(g) for g in cycle_ideal(3, gs).gens] == ["x1*x4*y3", "x2*x5*y1", "x3*x6*y2"]
    assert cycle_canonical(3, gs).generator_set == canonical_full(cycle_ideal(3, gs)).canonical.generator_set


def test_cycle_rejects_short_cycles():
    """Test that two-cycles are refused."""
    with pytest.raises(DomainError):
        cycle_canonical(2, [SfMonomial.one(2)] * 2)


def test_spread_example():
    """Test (x1*x2*x3, y1*y2, y3*x4) gains x1*x2*x4."""
    shape = SpreadShape(3, ((1, 2), (3,)))
    g, gs = SfMonomial.one(4), monos(4, "1", "x4")
    assert [str(m) for m in spread_ideal(shape, g, gs).gens] == ["x1*x2*x3", "y1*y2", "x4*y3"]
    assert spread_canonical(shape, g, gs).generator_set == gens_of(4, "x1*x2*x3", "y1*y2", "y3*x4", "x1*x2*x4")


def test_spread_absorbed_by_g():
    """Test the spread when g_3 divides g."""
    shape = SpreadShape(3, ((1, 2), (3,)))
    form = spread_canonical(shape, mono("x4", 4), monos(4, "1", "x4"))
    assert form.generator_set == gens_of(4, "y1*y2", "y3*x4", "x1*x2*x4")


def test_spread_without_singletons_is_canonical():
    """Test a spread with no singleton blocks."""
    shape = SpreadShape(2, ((1, 2),))
    form = spread_canonical(shape, mono("x3", 4), monos(4, "x4"))
    assert form.generator_set == gens_of(4, "x1*x2*x3", "y1*y2*x4")


def test_spread_flipped_and_singleton_first():
    """Test the reversed orientation with the singleton block in front."""
    shape = SpreadShape(3, ((1,), (2, 3)), flipped=True)
    g, gs = mono("x4", 5), monos(5, "x5", "1")
    a = spread_ideal(shape, g, gs)
    assert [str(m) for m in a.gens] == ["x4*y1*y2*y3", "x1*x5", "x2*x3"]
    assert spread_canonical(shape, g, gs).generator_set == canonical_full(a).canonical.generator_set


def test_spread_shape_validation():
    """Test that blocks must partition 1..k."""
    with pytest.raises(DomainError):
        SpreadShape(3, ((1, 2),))
    with pytest.raises(DomainError):
        SpreadShape(2, ((1, 2), (2,)))
    with pytest.raises(DomainError):
        SpreadShape(2, ((1, 2), ()))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_chain_matches_engine(k):
    """Test random chains against canonical_full."""
    rng = np.random.default_rng(FAMILY_SEED + k)
    for _ in range(100):
        gs = random_gs(rng, k, k - 1, k + 4)
        a = chain_ideal(k, gs)
        if a.is_unit():
            continue
        assert chain_canonical(k, gs).generator_set == canonical_full(a).canonical.generator_set, str(a)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_cycle_matches_engine(k):
    """Test random cycles against canonical_full, and that no generator divides another."""
    rng = np.random.default_rng(FAMILY_SEED + 10 + k)
    for _ in range(100):
        gs = random_gs(rng, k, k, k + 4)
        form = cycle_canonical(k, gs)
        assert form.generator_set == canonical_full(cycle_ideal(k, gs)).canonical.generator_set
        for g in form.gens:
            assert not any(divides(h, g) for h in form.gens if h != g)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_spread_matches_engine(k):
    """Test random spreads against canonical_full."""
    rng = np.random.default_rng(FAMILY_SEED + 20 + k)
    for _ in range(100):
        order = [int(i) for i in rng.permutation(np.arange(1, k + 1))]
        cuts = sorted(set(int(c) for c in rng.integers(1, k, size=2)))
        blocks = tuple(tuple(sorted(order[a:b])) for a, b in zip([0] + cuts, cuts + [k]) if a < b)
        shape = SpreadShape(k, blocks, flipped=bool(rng.random() < 0.5))
        gs = random_gs(rng, len(blocks) + 1, k, k + 4)
        a = spread_ideal(shape, gs[0], gs[1:])
        if a.is_unit():
            continue
        assert spread_canonical(shape, gs[0], gs[1:]).generator_set == canonical_full(a).canonical.generator_set, str(a)
