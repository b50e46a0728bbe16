from fractions import Fraction
from math import comb

import pytest

from aztecdet.dataclasses import DomainKind, DominoType, Orientation, WeightTriple
from aztecdet.shapes import AztecDomain, Partition, arithmetic_partition, aztec_domain, aztec_type1, aztec_type2
from aztecdet.tilings import (
    EnumerationLimitError,
    count_tilings,
    enumerate_tilings,
    make_domino,
    tiling_census,
    weighted_tiling_count,
)


@pytest.mark.parametrize(
    "first, second, dtype, orientation",
    [
        ((0, -1), (0, 0), DominoType.D1, Orientation.VERTICAL),
        ((1, -1), (1, 0), DominoType.D2, Orientation.VERTICAL),
        ((0, -1), (1, -1), DominoType.D3, Orientation.HORIZONTAL),
        ((0, 0), (1, 0), DominoType.D4, Orientation.HORIZONTAL),
    ],
)
def test_make_domino(first, second, dtype, orientation):
    domino = make_domino(second, first)
    assert domino.dtype is dtype
    assert domino.orientation is orientation
    assert domino.cells == (first, second)


def test_make_domino_not_adjacent():
    with pytest.raises(ValueError, match="not adjacent"):
        make_domino((0, 0), (1, 1))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 4), (3, 60)])
def test_aztec_triangle_counts(n, expected):
    assert count_tilings(aztec_type1(arithmetic_partition(1, 1, n))) == expected


@pytest.mark.slow
def test_aztec_triangle_four():
    assert count_tilings(aztec_type1(Partition((4, 3, 2, 1)))) == 3328


def test_small_census():
    assert tiling_census(aztec_type1(Partition((1,)))) == {(1, 0, 0, 0): 1}
    assert tiling_census(aztec_type2(Partition((1,)))) == {(1, 1, 0, 0): 1, (0, 0, 1, 1): 1}


def test_tilings_are_distinct_and_exact_covers():
    domain = aztec_type1(arithmetic_partition(1, 1, 2))
    tilings = list(enumerate_tilings(domain))
    assert len(tilings) == len(set(tilings)) == 4
    for tiling in tilings:
        cells = [cell for domino in tiling for cell in domino.cells]
        assert sorted(cells) == sorted(domain.cells)


@pytest.mark.parametrize("s", [0, 1, 2])
@pytest.mark.parametrize("r", [0, 1, 2])
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("kind", list(DomainKind))
def test_domino_counts_in_every_tiling(s, r, n, kind):
    lam = arithmetic_partition(s, r, n)
    vertical = comb(n, 2) if kind is DomainKind.TYPE1 else comb(n + 1, 2)
    for tiling in enumerate_tilings(aztec_domain(kind, lam)):
        d1, d2, d3, _ = tiling.counts
        assert d1 + d3 == lam.size
        assert d2 + d3 == vertical


def test_empty_domain_has_one_tiling():
    assert count_tilings(AztecDomain(frozenset())) == 1


def test_unbalanced_domain_has_no_tilings():
    assert count_tilings(AztecDomain(frozenset({(0, 0), (1, 1)}))) == 0


def test_cap():
    domain = aztec_type2(Partition((7, 5, 3, 1)))
    with pytest.raises(EnumerationLimitError):
        count_tilings(domain, cap=75)
    with pytest.raises(EnumerationLimitError):
        next(enumerate_tilings(domain, cap=10))


def test_weighted_count():
    domain = aztec_type2(Partition((1,)))
    w = WeightTriple(2, 3, 5)
    # D1 D2 scores 2 * 3, D3 D4 scores 5
    assert weighted_tiling_count(domain, w) == 11
    assert weighted_tiling_count(domain, WeightTriple(Fraction(1, 2), 0, 1)) == 1


def test_weight_scaling_on_tilings():
    lam = arithmetic_partition(1, 1, 3)
    c = Fraction(3, 2)
    w = WeightTriple(2, 3, 5)
    for kind, height in [(DomainKind.TYPE1, 3), (DomainKind.TYPE2, 6)]:
        census = tiling_census(aztec_domain(kind, lam))
        base = sum(mult * w.weight(*counts[:3]) for counts, mult in census.items())
        horizontal = WeightTriple(c * w.w1, w.w2, c * w.w3)
        vertical = WeightTriple(w.w1, c * w.w2, c * w.w3)
        assert sum(mult * horizontal.weight(*counts[:3]) for counts, mult in census.items()) == c**lam.size * base
        assert sum(mult * vertical.weight(*counts[:3]) for counts, mult in census.items()) == c**height * base
