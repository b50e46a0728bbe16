from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies

from aztecdet.linalg import det_bareiss
from aztecdet.series2d import (
    Series2D,
    SeriesV,
    coeff_matrix,
    scale_by_u,
    scale_by_v,
    series_mul,
    substitute_u,
    substitute_v,
)

ORDER = 5

small = strategies.integers(min_value=-4, max_value=4)
grids = strategies.lists(strategies.lists(small, min_size=ORDER, max_size=ORDER), min_size=ORDER, max_size=ORDER)
unit_series = strategies.lists(small, min_size=ORDER - 1, max_size=ORDER - 1).map(lambda tail: SeriesV([1] + tail))


def test_from_rational():
    assert list(SeriesV.from_rational([1], [1, -3, 2], 4)) == [1, 3, 7, 15]
    assert list(SeriesV.from_rational([1, 1], [1, -1], 3)) == [1, 2, 2]


def test_series_v_arithmetic():
    a = SeriesV([1, 2, 3])
    b = SeriesV([1, -1], 3)
    assert a + b == SeriesV([2, 1, 3])
    assert a - a == SeriesV([0, 0, 0])
    assert a * b == SeriesV([1, 1, 1])
    assert (a * b) / b == a
    assert 2 * a == SeriesV([2, 4, 6])
    assert (a + SeriesV([1, 1])).order == 2


def test_division_by_series_without_constant_term():
    with pytest.raises(ZeroDivisionError):
        SeriesV([1, 1]) / SeriesV([0, 1])


def test_negative_order():
    with pytest.raises(ValueError):
        SeriesV([1], -1)


def test_series_2d():
    F = Series2D([[1, 2], [3, 4]])
    assert F.orders == (2, 2)
    assert F[1, 0] == 3
    assert F.transpose()[1, 0] == 2
    assert F + Series2D.zero(2, 2) == F
    assert F * Series2D.one(2, 2) == F
    assert series_mul(F, F) == Series2D([[1, 4], [6, 20]])
    with pytest.raises(ValueError, match="rectangular"):
        Series2D([[1, 2], [3]])
    with pytest.raises(ValueError, match="differ"):
        F + Series2D.zero(2, 3)


def test_product_of_geometric_series():
    # 1/(1-u) * 1/(1-v) has every coefficient 1
    G = Series2D.from_function(3, 3, lambda i, j: int(j == 0))
    H = Series2D.from_function(3, 3, lambda i, j: int(i == 0))
    assert G * H == Series2D.from_function(3, 3, lambda i, j: 1)


def test_substitute_v():
    F = Series2D.from_function(1, 4, lambda i, j: int(j == 1))
    # v -> v / (1 - v)
    assert substitute_v(F, SeriesV.from_rational([1], [1, -1], 4)) == Series2D([[0, 1, 1, 1]])
    with pytest.raises(ValueError, match="constant term 1"):
        substitute_v(F, SeriesV([2, 0, 0, 0]))
    with pytest.raises(ValueError, match="order"):
        substitute_v(F, SeriesV([1, 0]))


def test_scale_by_v():
    F = Series2D([[1, 0, 0], [0, 1, 0]])
    assert scale_by_v(F, SeriesV([1, Fraction(1, 2), 0])) == Series2D([[1, Fraction(1, 2), 0], [0, 1, Fraction(1, 2)]])
    assert scale_by_u(F.transpose(), SeriesV([1, Fraction(1, 2), 0])) == scale_by_v(F, SeriesV([1, Fraction(1, 2), 0])).transpose()


def test_coeff_matrix():
    F = Series2D.from_function(3, 4, lambda i, j: i + j)
    assert coeff_matrix(F, 2).to_array().tolist() == [[0, 1], [1, 2]]
    with pytest.raises(ValueError, match="too small"):
        coeff_matrix(F, 4)


@given(grids, unit_series, unit_series, unit_series, unit_series)
@settings(max_examples=40, deadline=None)
def test_moves_keep_leading_determinants(grid, alpha, beta, gamma, delta):
    F = Series2D(grid)
    G = scale_by_u(substitute_u(scale_by_v(substitute_v(F, beta), alpha), delta), gamma)
    for k in range(1, ORDER + 1):
        assert det_bareiss(coeff_matrix(G, k)) == det_bareiss(coeff_matrix(F, k))
