import pytest

from aztecdet.dataclasses import PathFamilyParams, PathKind, PathSystem, Step, Tiling
from aztecdet.tilings import make_domino

E, N, NE = Step.EAST, Step.NORTH, Step.NORTHEAST


def _tiling(vertical, horizontal):
    """
    Dominoes given by their lower cell (vertical) or left cell (horizontal).
    """
    dominoes = [make_domino((x, y), (x, y + 1)) for x, y in vertical]
    dominoes += [make_domino((x, y), (x + 1, y)) for x, y in horizontal]
    return Tiling(frozenset(dominoes))


@pytest.fixture
def type1_tiling():
    """
    A tiling of the Type 1 domain of (7, 5, 3, 1) and its Delannoy path system.
    """
    d1 = [(0, -7), (0, -5), (0, -1), (1, 0), (2, -3), (3, -4), (3, -2), (3, 0), (4, 1), (5, -2), (6, -1), (7, 2)]
    d2 = [(2, 0), (4, -2)]
    d3 = [(0, -3), (1, -4), (5, 2), (8, 3)]
    d4 = [(0, -2), (1, -5), (1, -1), (2, 2), (3, 3), (4, 0), (4, 4), (5, 1), (5, 3), (5, 5), (6, 4), (6, 6), (7, 1), (7, 5), (8, 2), (8, 4)]
    params = PathFamilyParams(2, 1, 4, PathKind.DELANNOY)
    paths = PathSystem(
        ((-1, 1), (-2, 2), (-3, 3), (-4, 4)),
        (
            (E, E, N, E, E, NE, E, NE),
            (NE, E, E, N, E, E),
            (E, NE, E),
            (E,),
        ),
    )
    return params, _tiling(d1 + d2, d3 + d4), paths


@pytest.fixture
def type2_tiling():
    """
    A tiling of the Type 2 domain of (7, 5, 3, 1) and its H-Delannoy path system.
    """
    d1 = [(0, -7), (0, -5), (0, -1), (2, -3), (2, -1), (3, -2), (3, 0), (4, -1), (8, 1)]
    d2 = [(1, -7), (1, -1), (7, -1)]
    d3 = [(0, -3), (1, -4), (3, -4), (4, 1), (5, 0), (6, 1), (9, 2)]
    d4 = [
        (0, -2), (1, -5), (1, 1), (2, 2), (3, -3), (3, 3), (4, -2), (4, 2), (4, 4), (5, -1),
        (5, 3), (5, 5), (6, 2), (6, 4), (6, 6), (7, 3), (7, 5), (8, 4), (9, 3),
    ]  # fmt: skip
    params = PathFamilyParams(2, 1, 4, PathKind.HDELANNOY)
    paths = PathSystem(
        ((-1, 1), (-2, 2), (-3, 3), (-4, 4)),
        (
            (E, N, E, E, NE, NE, E, NE),
            (NE, E, E, E, NE, N),
            (E, NE, NE),
            (E, N),
        ),
    )
    return params, _tiling(d1 + d2, d3 + d4), paths
