import pytest

from aztecdet.bijection import domino_step, family_domain, lattice_point, phi, phi_hat, tiling_to_paths
from aztecdet.dataclasses import DominoType, PathFamilyParams, PathKind, Step, Tiling
from aztecdet.paths import enumerate_path_systems
from aztecdet.tilings import enumerate_tilings, make_domino


def test_lattice_point():
    assert lattice_point((0, -1)) == (-1, 1)
    assert lattice_point((1, 0)) == (0, 1)
    with pytest.raises(ValueError, match="gray"):
        lattice_point((0, 0))


@pytest.mark.parametrize(
    "first, second, expected",
    [
        ((0, -1), (0, 0), ((-1, 1), Step.EAST)),
        ((1, -1), (1, 0), ((0, 1), Step.NORTH)),
        ((0, -1), (1, -1), ((-1, 1), Step.NORTHEAST)),
        ((0, 0), (1, 0), None),
    ],
)
def test_domino_step(first, second, expected):
    assert domino_step(make_domino(first, second)) == expected


def test_type1_tiling(type1_tiling):
    params, tiling, expected = type1_tiling
    system = phi(tiling, params)
    assert system == expected
    census = {t: sum(1 for d in tiling.dominoes if d.dtype is t) for t in DominoType}
    assert system.step_counts == (census[DominoType.D1], census[DominoType.D2], census[DominoType.D3])
    assert system.is_nonintersecting()


def test_type2_tiling(type2_tiling):
    params, tiling, expected = type2_tiling
    system = phi_hat(tiling, params)
    assert system == expected
    assert system.step_counts == (9, 3, 7)
    assert system.ends() == tuple(params.end(j) for j in range(1, 5))


@pytest.mark.parametrize(
    "params, count",
    [
        (PathFamilyParams(1, 1, 2), 4),
        (PathFamilyParams(0, 1, 1, PathKind.HDELANNOY), 2),
        (PathFamilyParams(1, 0, 2), 3),
        (PathFamilyParams(1, 1, 2, PathKind.HDELANNOY), None),
    ],
)
def test_bijection_onto_path_systems(params, count):
    domain = family_domain(params)
    images = [tiling_to_paths(tiling, params, domain) for tiling in enumerate_tilings(domain)]
    if count is not None:
        assert len(images) == count
    assert len(set(images)) == len(images)
    assert set(images) == set(enumerate_path_systems(params))


def test_wrong_kind(type1_tiling, type2_tiling):
    params, tiling, _ = type1_tiling
    with pytest.raises(ValueError, match="phi_hat"):
        phi_hat(tiling, params)
    params, tiling, _ = type2_tiling
    with pytest.raises(ValueError, match="Type 1"):
        phi(tiling, params)


def test_malformed_tilings(type1_tiling):
    params, tiling, _ = type1_tiling
    dominoes = sorted(tiling.dominoes, key=lambda d: d.cells)
    with pytest.raises(ValueError, match="uncovered"):
        phi(Tiling(frozenset(dominoes[1:])), params)
    with pytest.raises(ValueError, match="not in the domain"):
        phi(Tiling(frozenset(dominoes + [make_domino((40, 0), (40, 1))])), params)
