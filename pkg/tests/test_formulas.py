from fractions import Fraction

import pytest

from aztecdet.dataclasses import PathKind
from aztecdet.formulas import (
    LinearForm,
    catalog,
    eval_formula,
    formula_ratio,
    formula_table,
    get_formula,
    load_catalog,
)
from aztecdet.kks import kks_det
from aztecdet.linalg import det_bareiss
from aztecdet.paths import lgv_matrix

COROLLARIES = ["D-111-10", "D-111-11", "D-131-11", "D-121-20", "D-121-21", "D-121-22", "H-111-10", "H-111-11", "H-131-10"]


@pytest.mark.parametrize(
    "text, env, expected",
    [
        ("(3i+k-2)/2", {"i": 1, "k": 0}, Fraction(1, 2)),
        ("6i-1", {"i": 2}, 11),
        ("n+2i", {"n": 3, "i": 1}, 5),
        ("i/3", {"i": 2}, Fraction(2, 3)),
        ("-4", {}, -4),
        ("s+1", {"s": 2}, 3),
    ],
)
def test_linear_form(text, env, expected):
    assert LinearForm.parse(text)(env) == expected


def test_linear_form_errors():
    assert LinearForm.parse("(i+k)/2").variables == ("i", "k")
    with pytest.raises(KeyError, match="'k'"):
        LinearForm.parse("i+k")({"i": 1})
    with pytest.raises(ValueError, match="cannot parse"):
        LinearForm.parse("2*i")


def test_aztec_triangle_values():
    assert formula_table("DF", 4) == [(1, 1), (2, 4), (3, 60), (4, 3328)]


@pytest.mark.parametrize("formula_id, values", [("WH31", [2, 30]), ("WD33", [2, 16])])
def test_named_values(formula_id, values):
    assert [v for _, v in formula_table(formula_id, len(values))] == values


def test_ratio():
    assert formula_ratio("WH31", 2) == 15
    assert formula_ratio("DF", 1) == 1
    with pytest.raises(ValueError):
        formula_ratio("DF", 0)


@pytest.mark.parametrize("formula_id", COROLLARIES)
def test_corollaries_at_one(formula_id):
    expected = {"H-111-11": 2, "H-131-10": 3}.get(formula_id, 1)
    assert eval_formula(formula_id, 1) == expected


def test_corollaries_at_two():
    assert eval_formula("D-111-10", 2) == 3
    assert eval_formula("H-111-10", 2) == 4


def test_directly_computed_matches_weighted_product():
    for n in range(1, 6):
        assert eval_formula("DC-H", n) == eval_formula("WH31", n)


def test_kappa_at_zero():
    for n in range(1, 5):
        assert eval_formula("kappa", n) == 2 * eval_formula("D-111-11", n)


def test_epilogue():
    assert eval_formula("epilogue", 3, s=2) == 27
    assert eval_formula("epilogue", 4) == 2**6


@pytest.mark.parametrize("formula_id", sorted(catalog()))
def test_catalog_matches_kks(formula_id):
    formula = get_formula(formula_id)
    for n in range(1, 4):
        assert eval_formula(formula_id, n) == formula.scale * kks_det(formula.kks_params(n))


@pytest.mark.parametrize("formula_id", sorted(f for f, rec in catalog().items() if rec.lattice is not None))
def test_catalog_matches_lgv(formula_id):
    formula = get_formula(formula_id)
    for n in range(1, 4):
        params, weights = formula.path_family(n)
        assert eval_formula(formula_id, n) == det_bareiss(lgv_matrix(params, weights))


def test_path_family():
    params, weights = get_formula("H-131-10").path_family(3)
    assert (params.s, params.r, params.n, params.kind) == (1, 0, 3, PathKind.HDELANNOY)
    assert (weights.w1, weights.w2, weights.w3) == (1, 3, 1)
    with pytest.raises(ValueError, match="path family"):
        get_formula("kappa").path_family(2)


def test_lookup_errors():
    with pytest.raises(KeyError, match="nope"):
        eval_formula("nope", 2)
    with pytest.raises(TypeError, match="no parameter"):
        eval_formula("DF", 2, k=1)
    with pytest.raises(ValueError, match="n >= 1"):
        eval_formula("DF", 0)


def _write(tmp_path, body):
    path = tmp_path / "catalog.txt"
    path.write_text("; test catalog\n" + body)
    return str(path)


def test_load_catalog(tmp_path):
    formulas = load_catalog(_write(tmp_path, "formula sq\ntitle two squared per step\nfactor 4 / 1\nend\n"))
    assert list(formulas) == ["sq"]
    assert formulas["sq"].title == "two squared per step"
    assert formulas["sq"].evaluate(3) == 64


@pytest.mark.parametrize(
    "body, match",
    [
        ("formula x\nfoo 1\nend\n", "unknown keyword"),
        ("formula x\nfactor 1 / 1\n", "missing 'end'"),
        ("formula x\nformula y\nend\n", "missing 'end'"),
        ("title stray\n", "outside a formula"),
        ("formula x\ngamma 1/2 / 1\nend\n", "does not evaluate"),
        ("formula x\nfactor 1 1\nend\n", "separator"),
        ("formula x\nconstant -1\nend\n", "not positive"),
        ("formula x\nend\nformula x\nend\n", "duplicate"),
        ("formula x\nkks 1 2 3\nend\n", "m l a b c d"),
    ],
)
def test_bad_catalog(tmp_path, body, match):
    with pytest.raises(ValueError, match=match):
        load_catalog(_write(tmp_path, body))
