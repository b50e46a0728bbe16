import json
from fractions import Fraction

import pytest

from aztecdet.dataclasses import CheckReport, KKSParams
from aztecdet.linalg import det_bareiss
from aztecdet.tilings import DEFAULT_CELL_CAP
from aztecdet.verify import (
    VerifySettings,
    check_bijection,
    check_conjectures,
    check_corollaries,
    check_epilogue,
    check_holonomic,
    check_main_d,
    check_main_h,
    check_performance,
    check_scaling,
    check_series_lemmas,
    check_series_relation,
    check_tilings,
    check_weight_scaling,
    reports_from_json,
    reports_to_json,
    run_check,
    run_suite,
)


def _statuses(reports):
    return {report.status for report in reports}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_main_d(n):
    report = check_main_d(2, 2, 1, n)
    assert report.status == "pass"
    assert report.id == "main-d"
    assert report.params["tilings"] in ("yes", "no")


def test_main_d_counts_aztec_triangle_tilings():
    report = check_main_d(2, 2, 1, 3)
    assert report.params["tilings"] == "yes"
    assert report.lhs == report.rhs == 60


@pytest.mark.parametrize("m, l, a, n", [(1, 2, 0, 3), (3, 0, 2, 3), (2, Fraction(1, 2), 1, 3), (4, 3, 0, 2)])
def test_main_d_grid(m, l, a, n):
    assert check_main_d(m, l, a, n).status == "pass"


@pytest.mark.parametrize("m, l, a, n", [(2, 2, 0, 3), (2, 2, 0, 4), (1, 0, 1, 3), (3, 4, 2, 2)])
def test_main_h(m, l, a, n):
    assert check_main_h(m, l, a, n).status == "pass"


def test_theorem_fails_on_wrong_lgv_determinant(monkeypatch):
    monkeypatch.setattr("aztecdet.verify.det_bareiss", lambda matrix: det_bareiss(matrix) + 1)
    report = check_main_d(2, 2, 1, 2)
    assert report.status == "fail"
    assert report.params["tilings"] == "mismatch"
    assert report.lhs == report.rhs + 1


def test_theorem_fails_on_tiling_mismatch(monkeypatch):
    monkeypatch.setattr("aztecdet.verify.census_weight", lambda census, w: Fraction(-1))
    report = check_main_h(2, 2, 0, 2)
    assert report.lhs == report.rhs
    assert report.status == "fail"
    assert report.reason.startswith("weighted tiling count -1 != LGV determinant")


def test_theorem_default_tiling_cap(monkeypatch):
    caps = []
    monkeypatch.setattr("aztecdet.verify._census", lambda family, cap: caps.append(cap))
    assert check_main_d(2, 2, 1, 2).params["tilings"] == "no"
    assert caps == [DEFAULT_CELL_CAP] == [VerifySettings().theorem_tiling_cap] == [80]


def test_theorem_without_tilings():
    assert check_main_d(3, 2, 3, 4, cap=4).params["tilings"] == "no"


def test_corollaries():
    reports = check_corollaries(3, {"kappa": [{"k": 0}, {"k": 2}], "epilogue": [{"s": 2, "r": 1}]})
    assert _statuses(reports) == {"pass"}
    ids = {report.id for report in reports}
    assert ids == {"corollary-formula", "corollary-lattice", "corollary-kappa"}


def test_conjectures():
    reports = check_conjectures(4)
    assert _statuses(reports) == {"pass"}
    values = {(r.params["matrix"], r.params["n"]): r.lhs for r in reports if r.id == "conjecture"}
    assert values[("WH31", 2)] == 30
    assert values[("WD33", 2)] == 16


@pytest.mark.parametrize("case", [(1, 1, 3, 2, 3), (2, 0, 2, -1, 1), (1, 2, 4, Fraction(1, 2), 3), (0, 1, 3, 1, 1)])
def test_scaling(case):
    report = check_scaling(*case)
    assert report.status == "pass"
    assert report.params["kind"] == "D,H"


def test_weight_scaling():
    reports = check_weight_scaling(1, 1, 3, Fraction(3, 2))
    assert _statuses(reports) == {"pass"}
    assert "weight-scaling-tilings" in {report.id for report in reports}


def test_exception_becomes_fail():
    report = check_scaling(1, 1, 2, 0, 1)
    assert report.status == "fail"
    assert report.reason == "ValueError: c1 and c2 must be nonzero"
    assert report.lhs is None


def test_epilogue():
    reports = check_epilogue(2, 3, 4, 0, 1)
    assert _statuses(reports) == {"pass"}
    closed = {r.params["n"]: r.lhs for r in reports if r.id == "epilogue-L-110"}
    assert closed[3] == 27


def test_epilogue_rho_and_b():
    assert _statuses(check_epilogue(1, 2, 4, 5, 2)) == {"pass"}


def test_epilogue_skips_hat_with_r_zero():
    reports = check_epilogue(1, 0, 3)
    skipped = [r for r in reports if r.status == "skipped"]
    assert {r.id for r in skipped} == {"epilogue-hL-101"}
    assert len(skipped) == 3
    assert {r.status for r in reports if r.status != "skipped"} == {"pass"}


@pytest.mark.parametrize("matrix, n", [("WH31", 4), ("WD33", 5), ("WH31", 1)])
def test_holonomic(matrix, n):
    reports = check_holonomic(matrix, n)
    assert _statuses(reports) == {"pass"}
    assert len(reports) == (n if n == 1 else n + 1)


def test_holonomic_custom_matrix():
    reports = check_holonomic(KKSParams(2, 2, 1, 0, 1, 1, 0), 2)
    assert _statuses(reports) == {"pass"}
    h3 = next(r for r in reports if r.id == "holonomic-H3")
    assert h3.lhs == 4


def test_holonomic_vanishing_minor_fails():
    reports = check_holonomic(KKSParams(1, 0, 1, 0, 0, 0, 0), 2)
    assert [r.status for r in reports] == ["fail"]
    assert "VanishingMinorError" in reports[0].reason


@pytest.mark.parametrize(
    "m, l, a, kind",
    [(2, 2, 1, "D"), (1, 3, 0, "D"), (2, 1, 0, "D"), (2, 2, 0, "H")],
)
def test_series_relation(m, l, a, kind):
    report = check_series_relation(m, l, a, 12, kind)
    assert report.status == "pass"


def test_series_relation_bad_truncation():
    assert check_series_relation(2, 2, 1, 0).status == "fail"


def test_series_lemmas():
    reports = check_series_lemmas(instances=5, block=4, seed=1)
    assert _statuses(reports) == {"pass"}
    assert len(reports) == 15


@pytest.mark.parametrize("s, r, n, kind", [(1, 1, 3, "D"), (0, 2, 2, "H"), (2, 1, 2, "H"), (1, 0, 3, "D")])
def test_tilings(s, r, n, kind):
    reports = check_tilings(s, r, n, kind)
    assert _statuses(reports) == {"pass"}


def test_tilings_aztec_triangle():
    reports = check_tilings(1, 1, 3)
    df = next(r for r in reports if r.id == "tilings-DF")
    assert df.lhs == df.rhs == 60


def test_tilings_over_the_cap_are_skipped():
    reports = check_tilings(2, 1, 4, "H", cap=10)
    assert [r.status for r in reports] == ["skipped"]
    assert "cells" in reports[0].reason


@pytest.mark.parametrize("s, r, n, kind", [(1, 1, 2, "D"), (2, 1, 2, "H"), (1, 1, 3, "D"), (0, 1, 2, "H")])
def test_bijection(s, r, n, kind):
    reports = check_bijection(s, r, n, kind)
    assert _statuses(reports) == {"pass"}
    assert {r.id for r in reports} == {"bijection-steps", "bijection-nonintersecting", "bijection-injective", "bijection-cardinality"}


def test_performance():
    report = check_performance(8)
    assert report.status == "pass"
    assert "modular_ms" in report.params


def test_settings_with_nmax():
    settings = VerifySettings().with_nmax(2)
    assert settings.theorem_nmax == settings.conjecture_nmax == settings.tiling_nmax == 2
    assert settings.series_truncation == 12


def test_run_suite():
    reports = run_suite("conjectures", VerifySettings().with_nmax(3))
    assert _statuses(reports) == {"pass"}
    assert [r.sort_key for r in reports] == sorted(r.sort_key for r in reports)
    with pytest.raises(KeyError, match="unknown suite"):
        run_suite("everything")


@pytest.mark.slow
def test_run_all_small():
    settings = VerifySettings(
        m_values=(1, 2),
        l_values=(0, 2),
        a_values=(0, 1),
        series_instances=3,
        series_truncation=8,
        performance_n=10,
    ).with_nmax(3)
    reports = run_suite("all", settings)
    assert "fail" not in _statuses(reports)


def test_run_check():
    reports = run_check("main-d", m=2, l=2, a=1, n=3)
    assert [r.status for r in reports] == ["pass"]
    with pytest.raises(KeyError, match="unknown check"):
        run_check("nope")


def test_json_round_trip():
    reports = check_epilogue(1, 0, 2) + [check_scaling(1, 1, 2, 0, 1)]
    text = reports_to_json(reports)
    rows = json.loads(text)
    assert rows[0]["id"] == "epilogue-L-110" and rows[0]["lhs"] == "1/1"
    assert all(row["lhs"] is None for row in rows if row["status"] == "skipped")
    assert all("reason" not in row for row in rows if row["status"] == "pass")
    back = reports_from_json(text)
    assert [(r.id, r.params, r.status, r.lhs, r.rhs, r.reason) for r in back] == [
        (r.id, r.params, r.status, r.lhs, r.rhs, r.reason) for r in reports
    ]


def test_json_rational_values():
    report = CheckReport.compare("x", {"l": "1/2"}, Fraction(3, 4), Fraction(3, 4))
    row = json.loads(reports_to_json([report]))[0]
    assert row["lhs"] == row["rhs"] == "3/4"
    assert reports_from_json(reports_to_json([report]))[0].lhs == Fraction(3, 4)


def test_json_rejects_objects():
    with pytest.raises(ValueError, match="JSON array"):
        reports_from_json("{}")
