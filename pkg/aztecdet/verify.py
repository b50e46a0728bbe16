"""
Verification harness.

Every identity is checked by exact comparison of rationals and reported as a
:class:`~aztecdet.dataclasses.CheckReport`. A failed identity is a ``fail``
report, never an exception; an exception raised inside a check becomes a
``fail`` report carrying the exception text, and an enumeration cap becomes a
``skipped`` report.
"""
import functools
import json
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from aztecdet.bijection import family_domain, tiling_to_paths
from aztecdet.dataclasses import CheckReport, KKSParams, PathFamilyParams, PathKind, Rational, WeightTriple
from aztecdet.formulas import catalog, eval_formula, formula_ratio, get_formula
from aztecdet.kks import NAMED_KKS, alternating_binomial_matrix, kks_det, kks_matrix, kks_series, named_kks
from aztecdet.linalg import ExactMatrix, det_bareiss, det_modular, normalized_cofactors, row_pairing
from aztecdet.logging import logger, timed
from aztecdet.paths import DelannoyTable, binomial_gv_matrix, lgv_entry, lgv_matrix, path_census
from aztecdet.series2d import Series2D, SeriesV, coeff_matrix, scale_by_u, scale_by_v, substitute_u, substitute_v
from aztecdet.tilings import DEFAULT_CELL_CAP, EnumerationLimitError, census_weight, enumerate_tilings, tiling_census
from aztecdet.utils import _format_fraction, _parse_fraction

__all__ = [
    "VerifySettings",
    "SUITES",
    "CHECKS",
    "check_main_d",
    "check_main_h",
    "check_theorems",
    "check_corollaries",
    "check_conjectures",
    "check_scaling",
    "check_weight_scaling",
    "check_epilogue",
    "check_holonomic",
    "check_series_relation",
    "check_series_lemmas",
    "check_tilings",
    "check_bijection",
    "check_performance",
    "run_suite",
    "run_check",
    "reports_to_json",
    "reports_from_json",
]

Params = Dict[str, Union[int, str]]

DEFAULT_WEIGHTS = (
    WeightTriple(1, 1, 1),
    WeightTriple(2, 3, 5),
    WeightTriple(1, 0, 1),
    WeightTriple(1, -1, 1),
    WeightTriple(Fraction(1, 2), 2, Fraction(-3, 4)),
)


@dataclass
class VerifySettings:
    """
    Parameter grids and limits of the default suites.
    """

    #: Theorem grid.
    m_values: Tuple[int, ...] = (1, 2, 3, 4)
    l_values: Tuple[int, ...] = (0, 1, 2, 3, 4)
    a_values: Tuple[int, ...] = (0, 1, 2, 3)
    theorem_nmax: int = 5
    #: Tilings are compared inside the theorem grid only for domains with at most this many cells.
    theorem_tiling_cap: int = DEFAULT_CELL_CAP
    corollary_nmax: int = 8
    #: Extra parameter sets for catalog entries that take parameters.
    formula_params: Dict[str, List[Dict[str, int]]] = field(
        default_factory=lambda: {
            "kappa": [{"k": 0}, {"k": 1}, {"k": 2}, {"k": 3}],
            "epilogue": [{"s": 1, "r": 0}, {"s": 2, "r": 1}, {"s": 3, "r": 2}],
        }
    )
    conjecture_nmax: int = 12
    holonomic_nmax: int = 6
    epilogue_nmax: int = 5
    epilogue_s: Tuple[int, ...] = (1, 2, 3)
    epilogue_r: Tuple[int, ...] = (0, 1, 2, 3)
    epilogue_b: Tuple[int, ...] = (0, 5)
    rho_values: Tuple[int, ...] = (1, 2)
    #: (s, r, n, c1, c2) cases of check_scaling.
    scaling_cases: Tuple[Tuple[int, int, int, Rational, Rational], ...] = (
        (1, 1, 3, 2, 3),
        (2, 0, 2, -1, 1),
        (1, 2, 4, Fraction(1, 2), 3),
        (0, 1, 3, 1, 1),
    )
    series_m: Tuple[int, ...] = (1, 2, 3)
    series_l: Tuple[int, ...] = (1, 2, 3)
    series_a: Tuple[int, ...] = (0, 1, 2)
    series_truncation: int = 12
    series_instances: int = 50
    series_block: int = 6
    seed: int = 0
    tiling_s: Tuple[int, ...] = (0, 1, 2)
    tiling_r: Tuple[int, ...] = (0, 1, 2)
    tiling_nmax: int = 3
    tiling_cap: int = DEFAULT_CELL_CAP
    weights: Tuple[WeightTriple, ...] = DEFAULT_WEIGHTS
    performance_n: int = 40

    def with_nmax(self, n_max: int) -> "VerifySettings":
        """
        Copy with every ``*_nmax`` limit set to ``n_max``.
        """
        return replace(self, **{f.name: n_max for f in fields(self) if f.name.endswith("_nmax")})


def _param(value: Rational) -> Union[int, str]:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else str(value)


def _kind(kind: Union[PathKind, str]) -> PathKind:
    return kind if isinstance(kind, PathKind) else PathKind(kind)


def _guarded(check_id: str, params: Params, compute: Callable[[], List[CheckReport]]) -> List[CheckReport]:
    elapsed: List[float] = []
    try:
        with timed(f"{check_id} {params}") as elapsed:
            reports = compute()
    except EnumerationLimitError as exc:
        logger.warning(f"{check_id} {params} skipped: {exc}")
        return [CheckReport.skipped(check_id, params, str(exc))]
    except Exception as exc:
        logger.warning(f"{check_id} {params} raised {type(exc).__name__}: {exc}")
        return [CheckReport(check_id, dict(params), "fail", millis=elapsed[0] if elapsed else 0.0, reason=f"{type(exc).__name__}: {exc}")]
    for report in reports:
        if report.millis == 0.0:
            report.millis = elapsed[0]
        if report.status == "fail":
            logger.warning(f"{report.id} {report.params} failed: {report.lhs} != {report.rhs}")
        else:
            logger.info(f"{report.id} {report.params} {report.status}")
    return reports


@functools.lru_cache(maxsize=None)
def _census(family: PathFamilyParams, cap: int) -> Optional[Dict[Tuple[int, int, int, int], int]]:
    domain = family_domain(family)
    if len(domain) > cap:
        return None
    return tiling_census(domain, cap)


def _first_difference(left: np.ndarray, right: np.ndarray) -> Tuple[Fraction, Fraction]:
    """
    (left, right) at the first differing position, or both coefficient sums if the arrays agree.
    """
    for index in np.ndindex(left.shape):
        if left[index] != right[index]:
            return left[index], right[index]
    total = sum(left.flat, Fraction(0))
    return total, total


# ---------------------------------------------------------------------------
# Theorems: LGV determinant = (1/2) KKS determinant, and tilings where small
# ---------------------------------------------------------------------------


def _theorem(check_id: str, m: int, l: Rational, a: int, n: int, kind: PathKind, cap: Optional[int]) -> CheckReport:
    params: Params = {"m": m, "l": _param(l), "a": a, "n": n}

    def compute() -> List[CheckReport]:
        family = PathFamilyParams(m - 1, a, n, kind)
        w = WeightTriple(1, Fraction(l) - 1, 1)
        lgv = det_bareiss(lgv_matrix(family, w))
        if kind is PathKind.DELANNOY:
            rhs = kks_det(KKSParams(m, l, a, 0, a, a, n)) / 2
        else:
            rhs = kks_det(KKSParams(m, l, a + 1, 1, a + 1, a - 1, n))
        census = _census(family, DEFAULT_CELL_CAP if cap is None else cap)
        params["tilings"] = "no" if census is None else "yes"
        if census is not None:
            tilings = census_weight(census, w)
            if tilings != lgv:
                params["tilings"] = "mismatch"
                return [CheckReport(check_id, dict(params), "fail", lgv, rhs, reason=f"weighted tiling count {tilings} != LGV determinant {lgv}")]
        return [CheckReport.compare(check_id, params, lgv, rhs)]

    return _guarded(check_id, params, compute)[0]


def check_main_d(m: int, l: Rational, a: int, n: int, cap: Optional[int] = None) -> CheckReport:
    """
    det D_(1, l-1, 1)((m i - j + a, j)) = B^(m,l)_(a,0,a,a)(n) / 2, and the
    weighted tiling count of the Type 1 domain when it has at most ``cap`` cells.
    """
    return _theorem("main-d", m, l, a, n, PathKind.DELANNOY, cap)


def check_main_h(m: int, l: Rational, a: int, n: int, cap: Optional[int] = None) -> CheckReport:
    """
    det H_(1, l-1, 1)((m i - j + a, j)) = B^(m,l)_(a+1,1,a+1,a-1)(n), with Type 2 tilings.
    """
    return _theorem("main-h", m, l, a, n, PathKind.HDELANNOY, cap)


def check_theorems(settings: Optional[VerifySettings] = None) -> List[CheckReport]:
    settings = settings or VerifySettings()
    reports = []
    for m in settings.m_values:
        for l in settings.l_values:
            for a in settings.a_values:
                for n in range(1, settings.theorem_nmax + 1):
                    reports.append(check_main_d(m, l, a, n, settings.theorem_tiling_cap))
                    reports.append(check_main_h(m, l, a, n, settings.theorem_tiling_cap))
    return reports


# ---------------------------------------------------------------------------
# Catalog formulas
# ---------------------------------------------------------------------------


def check_corollaries(n_max: int, formula_params: Optional[Dict[str, List[Dict[str, int]]]] = None) -> List[CheckReport]:
    """
    For every catalog entry with a KKS record: formula = scale * KKS det, and for
    entries with a path family also LGV det = KKS det / 2 (Delannoy) or KKS det
    (H-Delannoy).
    """
    formula_params = VerifySettings().formula_params if formula_params is None else formula_params
    reports: List[CheckReport] = []
    for formula in catalog().values():
        if formula.kks is None:
            continue
        for extra in formula_params.get(formula.id, [{}]):
            for n in range(1, n_max + 1):
                tag: Params = {"formula": formula.id, **extra, "n": n}

                def compute(formula=formula, extra=extra, n=n, tag=tag) -> List[CheckReport]:
                    kks_value = kks_det(formula.kks_params(n, **extra))
                    out = [CheckReport.compare("corollary-formula", tag, formula.evaluate(n, **extra), formula.scale * kks_value)]
                    if formula.lattice is not None:
                        family, w = formula.path_family(n, **extra)
                        factor = Fraction(1, 2) if family.kind is PathKind.DELANNOY else Fraction(1)
                        out.append(CheckReport.compare("corollary-lattice", tag, det_bareiss(lgv_matrix(family, w)), factor * kks_value))
                    return out

                reports.extend(_guarded("corollary", tag, compute))
    for n in range(1, n_max + 1):
        tag = {"n": n}
        reports.extend(
            _guarded(
                "corollary-kappa",
                tag,
                lambda n=n, tag=tag: [
                    CheckReport.compare("corollary-kappa", tag, eval_formula("kappa", n, k=0) / 2, eval_formula("D-111-11", n))
                ],
            )
        )
    return reports


def check_conjectures(n_max: int) -> List[CheckReport]:
    """
    The WH31 and WD33 determinants against their Gamma products for n = 1..n_max,
    cross-checked with the modular determinant; DC-H against WH31.
    """
    reports: List[CheckReport] = []
    for name in NAMED_KKS:
        scale = get_formula(name).scale
        for n in range(1, n_max + 1):
            tag: Params = {"matrix": name, "n": n}

            def compute(name=name, n=n, tag=tag, scale=scale) -> List[CheckReport]:
                A = kks_matrix(named_kks(name, n))
                with timed(f"bareiss {name} n={n}") as elapsed:
                    value = det_bareiss(A)
                return [
                    CheckReport.compare("conjecture", tag, value, eval_formula(name, n) / scale, elapsed[0]),
                    CheckReport.compare("conjecture-modular", tag, det_modular(A), value),
                ]

            reports.extend(_guarded("conjecture", tag, compute))
    for n in range(1, n_max + 1):
        tag = {"n": n}
        reports.extend(
            _guarded(
                "conjecture-DC-H",
                tag,
                lambda n=n, tag=tag: [CheckReport.compare("conjecture-DC-H", tag, eval_formula("DC-H", n), eval_formula("WH31", n))],
            )
        )
    return reports


# ---------------------------------------------------------------------------
# Weight scaling
# ---------------------------------------------------------------------------


def _lgv_det(s: int, r: int, n: int, kind: PathKind, w: WeightTriple) -> Fraction:
    return det_bareiss(lgv_matrix(PathFamilyParams(s, r, n, kind), w))


def check_scaling(s: int, r: int, n: int, c1: Rational, c2: Rational, l: Rational = 2) -> CheckReport:
    """
    With w = (c1, (l-1) c2, c1 c2) the Delannoy determinant picks up
    c1^(s C(n,2) + r n) c2^C(n,2) and the H-Delannoy one c1^(s C(n,2) + r n) c2^(C(n,2) + n).

    Both identities are checked; the report carries the H-Delannoy pair unless
    the Delannoy identity fails.
    """
    params: Params = {"s": s, "r": r, "n": n, "c1": _param(c1), "c2": _param(c2), "l": _param(l)}

    def compute() -> List[CheckReport]:
        c1_, c2_, l_ = Fraction(c1), Fraction(c2), Fraction(l)
        if c1_ == 0 or c2_ == 0:
            raise ValueError("c1 and c2 must be nonzero")
        scaled = WeightTriple(c1_, (l_ - 1) * c2_, c1_ * c2_)
        plain = WeightTriple(1, l_ - 1, 1)
        e1 = s * comb(n, 2) + r * n
        lhs = _lgv_det(s, r, n, PathKind.DELANNOY, scaled)
        rhs = c1_**e1 * c2_ ** comb(n, 2) * _lgv_det(s, r, n, PathKind.DELANNOY, plain)
        if lhs != rhs:
            return [CheckReport.compare("scaling-c1c2", {**params, "kind": "D"}, lhs, rhs)]
        lhs = _lgv_det(s, r, n, PathKind.HDELANNOY, scaled)
        rhs = c1_**e1 * c2_ ** (comb(n, 2) + n) * _lgv_det(s, r, n, PathKind.HDELANNOY, plain)
        return [CheckReport.compare("scaling-c1c2", {**params, "kind": "D,H"}, lhs, rhs)]

    return _guarded("scaling-c1c2", params, compute)[0]


def check_weight_scaling(s: int, r: int, n: int, c: Rational, w: WeightTriple = WeightTriple(1, 1, 1), cap: int = DEFAULT_CELL_CAP) -> List[CheckReport]:
    """
    (c w1, w2, c w3) multiplies the weighted count by c^|lambda|, and
    (w1, c w2, c w3) by c^C(n,2) (Type 1) or c^C(n+1,2) (Type 2). Checked on
    the LGV determinants and, for domains of at most ``cap`` cells, on tilings.
    """
    reports: List[CheckReport] = []
    c = Fraction(c)
    for kind in PathKind:
        family = PathFamilyParams(s, r, n, kind)
        height = comb(n, 2) if kind is PathKind.DELANNOY else comb(n + 1, 2)
        moves = {
            "w1w3": (WeightTriple(c * w.w1, w.w2, c * w.w3), sum(family.parts)),
            "w2w3": (WeightTriple(w.w1, c * w.w2, c * w.w3), height),
        }
        for mode, (scaled, exponent) in moves.items():
            tag: Params = {"s": s, "r": r, "n": n, "kind": kind.value, "c": _param(c), "mode": mode}

            def compute(family=family, scaled=scaled, exponent=exponent, tag=tag) -> List[CheckReport]:
                out = [
                    CheckReport.compare(
                        "weight-scaling", tag, det_bareiss(lgv_matrix(family, scaled)), c**exponent * det_bareiss(lgv_matrix(family, w))
                    )
                ]
                census = _census(family, cap)
                if census is not None:
                    out.append(CheckReport.compare("weight-scaling-tilings", tag, census_weight(census, scaled), c**exponent * census_weight(census, w)))
                return out

            reports.extend(_guarded("weight-scaling", tag, compute))
    return reports


# ---------------------------------------------------------------------------
# Special weights (1, 1, 0) and (1, 0, 1)
# ---------------------------------------------------------------------------


def check_epilogue(s: int, r: int, n: int, b: int = 0, rho: int = 1) -> List[CheckReport]:
    """
    For every size k = 1..n:

    * L_(1,1,0) = hat L_(1,1,0) = (s+1)^C(k,2) = B^(1,s+2)_(0,0,0,0)(k) / 2, and
      det C((s+1) i + r, j) = (s+1)^C(k,2);
    * L_(1,0,1) = B^(s+1,1)_(r+2rho,b,r+2rho,r)(k) = B^(s+1,1)_(r,b,r,r)(k) / 2;
    * hat L_(1,0,1) = B^(s+1,1)_(r+2rho-1,b,r+2rho-1,r-1)(k) = B^(s+1,1)_(r-1,b,r-1,r-1)(k) / 2, for r >= 1;
    * B_(r,b,r,r) - E = B_(r+2rho,b,r+2rho,r) ((-1)^(j-i) C(2 rho, j-i)), E the first column of ones.
    """
    reports: List[CheckReport] = []
    m = s + 1
    for k in range(1, n + 1):
        tag: Params = {"s": s, "r": r, "n": k, "b": b, "rho": rho}

        def compute(k=k, tag=tag) -> List[CheckReport]:
            closed = Fraction(s + 1) ** comb(k, 2)
            binomial_weights = WeightTriple(1, 1, 0)
            lattice = _lgv_det(s, r, k, PathKind.DELANNOY, binomial_weights)
            out = [
                CheckReport.compare("epilogue-L-110", tag, lattice, closed),
                CheckReport.compare("epilogue-L-110-kks", tag, lattice, kks_det(KKSParams(1, s + 2, 0, 0, 0, 0, k)) / 2),
                CheckReport.compare("epilogue-L-110-binomial", tag, det_bareiss(binomial_gv_matrix(s, r, k)), closed),
                CheckReport.compare("epilogue-hL-110", tag, _lgv_det(s, r, k, PathKind.HDELANNOY, binomial_weights), closed),
            ]
            sparse = WeightTriple(1, 0, 1)
            lattice = _lgv_det(s, r, k, PathKind.DELANNOY, sparse)
            out.append(CheckReport.compare("epilogue-L-101", tag, lattice, kks_det(KKSParams(m, 1, r + 2 * rho, b, r + 2 * rho, r, k))))
            out.append(CheckReport.compare("epilogue-L-101-half", tag, lattice, kks_det(KKSParams(m, 1, r, b, r, r, k)) / 2))
            if r >= 1:
                lattice = _lgv_det(s, r, k, PathKind.HDELANNOY, sparse)
                shifted = KKSParams(m, 1, r + 2 * rho - 1, b, r + 2 * rho - 1, r - 1, k)
                out.append(CheckReport.compare("epilogue-hL-101", tag, lattice, kks_det(shifted)))
                out.append(CheckReport.compare("epilogue-hL-101-half", tag, lattice, kks_det(KKSParams(m, 1, r - 1, b, r - 1, r - 1, k)) / 2))
            else:
                out.append(CheckReport.skipped("epilogue-hL-101", tag, "needs r >= 1"))
            ones = ExactMatrix.from_function(k, lambda i, j: int(j == 0))
            left = kks_matrix(KKSParams(m, 1, r, b, r, r, k)) - ones
            right = kks_matrix(KKSParams(m, 1, r + 2 * rho, b, r + 2 * rho, r, k)) @ alternating_binomial_matrix(rho, k)
            mismatches = int(np.count_nonzero(left.to_array() != right.to_array()))
            out.append(CheckReport.compare("epilogue-matrix", tag, mismatches, 0))
            return out

        reports.extend(_guarded("epilogue", tag, compute))
    return reports


# ---------------------------------------------------------------------------
# Normalized cofactors
# ---------------------------------------------------------------------------


def check_holonomic(matrix: Union[str, KKSParams], n: int) -> List[CheckReport]:
    """
    c = normalized_cofactors(A_n) satisfies c[n-1] = 1, sum_j a[i, j] c[j] = 0
    for i < n-1 and sum_j a[n-1, j] c[j] = det A_n / det A_(n-1). For the named
    matrices the last ratio is compared with formula_ratio, otherwise with the
    determinants themselves. n = 1 checks the first relation only.
    """
    p = named_kks(matrix, n) if isinstance(matrix, str) else matrix.with_size(n)
    name = matrix if isinstance(matrix, str) else f"{p.m},{p.l},{p.a},{p.b},{p.c},{p.d}"
    tag: Params = {"matrix": name, "n": n}

    def compute() -> List[CheckReport]:
        A = kks_matrix(p)
        c = normalized_cofactors(A)
        out = [CheckReport.compare("holonomic-H1", tag, c[n - 1], 1)]
        for i in range(n - 1):
            out.append(CheckReport.compare("holonomic-H2", {**tag, "i": i}, row_pairing(A, c, i), 0))
        if n >= 2:
            if isinstance(matrix, str):
                ratio = formula_ratio(matrix, n)
            else:
                ratio = det_bareiss(A) / det_bareiss(A.leading(n - 1))
            out.append(CheckReport.compare("holonomic-H3", tag, row_pairing(A, c, n - 1), ratio))
        return out

    return _guarded("holonomic", tag, compute)


# ---------------------------------------------------------------------------
# Generating series
# ---------------------------------------------------------------------------


def check_series_relation(m: int, l: Rational, a: int, truncation: int, kind: Union[PathKind, str] = PathKind.DELANNOY) -> CheckReport:
    """
    alpha(v) P(u, v beta(v)) against the KKS coefficient grid, coefficientwise up
    to ``truncation`` in u and v.

    P has coefficients D_(1,l-1,1)(m i - j + a, j) (H_(...) for H-Delannoy),
    beta = 1/((1-v)(1-lv)) and alpha = (1 - l v^2) beta, or (1 - l v^2) beta^2
    for H-Delannoy. The right side is b_(a,0,a,a)(i, j) - [j = 0], or
    b_(a+1,1,a+1,a-1)(i, j) for H-Delannoy.

    On a match both report values are the sum of the retained coefficients;
    otherwise they are the first differing coefficient pair.
    """
    kind = _kind(kind)
    params: Params = {"m": m, "l": _param(l), "a": a, "truncation": truncation, "kind": kind.value}

    def compute() -> List[CheckReport]:
        if truncation < 1:
            raise ValueError(f"truncation must be positive, got {truncation}")
        l_ = Fraction(l)
        N = truncation
        family = PathFamilyParams(m - 1, a, 0, kind)
        w = WeightTriple(1, l_ - 1, 1)
        table = DelannoyTable(w)
        P = Series2D.from_function(N, N, lambda i, j: lgv_entry(family, w, i, j, table))
        denominator = SeriesV([1, -(1 + l_), l_], N)
        beta = SeriesV.one(N) / denominator
        alpha = SeriesV([1, 0, -l_], N) / denominator
        if kind is PathKind.HDELANNOY:
            alpha = alpha / denominator
            rhs = kks_series(m, l_, a + 1, 1, a + 1, a - 1, N, N)
        else:
            ones = Series2D.from_function(N, N, lambda i, j: int(j == 0))
            rhs = kks_series(m, l_, a, 0, a, a, N, N) - ones
        lhs = scale_by_v(substitute_v(P, beta), alpha)
        left, right = _first_difference(lhs.c, rhs.c)
        return [CheckReport.compare("series-relation", params, left, right)]

    return _guarded("series-relation", params, compute)[0]


def _unit_series(rng: np.random.Generator, order: int) -> SeriesV:
    coeffs = [int(x) for x in rng.integers(-3, 4, size=order)]
    coeffs[0] = 1
    return SeriesV(coeffs, order)


def _leading_dets(F: Series2D, block: int) -> np.ndarray:
    out = np.empty(block, dtype=object)
    out[:] = [det_bareiss(coeff_matrix(F, k)) for k in range(1, block + 1)]
    return out


def check_series_lemmas(instances: int = 50, block: int = 6, seed: int = 0) -> List[CheckReport]:
    """
    On random integer (F, alpha, beta) with alpha(0) = beta(0) = 1: the leading
    determinants of F are unchanged by F -> alpha(v) F(u, v beta(v)) and by
    F -> alpha(u) F(u beta(u), v), and alpha(v) / (1 - u v beta(v)) has a unit
    upper triangular coefficient matrix.
    """
    rng = np.random.default_rng(seed)
    reports: List[CheckReport] = []
    for k in range(instances):
        F = Series2D([[int(x) for x in row] for row in rng.integers(-5, 6, size=(block, block))])
        alpha, beta = _unit_series(rng, block), _unit_series(rng, block)
        tag: Params = {"instance": k, "block": block, "seed": seed}

        def compute(F=F, alpha=alpha, beta=beta, tag=tag) -> List[CheckReport]:
            before = _leading_dets(F, block)
            right = _leading_dets(scale_by_v(substitute_v(F, beta), alpha), block)
            left = _leading_dets(scale_by_u(substitute_u(F, beta), alpha), block)
            kernel = scale_by_v(substitute_v(Series2D.from_function(block, block, lambda i, j: int(i == j)), beta), alpha)
            T = coeff_matrix(kernel, block).to_array()
            violations = int(np.count_nonzero(np.tril(T, -1) != 0)) + sum(1 for i in range(block) if T[i, i] != 1)
            return [
                CheckReport.compare("series-right-action", tag, *_first_difference(right, before)),
                CheckReport.compare("series-left-action", tag, *_first_difference(left, before)),
                CheckReport.compare("series-unitriangular", tag, violations, 0),
            ]

        reports.extend(_guarded("series-lemmas", tag, compute))
    return reports


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------


def check_tilings(
    s: int,
    r: int,
    n: int,
    kind: Union[PathKind, str] = PathKind.DELANNOY,
    weights: Sequence[WeightTriple] = DEFAULT_WEIGHTS,
    cap: Optional[int] = None,
) -> List[CheckReport]:
    """
    weighted tiling count = brute-force path count = LGV determinant, for each weight triple.
    """
    kind = _kind(kind)
    family = PathFamilyParams(s, r, n, kind)
    tag: Params = {"s": s, "r": r, "n": n, "kind": kind.value}

    def compute() -> List[CheckReport]:
        tilings = tiling_census(family_domain(family), cap)
        paths = path_census(family)
        out = []
        for w in weights:
            wtag = {**tag, "w": str(w)}
            path_count = sum((mult * w.weight(*counts) for counts, mult in paths.items()), Fraction(0))
            out.append(CheckReport.compare("tilings-vs-paths", wtag, census_weight(tilings, w), path_count))
            out.append(CheckReport.compare("paths-vs-lgv", wtag, path_count, det_bareiss(lgv_matrix(family, w))))
        if kind is PathKind.DELANNOY and (s, r) == (1, 1) and n >= 1:
            out.append(CheckReport.compare("tilings-DF", tag, sum(tilings.values()), eval_formula("DF", n)))
        return out

    return _guarded("tilings", tag, compute)


def check_bijection(s: int, r: int, n: int, kind: Union[PathKind, str] = PathKind.DELANNOY, cap: Optional[int] = None) -> List[CheckReport]:
    """
    The tiling-to-paths map preserves step counts, lands in nonintersecting
    systems, is injective and hits as many systems as the path oracle finds.
    """
    kind = _kind(kind)
    family = PathFamilyParams(s, r, n, kind)
    tag: Params = {"s": s, "r": r, "n": n, "kind": kind.value}

    def compute() -> List[CheckReport]:
        domain = family_domain(family)
        images = set()
        tilings = bad_counts = crossing = 0
        for tiling in enumerate_tilings(domain, cap):
            system = tiling_to_paths(tiling, family, domain)
            tilings += 1
            images.add(system)
            bad_counts += system.step_counts != tiling.counts[:3]
            crossing += not system.is_nonintersecting()
        systems = sum(path_census(family).values())
        return [
            CheckReport.compare("bijection-steps", tag, bad_counts, 0),
            CheckReport.compare("bijection-nonintersecting", tag, crossing, 0),
            CheckReport.compare("bijection-injective", tag, len(images), tilings),
            CheckReport.compare("bijection-cardinality", tag, tilings, systems),
        ]

    return _guarded("bijection", tag, compute)


def check_performance(n: int = 40, matrix: str = "WD33") -> CheckReport:
    """
    det_modular against det_bareiss on a named KKS matrix; both timings go into the params.
    """
    params: Params = {"matrix": matrix, "n": n}

    def compute() -> List[CheckReport]:
        A = kks_matrix(named_kks(matrix, n))
        with timed(f"modular {matrix} n={n}") as modular_ms:
            modular = det_modular(A)
        with timed(f"bareiss {matrix} n={n}") as bareiss_ms:
            bareiss = det_bareiss(A)
        params["modular_ms"] = f"{modular_ms[0]:.1f}"
        params["bareiss_ms"] = f"{bareiss_ms[0]:.1f}"
        return [CheckReport.compare("performance", params, modular, bareiss, modular_ms[0] + bareiss_ms[0])]

    return _guarded("performance", params, compute)[0]


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def _suite_corollaries(settings: VerifySettings) -> List[CheckReport]:
    return check_corollaries(settings.corollary_nmax, settings.formula_params)


def _suite_conjectures(settings: VerifySettings) -> List[CheckReport]:
    return check_conjectures(settings.conjecture_nmax)


def _tiling_grid(settings: VerifySettings):
    for kind in PathKind:
        for s in settings.tiling_s:
            for r in settings.tiling_r:
                for n in range(1, settings.tiling_nmax + 1):
                    yield s, r, n, kind
        if settings.tiling_nmax < 4:
            yield 1, 1, 4, kind


def _suite_tilings(settings: VerifySettings) -> List[CheckReport]:
    reports = []
    for s, r, n, kind in _tiling_grid(settings):
        reports.extend(check_tilings(s, r, n, kind, settings.weights, settings.tiling_cap))
    return reports


def _suite_bijection(settings: VerifySettings) -> List[CheckReport]:
    reports = []
    for s, r, n, kind in _tiling_grid(settings):
        reports.extend(check_bijection(s, r, n, kind, settings.tiling_cap))
    return reports


def _suite_holonomic(settings: VerifySettings) -> List[CheckReport]:
    return [report for name in NAMED_KKS for n in range(1, settings.holonomic_nmax + 1) for report in check_holonomic(name, n)]


def _suite_series(settings: VerifySettings) -> List[CheckReport]:
    reports = check_series_lemmas(settings.series_instances, settings.series_block, settings.seed)
    for m in settings.series_m:
        for l in settings.series_l:
            for a in settings.series_a:
                for kind in PathKind:
                    reports.append(check_series_relation(m, l, a, settings.series_truncation, kind))
    return reports


def _suite_epilogue(settings: VerifySettings) -> List[CheckReport]:
    reports = []
    for s in settings.epilogue_s:
        for r in settings.epilogue_r:
            for b in settings.epilogue_b:
                for rho in settings.rho_values:
                    reports.extend(check_epilogue(s, r, settings.epilogue_nmax, b, rho))
    return reports


def _suite_scaling(settings: VerifySettings) -> List[CheckReport]:
    reports = [check_scaling(*case) for case in settings.scaling_cases]
    for s, r, n, c, _ in settings.scaling_cases:
        reports.extend(check_weight_scaling(s, r, n, c, WeightTriple(2, 3, 5), settings.theorem_tiling_cap))
    return reports


def _suite_performance(settings: VerifySettings) -> List[CheckReport]:
    return [check_performance(settings.performance_n)]


SUITES: Dict[str, Callable[[VerifySettings], List[CheckReport]]] = {
    "theorems": check_theorems,
    "corollaries": _suite_corollaries,
    "conjectures": _suite_conjectures,
    "tilings": _suite_tilings,
    "bijection": _suite_bijection,
    "holonomic": _suite_holonomic,
    "series": _suite_series,
    "epilogue": _suite_epilogue,
    "scaling": _suite_scaling,
    "performance": _suite_performance,
}

#: Single checks runnable by id with keyword parameters.
CHECKS: Dict[str, Callable[..., Union[CheckReport, List[CheckReport]]]] = {
    "main-d": check_main_d,
    "main-h": check_main_h,
    "corollaries": check_corollaries,
    "conjectures": check_conjectures,
    "scaling": check_scaling,
    "weight-scaling": check_weight_scaling,
    "epilogue": check_epilogue,
    "holonomic": check_holonomic,
    "series-relation": check_series_relation,
    "series-lemmas": check_series_lemmas,
    "tilings": check_tilings,
    "bijection": check_bijection,
    "performance": check_performance,
}


def run_suite(name: str, settings: Optional[VerifySettings] = None) -> List[CheckReport]:
    """
    Run a named suite (or ``all``) and return its reports sorted by check id.
    """
    settings = settings or VerifySettings()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(f"unknown suite {name!r}, expected 'all' or one of {sorted(SUITES)}")
    reports: List[CheckReport] = []
    for suite in names:
        logger.info(f"running suite {suite}")
        reports.extend(SUITES[suite](settings))
    return sorted(reports, key=lambda report: report.sort_key)


def run_check(check_id: str, **params: Union[int, str]) -> List[CheckReport]:
    """
    Run one check by id, e.g. ``run_check("main-d", m=2, l=2, a=1, n=3)``.
    """
    try:
        check = CHECKS[check_id]
    except KeyError:
        raise KeyError(f"unknown check {check_id!r}, expected one of {sorted(CHECKS)}") from None
    result = check(**params)
    reports = [result] if isinstance(result, CheckReport) else list(result)
    return sorted(reports, key=lambda report: report.sort_key)


def reports_to_json(reports: Sequence[CheckReport]) -> str:
    """
    JSON array of reports; rationals are written as ``"num/den"`` strings.
    """
    rows = []
    for report in reports:
        row = {
            "id": report.id,
            "params": report.params,
            "status": report.status,
            "lhs": _format_fraction(report.lhs),
            "rhs": _format_fraction(report.rhs),
            "millis": round(report.millis, 3),
        }
        if report.reason is not None:
            row["reason"] = report.reason
        rows.append(row)
    return json.dumps(rows, indent=2, ensure_ascii=False)


def reports_from_json(text: str) -> List[CheckReport]:
    rows = json.loads(text)
    if not isinstance(rows, list):
        raise ValueError("a report file holds a JSON array")
    return [
        CheckReport(
            row["id"],
            dict(row["params"]),
            row["status"],
            _parse_fraction(row["lhs"]),
            _parse_fraction(row["rhs"]),
            float(row["millis"]),
            row.get("reason"),
        )
        for row in rows
    ]
