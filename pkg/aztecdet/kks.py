"""
KKS binomial determinants

    B^(m,l)_(a,b,c,d)(n) = det_{0<=i,j<n} ( l^(j+b) C(mi+j+c, mi+a) + C(mi-j+d, mi+a) )

with the generalized binomial coefficient of :mod:`aztecdet.exact_arith`.
"""
from fractions import Fraction
from typing import Dict, Tuple

from aztecdet.dataclasses import KKSParams, Rational
from aztecdet.exact_arith import binomial
from aztecdet.linalg import ExactMatrix, det_bareiss, det_modular
from aztecdet.series2d import Series2D

__all__ = [
    "NAMED_KKS",
    "named_kks",
    "kks_entry",
    "kks_matrix",
    "kks_det",
    "kks_series",
    "alternating_binomial_matrix",
]

#: (m, l, a, b, c, d) of the two determinants with Gamma product evaluations.
NAMED_KKS: Dict[str, Tuple[int, int, int, int, int, int]] = {
    "WH31": (4, 2, 2, 1, 2, 0),
    "WD33": (4, 2, 3, 0, 3, 3),
}


def named_kks(name: str, n: int) -> KKSParams:
    try:
        m, l, a, b, c, d = NAMED_KKS[name]
    except KeyError:
        raise KeyError(f"unknown KKS matrix {name!r}, expected one of {sorted(NAMED_KKS)}") from None
    return KKSParams(m, l, a, b, c, d, n)


def kks_entry(p: KKSParams, i: int, j: int) -> Fraction:
    """
    l^(j+b) C(mi+j+c, mi+a) + C(mi-j+d, mi+a)

    Raises
    ------
    ValueError
        If l = 0 and j + b < 0.
    """
    exponent = j + p.b
    if p.l == 0 and exponent < 0:
        raise ValueError(f"l = 0 cannot be raised to the negative power {exponent}")
    mi = p.m * i
    return p.l**exponent * binomial(mi + j + p.c, mi + p.a) + binomial(mi - j + p.d, mi + p.a)


def kks_matrix(p: KKSParams) -> ExactMatrix:
    return ExactMatrix.from_function(p.n, lambda i, j: kks_entry(p, i, j))


def kks_det(p: KKSParams, method: str = "bareiss") -> Fraction:
    """
    Exact value of B^(m,l)_(a,b,c,d)(n).

    Parameters
    ----------
    p : KKSParams
    method : str
        ``bareiss`` (any rational l) or ``modular`` (needs an integer matrix).
    """
    A = kks_matrix(p)
    if method == "bareiss":
        return det_bareiss(A)
    if method == "modular":
        return Fraction(det_modular(A))
    raise ValueError(f"unknown determinant method {method!r}, expected 'bareiss' or 'modular'")


def kks_series(m: int, l: Rational, a: int, b: int, c: int, d: int, order_u: int, order_v: int) -> Series2D:
    """
    Truncated generating series sum_(i,j) b(i, j) u^i v^j of the KKS entries.
    """
    p = KKSParams(m, l, a, b, c, d, 0)
    return Series2D.from_function(order_u, order_v, lambda i, j: kks_entry(p, i, j))


def alternating_binomial_matrix(rho: int, n: int) -> ExactMatrix:
    """
    ((-1)^(j-i) C(2 rho, j-i)) for 0 <= i, j < n, upper unitriangular.
    """
    return ExactMatrix.from_function(n, lambda i, j: (-1) ** ((j - i) % 2) * binomial(2 * rho, j - i))
