"""
Truncated formal power series over the rationals.

:class:`SeriesV` holds the first ``order`` coefficients of a series in one
variable; :class:`Series2D` holds an ``(order_u, order_v)`` grid of
coefficients of a series in u and v. Coefficients beyond the orders are
unknown rather than zero, so every operation truncates to the orders of its
operands.

The substitution and scaling moves are the ones that leave leading
determinants of the coefficient matrix unchanged:

    F(u, v)  ->  alpha(v) * F(u, v * beta(v))

with alpha and beta of constant term 1. They act on the coefficient matrix by
right multiplication with a unit upper triangular matrix.
"""
from fractions import Fraction
from typing import Callable, Sequence, Union

import numpy as np

from aztecdet.dataclasses import Rational
from aztecdet.linalg import ExactMatrix

__all__ = [
    "SeriesV",
    "Series2D",
    "series_add",
    "series_mul",
    "substitute_v",
    "substitute_u",
    "scale_by_v",
    "scale_by_u",
    "coeff_matrix",
]


def _fractions(values: Sequence[Rational], length: int) -> np.ndarray:
    out = np.empty(length, dtype=object)
    out[:] = [Fraction(0)] * length
    for k, x in enumerate(values[:length]):
        out[k] = Fraction(x)
    return out


class SeriesV:
    """
    Truncated series c[0] + c[1] v + ... + c[order-1] v^(order-1).

    Parameters
    ----------
    coeffs : sequence of rationals
        Known coefficients; padded with zeros or cut to ``order``.
    order : int, optional
        Number of retained coefficients, ``len(coeffs)`` by default.
    """

    def __init__(self, coeffs: Sequence[Rational], order: int = None):
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise ValueError(f"order cannot be negative, got {order}")
        self.c = _fractions(list(coeffs), order)

    @classmethod
    def one(cls, order: int) -> "SeriesV":
        return cls([1], order)

    @classmethod
    def from_rational(cls, numer: Sequence[Rational], denom: Sequence[Rational], order: int) -> "SeriesV":
        """
        Expansion of the polynomial quotient numer(v) / denom(v).

        Example
        -------
        >>> SeriesV.from_rational([1], [1, -3, 2], 4).c   # 1/((1-v)(1-2v))
        array([Fraction(1, 1), Fraction(3, 1), Fraction(7, 1), Fraction(15, 1)], dtype=object)
        """
        return cls(numer, order) / cls(denom, order)

    @property
    def order(self) -> int:
        return len(self.c)

    def __getitem__(self, k: int) -> Fraction:
        return self.c[k]

    def __iter__(self):
        return iter(self.c)

    def __add__(self, other: "SeriesV") -> "SeriesV":
        order = min(self.order, other.order)
        return SeriesV(self.c[:order] + other.c[:order])

    def __sub__(self, other: "SeriesV") -> "SeriesV":
        order = min(self.order, other.order)
        return SeriesV(self.c[:order] - other.c[:order])

    def __mul__(self, other: Union["SeriesV", Rational]) -> "SeriesV":
        if not isinstance(other, SeriesV):
            return SeriesV(self.c * Fraction(other))
        order = min(self.order, other.order)
        out = _fractions([], order)
        for k in range(order):
            if self.c[k] != 0:
                out[k:] += self.c[k] * other.c[: order - k]
        return SeriesV(out)

    __rmul__ = __mul__

    def __truediv__(self, other: "SeriesV") -> "SeriesV":
        if other.c[0] == 0:
            raise ZeroDivisionError("leading coefficient of the denominator is zero")
        order = min(self.order, other.order)
        out = _fractions([], order)
        for k in range(order):
            total = self.c[k]
            for t in range(1, k + 1):
                total -= other.c[t] * out[k - t]
            out[k] = total / other.c[0]
        return SeriesV(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesV):
            return NotImplemented
        return self.order == other.order and bool(np.all(self.c == other.c))

    def __repr__(self) -> str:
        return f"SeriesV([{', '.join(str(x) for x in self.c)}])"


class Series2D:
    """
    Truncated bivariate series with coefficient grid ``c[i, j] = [u^i v^j] F``.
    """

    def __init__(self, grid: Union[Sequence[Sequence[Rational]], np.ndarray]):
        grid = [list(row) for row in grid]
        n_u = len(grid)
        n_v = len(grid[0]) if n_u else 0
        self.c = np.empty((n_u, n_v), dtype=object)
        for i, row in enumerate(grid):
            if len(row) != n_v:
                raise ValueError(f"coefficient grid must be rectangular, row {i} has {len(row)} entries instead of {n_v}")
            self.c[i] = [Fraction(x) for x in row]

    @classmethod
    def from_function(cls, order_u: int, order_v: int, coeff: Callable[[int, int], Rational]) -> "Series2D":
        return cls([[coeff(i, j) for j in range(order_v)] for i in range(order_u)])

    @classmethod
    def zero(cls, order_u: int, order_v: int) -> "Series2D":
        return cls.from_function(order_u, order_v, lambda i, j: 0)

    @classmethod
    def one(cls, order_u: int, order_v: int) -> "Series2D":
        return cls.from_function(order_u, order_v, lambda i, j: int(i == 0 and j == 0))

    @property
    def orders(self):
        return self.c.shape

    def __getitem__(self, index) -> Fraction:
        return self.c[index]

    def transpose(self) -> "Series2D":
        """
        Swap the roles of u and v.
        """
        return Series2D(self.c.T)

    def __add__(self, other: "Series2D") -> "Series2D":
        return series_add(self, other)

    def __sub__(self, other: "Series2D") -> "Series2D":
        _check_orders(self, other)
        return Series2D(self.c - other.c)

    def __mul__(self, other: "Series2D") -> "Series2D":
        return series_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series2D):
            return NotImplemented
        return self.orders == other.orders and bool(np.all(self.c == other.c))

    def __repr__(self) -> str:
        return f"Series2D(orders={self.orders})"


def _check_orders(F: Series2D, G: Series2D) -> None:
    if F.orders != G.orders:
        raise ValueError(f"truncation orders differ: {F.orders} and {G.orders}")


def series_add(F: Series2D, G: Series2D) -> Series2D:
    _check_orders(F, G)
    return Series2D(F.c + G.c)


def series_mul(F: Series2D, G: Series2D) -> Series2D:
    """
    Cauchy product truncated to the common orders.
    """
    _check_orders(F, G)
    n_u, n_v = F.orders
    out = Series2D.zero(n_u, n_v).c
    for i in range(n_u):
        for j in range(n_v):
            if F.c[i, j] != 0:
                out[i:, j:] += F.c[i, j] * G.c[: n_u - i, : n_v - j]
    return Series2D(out)


def _power_matrix(beta: SeriesV, order: int) -> np.ndarray:
    """
    T[j, k] = [v^k] (v beta(v))^j for 0 <= j, k < order.
    """
    t = SeriesV([0] + list(beta.c[: order - 1]), order)
    T = np.empty((order, order), dtype=object)
    power = SeriesV.one(order)
    for j in range(order):
        T[j] = power.c
        power = power * t
    return T


def _toeplitz(alpha: SeriesV, order: int) -> np.ndarray:
    """
    A[j, k] = alpha[k - j], zero below the diagonal.
    """
    A = np.empty((order, order), dtype=object)
    for j in range(order):
        A[j] = [alpha.c[k - j] if k >= j else Fraction(0) for k in range(order)]
    return A


def substitute_v(F: Series2D, beta: SeriesV) -> Series2D:
    """
    Coefficients of F(u, v beta(v)).

    v beta(v) has valuation 1, so every retained coefficient is exact.

    Raises
    ------
    ValueError
        If beta has constant term other than 1 or fewer coefficients than F's
        v-order.
    """
    n_u, n_v = F.orders
    if beta.order and beta.c[0] != 1:
        raise ValueError(f"beta must have constant term 1, got {beta.c[0]}")
    if beta.order < n_v:
        raise ValueError(f"beta has order {beta.order}, F needs {n_v}")
    if n_u == 0 or n_v == 0:
        return Series2D(F.c)
    return Series2D(F.c.dot(_power_matrix(beta, n_v)))


def scale_by_v(F: Series2D, alpha: SeriesV) -> Series2D:
    """
    Coefficients of alpha(v) F(u, v).
    """
    n_u, n_v = F.orders
    if alpha.order < n_v:
        raise ValueError(f"alpha has order {alpha.order}, F needs {n_v}")
    if n_u == 0 or n_v == 0:
        return Series2D(F.c)
    return Series2D(F.c.dot(_toeplitz(alpha, n_v)))


def substitute_u(F: Series2D, beta: SeriesV) -> Series2D:
    """
    Coefficients of F(u beta(u), v).
    """
    return substitute_v(F.transpose(), beta).transpose()


def scale_by_u(F: Series2D, alpha: SeriesV) -> Series2D:
    """
    Coefficients of alpha(u) F(u, v).
    """
    return scale_by_v(F.transpose(), alpha).transpose()


def coeff_matrix(F: Series2D, n: int) -> ExactMatrix:
    """
    The n x n matrix ([u^i v^j] F) for 0 <= i, j < n.
    """
    if n > min(F.orders):
        raise ValueError(f"truncation {F.orders} too small for a {n}x{n} coefficient block")
    return ExactMatrix(F.c[:n, :n])
