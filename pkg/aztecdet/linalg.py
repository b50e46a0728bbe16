"""
Exact dense linear algebra over the rationals.

Matrices are numpy object arrays of :class:`fractions.Fraction`, so row
operations stay vectorised while every entry keeps arbitrary precision.
"""
import functools
import math
import operator
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple, Union

import numpy as np
import sympy

from aztecdet.dataclasses import CofactorVector, Rational
from aztecdet.logging import logger

__all__ = [
    "ExactMatrix",
    "VanishingMinorError",
    "PrimePoolExhaustedError",
    "det_bareiss",
    "det_modular",
    "hadamard_bound",
    "prime_pool",
    "minor",
    "cofactor_expansion",
    "normalized_cofactors",
    "row_pairing",
]

#: Size of the primes used by the modular determinant.
PRIME_BITS = 62
#: Hard limit on the number of primes the modular determinant may draw.
MAX_PRIMES = 4096

_PRIMES: List[int] = []


class VanishingMinorError(ZeroDivisionError):
    def __init__(self, message: str = ""):
        super().__init__(message)


class PrimePoolExhaustedError(RuntimeError):
    def __init__(self, message: str = ""):
        super().__init__(message)


class ExactMatrix:
    """
    Square matrix of exact rationals.

    Parameters
    ----------
    rows : sequence of sequences
        Entries convertible to :class:`fractions.Fraction` (ints, Fractions or
        strings such as ``"3/4"``). An empty sequence gives the 0 x 0 matrix.

    Example
    -------
    >>> A = ExactMatrix([[2, 1], [1, 1]])
    >>> det_bareiss(A)
    Fraction(1, 1)
    """

    def __init__(self, rows: Union[Sequence[Sequence[Rational]], np.ndarray]):
        n = len(rows)
        data = np.empty((n, n), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"matrix must be square, row {i} has {len(row)} entries instead of {n}")
            for j, x in enumerate(row):
                data[i, j] = Fraction(x)
        self._data = data

    @classmethod
    def _wrap(cls, data: np.ndarray) -> "ExactMatrix":
        obj = cls.__new__(cls)
        obj._data = data
        return obj

    @classmethod
    def from_function(cls, n: int, entry: Callable[[int, int], Rational]) -> "ExactMatrix":
        return cls([[entry(i, j) for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, lambda i, j: int(i == j))

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, lambda i, j: 0)

    @property
    def size(self) -> int:
        return self._data.shape[0]

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return self._data[index]

    def rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self._data]

    def to_array(self) -> np.ndarray:
        return self._data.copy()

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._wrap(self._data.T.copy())

    def leading(self, k: int) -> "ExactMatrix":
        """
        Top-left k x k block.
        """
        return ExactMatrix._wrap(self._data[:k, :k].copy())

    def delete(self, i: int, j: int) -> "ExactMatrix":
        """
        Matrix with row i and column j removed.
        """
        return ExactMatrix._wrap(np.delete(np.delete(self._data, i, axis=0), j, axis=1))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._data.flat)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.size != other.size:
            raise ValueError(f"cannot multiply {self.size}x{self.size} by {other.size}x{other.size}")
        if self.size == 0:
            return ExactMatrix([])
        return ExactMatrix._wrap(self._data.dot(other._data))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix._wrap(self._data + other._data)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix._wrap(self._data - other._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.size == other.size and bool(np.all(self._data == other._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"ExactMatrix([{body}])"


def _integer_rows(A: ExactMatrix) -> Tuple[np.ndarray, int]:
    """
    Scale every row by the lcm of its denominators.

    Returns the integer object array and the product of the row multipliers.
    """
    n = A.size
    data = np.empty((n, n), dtype=object)
    scale = 1
    for i in range(n):
        row = A._data[i]
        lcm = math.lcm(*(x.denominator for x in row))
        data[i] = [x.numerator * (lcm // x.denominator) for x in row]
        scale *= lcm
    return data, scale


def _bareiss(M: np.ndarray) -> int:
    n = M.shape[0]
    if n == 0:
        return 1
    M = M.copy()
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k, k] == 0:
            nonzero = np.nonzero(M[k + 1 :, k])[0]
            if len(nonzero) == 0:
                return 0
            p = k + 1 + nonzero[0]
            M[[k, p]] = M[[p, k]]
            sign = -sign
        pivot = M[k, k]
        # exact: every 2x2 minor of the previous step is divisible by prev
        M[k + 1 :, k + 1 :] = (M[k + 1 :, k + 1 :] * pivot - np.outer(M[k + 1 :, k], M[k, k + 1 :])) // prev
        M[k + 1 :, k] = 0
        prev = pivot
    return sign * M[n - 1, n - 1]


def det_bareiss(A: ExactMatrix) -> Fraction:
    """
    Exact determinant by fraction-free elimination.

    Row denominators are cleared first, then Bareiss elimination runs over the
    integers with a row swap whenever a pivot vanishes. Singular matrices give 0
    and the 0 x 0 matrix gives 1.
    """
    M, scale = _integer_rows(A)
    return Fraction(_bareiss(M), scale)


def hadamard_bound(M: np.ndarray) -> int:
    """
    prod_i ceil(sqrt(sum_j M[i, j]^2)) for an integer matrix, with no floats.
    """
    bound = 1
    for row in M:
        s = sum(int(x) * int(x) for x in row)
        root = math.isqrt(s)
        bound *= root if root * root == s else root + 1
    return bound


def prime_pool(count: int) -> List[int]:
    """
    The ``count`` largest primes below 2**PRIME_BITS, largest first.

    The pool is deterministic and grows lazily.
    """
    if count > MAX_PRIMES:
        raise PrimePoolExhaustedError(f"{count} primes requested, the pool holds at most {MAX_PRIMES}")
    p = _PRIMES[-1] if _PRIMES else 2**PRIME_BITS
    while len(_PRIMES) < count:
        p = sympy.prevprime(p)
        _PRIMES.append(p)
    return _PRIMES[:count]


def _det_mod_p(M: np.ndarray, p: int) -> int:
    A = M % p
    n = A.shape[0]
    det = 1
    for k in range(n):
        nonzero = np.nonzero(A[k:, k])[0]
        if len(nonzero) == 0:
            return 0
        piv = k + nonzero[0]
        if piv != k:
            A[[k, piv]] = A[[piv, k]]
            det = -det
        pivot = int(A[k, k])
        det = det * pivot % p
        factors = (A[k + 1 :, k] * pow(pivot, -1, p)) % p
        A[k + 1 :, k:] = (A[k + 1 :, k:] - np.outer(factors, A[k, k:])) % p
    return det % p


def det_modular(A: ExactMatrix) -> int:
    """
    Determinant of an integer matrix by Chinese remaindering.

    The determinant is computed modulo successive primes from :func:`prime_pool`
    and merged incrementally until the modulus exceeds 2 H + 1, where H is the
    Hadamard bound. The symmetric residue is then the exact determinant.

    Raises
    ------
    TypeError
        If an entry is not an integer.
    PrimePoolExhaustedError
        If the bound needs more than MAX_PRIMES primes.
    """
    if not A.is_integral():
        raise TypeError("det_modular needs an integer matrix; use det_bareiss for rational entries")
    n = A.size
    if n == 0:
        return 1
    M = np.empty((n, n), dtype=object)
    M[:, :] = [[x.numerator for x in row] for row in A._data]

    bound = 2 * hadamard_bound(M) + 1
    count = -(-bound.bit_length() // (PRIME_BITS - 1))
    primes = prime_pool(count)
    logger.debug(f"det_modular: n={n}, bound of {bound.bit_length()} bits, {count} primes")

    residue, modulus = 0, 1
    for p in primes:
        r = _det_mod_p(M, p)
        # Garner step: keep residue mod modulus, fix it mod p
        t = ((r - residue) * pow(modulus, -1, p)) % p
        residue += modulus * t
        modulus *= p
    if modulus < bound:
        raise PrimePoolExhaustedError(f"product of {count} primes does not exceed the bound")
    return residue - modulus if residue > modulus // 2 else residue


def minor(A: ExactMatrix, i: int, j: int) -> Fraction:
    """
    The (i, j) minor: determinant of A without row i and column j.
    """
    return det_bareiss(A.delete(i, j))


def cofactor_expansion(A: ExactMatrix, i: int) -> Fraction:
    """
    Laplace expansion of det(A) along row i.
    """
    return sum((Fraction((-1) ** (i + j)) * A[i, j] * minor(A, i, j) for j in range(A.size)), Fraction(0))


def normalized_cofactors(A: ExactMatrix) -> CofactorVector:
    """
    Cofactors of the last row divided by the corner minor.

    c[j] = (-1)^(n-1+j) M[n-1, j] / M[n-1, n-1], so c[n-1] = 1 and
    sum_j A[i, j] c[j] vanishes for i < n - 1 and equals det(A) / det(A without
    its last row and column) for i = n - 1.

    Raises
    ------
    VanishingMinorError
        If the corner minor M[n-1, n-1] is zero.
    """
    n = A.size
    if n == 0:
        raise ValueError("normalized cofactors need n >= 1")
    corner = minor(A, n - 1, n - 1)
    if corner == 0:
        raise VanishingMinorError(f"corner minor of the {n}x{n} matrix vanishes")
    return CofactorVector(tuple(Fraction((-1) ** (n - 1 + j)) * minor(A, n - 1, j) / corner for j in range(n)))


def row_pairing(A: ExactMatrix, c: Iterable[Rational], i: int) -> Fraction:
    """
    sum_j A[i, j] c[j]
    """
    return functools.reduce(operator.add, (A[i, j] * Fraction(x) for j, x in enumerate(c)), Fraction(0))
