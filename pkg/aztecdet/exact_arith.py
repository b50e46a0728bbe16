"""
Exact integer and rational helpers: the generalized binomial coefficient,
rising factorials and ratios of Gamma values whose arguments pair off by
integer differences.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
nothing here ever touches a float.
"""
import math
import operator
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from aztecdet.dataclasses import Rational

__all__ = [
    "PoleError",
    "IrrationalRatioError",
    "GammaArg",
    "binomial",
    "rising_factorial",
    "fractional_part",
    "gamma_ratio_product",
]


class PoleError(ValueError):
    """
    Raised when a Gamma argument or a rising factorial factor hits a pole.
    """

    def __init__(self, message: str = ""):
        super().__init__(message)


class IrrationalRatioError(ValueError):
    """
    Raised when Gamma arguments cannot be paired by integer differences, so the
    ratio is not known to be rational.
    """

    def __init__(self, message: str = ""):
        super().__init__(message)


@dataclass(frozen=True, order=True)
class GammaArg:
    #: Argument of the Gamma function, always positive.
    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value <= 0:
            raise PoleError(f"Gamma argument must be positive, got {self.value}")

    @property
    def fractional_part(self) -> Fraction:
        return fractional_part(self.value)


def binomial(alpha: int, p: int) -> int:
    """
    Generalized binomial coefficient.

    Returns alpha (alpha - 1) ... (alpha - p + 1) / p! for p >= 0 and 0 for p < 0.
    alpha may be any integer, so for instance ``binomial(-1, 2) == 1``.
    """
    alpha, p = operator.index(alpha), operator.index(p)
    if p < 0:
        return 0
    if alpha >= 0:
        return math.comb(alpha, p)
    # (-1)^p C(p - alpha - 1, p) is the falling factorial of a negative alpha over p!
    return (-1) ** p * math.comb(p - alpha - 1, p)


def rising_factorial(x: Rational, k: int) -> Fraction:
    """
    x (x + 1) ... (x + k - 1), which equals Gamma(x + k) / Gamma(x).

    Parameters
    ----------
    x : int or Fraction
    k : int
        Number of factors, k >= 0. The empty product is 1.

    Raises
    ------
    PoleError
        If one of the factors is zero.
    """
    if k < 0:
        raise ValueError(f"rising factorial needs k >= 0, got {k}")
    x = Fraction(x)
    if x.denominator == 1 and -k < x <= 0:
        raise PoleError(f"rising factorial ({x})_{k} has a zero factor")
    result = Fraction(1)
    for t in range(k):
        result *= x + t
    return result


def fractional_part(q: Rational) -> Fraction:
    q = Fraction(q)
    return q - math.floor(q)


def _as_gamma_arg(arg: Union[GammaArg, Rational]) -> GammaArg:
    return arg if isinstance(arg, GammaArg) else GammaArg(arg)


def gamma_ratio_product(numer: Iterable[Union[GammaArg, Rational]], denom: Iterable[Union[GammaArg, Rational]]) -> Fraction:
    """
    Exact value of prod Gamma(numer) / prod Gamma(denom).

    Arguments are grouped by fractional part. Inside each class both sides are
    sorted and paired k-th with k-th; every pair differs by an integer d, so the
    pair contributes a rising factorial (d >= 0) or its reciprocal (d < 0).

    Raises
    ------
    PoleError
        If an argument is not positive.
    IrrationalRatioError
        If some fractional-part class holds a different number of arguments on
        the two sides.

    Example
    -------
    >>> gamma_ratio_product([5, Fraction(3, 4)], [4, Fraction(3, 4)])
    Fraction(4, 1)
    """
    classes: Dict[Fraction, Tuple[List[Fraction], List[Fraction]]] = defaultdict(lambda: ([], []))
    for side, args in enumerate((numer, denom)):
        for arg in args:
            g = _as_gamma_arg(arg)
            classes[g.fractional_part][side].append(g.value)

    result = Fraction(1)
    for frac, (top, bottom) in sorted(classes.items()):
        if len(top) != len(bottom):
            raise IrrationalRatioError(
                f"arguments with fractional part {frac} do not pair off: numerator {sorted(top)}, denominator {sorted(bottom)}"
            )
        for a, b in zip(sorted(top), sorted(bottom)):
            d = int(a - b)
            if d >= 0:
                result *= rising_factorial(b, d)
            else:
                result /= rising_factorial(a, -d)
    return result
