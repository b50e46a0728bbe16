from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, Optional, Tuple, Union

__all__ = [
    "Cell",
    "Rational",
    "Color",
    "DomainKind",
    "BoundarySymbol",
    "Orientation",
    "DominoType",
    "PathKind",
    "Step",
    "WeightTriple",
    "Domino",
    "Tiling",
    "PathFamilyParams",
    "PathSystem",
    "KKSParams",
    "CofactorVector",
    "CheckReport",
]

Rational = Union[int, Fraction]
#: Unit square with lower-left corner (x, y); it lies on diagonal x - y.
Cell = Tuple[int, int]


class Color(Enum):
    WHITE = "white"
    GRAY = "gray"


class DomainKind(Enum):
    TYPE1 = 1
    TYPE2 = 2


class BoundarySymbol(Enum):
    #: East edge of the Young diagram boundary.
    CIRCLE = "◦"
    #: North edge of the Young diagram boundary.
    BULLET = "•"


class Orientation(Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


class DominoType(Enum):
    D1 = 1
    D2 = 2
    D3 = 3
    D4 = 4


class PathKind(Enum):
    DELANNOY = "D"
    HDELANNOY = "H"


class Step(Enum):
    EAST = (1, 0)
    NORTH = (0, 1)
    NORTHEAST = (1, 1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]


@dataclass(frozen=True)
class WeightTriple:
    """
    Exact weights of east, north and northeast steps, equivalently of the
    dominoes D1, D2 and D3. D4 always has weight 1.
    """

    w1: Rational = 1
    w2: Rational = 1
    w3: Rational = 1

    def __post_init__(self) -> None:
        for name in ("w1", "w2", "w3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def weight(self, first: int, second: int, third: int) -> Fraction:
        """
        w1**first * w2**second * w3**third, with 0**0 = 1.
        """
        return self.w1**first * self.w2**second * self.w3**third

    def __str__(self) -> str:
        return f"({self.w1},{self.w2},{self.w3})"


@dataclass(frozen=True)
class Domino:
    #: The two covered cells, bottom then top or left then right.
    cells: Tuple[Cell, Cell]
    orientation: Orientation
    dtype: DominoType


@dataclass(frozen=True)
class Tiling:
    dominoes: FrozenSet[Domino]
    #: (#D1, #D2, #D3, #D4)
    counts: Tuple[int, int, int, int] = field(init=False)

    def __post_init__(self) -> None:
        tally = [0, 0, 0, 0]
        for domino in self.dominoes:
            tally[domino.dtype.value - 1] += 1
        object.__setattr__(self, "counts", tuple(tally))

    def __len__(self) -> int:
        return len(self.dominoes)

    def __iter__(self) -> Iterator[Domino]:
        return iter(sorted(self.dominoes, key=lambda d: d.cells))

    def weight(self, w: WeightTriple) -> Fraction:
        return w.weight(*self.counts[:3])


@dataclass(frozen=True)
class PathFamilyParams:
    """
    The path family attached to the arithmetic partition
    lambda = (s(n-1)+r, s(n-2)+r, ..., r).

    Path j (1-based) runs from (-j, j) to (lambda_j - j, n) for Delannoy
    systems and to (lambda_j - j, n + 1) for H-Delannoy systems.
    """

    s: int
    r: int
    n: int
    kind: PathKind = PathKind.DELANNOY

    def __post_init__(self) -> None:
        if self.s < 0 or self.r < 0 or self.n < 0:
            raise ValueError(f"s, r and n must be nonnegative, got s={self.s}, r={self.r}, n={self.n}")

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(self.s * (self.n - j) + self.r for j in range(1, self.n + 1))

    def start(self, j: int) -> Cell:
        return (-j, j)

    def end(self, j: int) -> Cell:
        height = self.n if self.kind is PathKind.DELANNOY else self.n + 1
        return (self.parts[j - 1] - j, height)


@dataclass(frozen=True)
class PathSystem:
    #: Start point of each path, path 1 first.
    starts: Tuple[Cell, ...]
    #: Step sequence of each path, path 1 first.
    paths: Tuple[Tuple[Step, ...], ...]

    @property
    def step_counts(self) -> Tuple[int, int, int]:
        """
        (#East, #North, #NorthEast) over all paths.
        """
        steps = [step for path in self.paths for step in path]
        return (steps.count(Step.EAST), steps.count(Step.NORTH), steps.count(Step.NORTHEAST))

    def vertices(self) -> Tuple[Tuple[Cell, ...], ...]:
        systems = []
        for (x, y), path in zip(self.starts, self.paths):
            points = [(x, y)]
            for step in path:
                x, y = x + step.dx, y + step.dy
                points.append((x, y))
            systems.append(tuple(points))
        return tuple(systems)

    def ends(self) -> Tuple[Cell, ...]:
        return tuple(points[-1] for points in self.vertices())

    def is_nonintersecting(self) -> bool:
        seen = set()
        for points in self.vertices():
            if seen.intersection(points):
                return False
            seen.update(points)
        return True

    def weight(self, w: WeightTriple) -> Fraction:
        return w.weight(*self.step_counts)


@dataclass(frozen=True)
class KKSParams:
    """
    Parameters of the determinant of
    l^(j+b) * C(mi+j+c, mi+a) + C(mi-j+d, mi+a), 0 <= i, j < n.
    """

    m: int
    l: Rational
    a: int
    b: int
    c: int
    d: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        object.__setattr__(self, "l", Fraction(self.l))

    def with_size(self, n: int) -> "KKSParams":
        return KKSParams(self.m, self.l, self.a, self.b, self.c, self.d, n)


@dataclass(frozen=True)
class CofactorVector:
    #: c[j] = (-1)^(n-1+j) M[n-1, j] / M[n-1, n-1]
    values: Tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)


@dataclass
class CheckReport:
    """
    Outcome of one exact comparison.
    """

    #: Check identifier, e.g. ``main-d`` or ``holonomic-H2``.
    id: str
    #: Parameters the check ran with.
    params: Dict[str, Union[int, str]]
    #: One of ``pass``, ``fail`` or ``skipped``.
    status: str
    #: Left side of the identity; None when skipped.
    lhs: Optional[Fraction] = None
    #: Right side of the identity; None when skipped.
    rhs: Optional[Fraction] = None
    #: Wall time in milliseconds.
    millis: float = 0.0
    #: Why a check was skipped or raised.
    reason: Optional[str] = None

    @classmethod
    def compare(
        cls, id: str, params: Dict[str, Union[int, str]], lhs: Rational, rhs: Rational, millis: float = 0.0
    ) -> "CheckReport":
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(id, dict(params), "pass" if lhs == rhs else "fail", lhs, rhs, millis)

    @classmethod
    def skipped(cls, id: str, params: Dict[str, Union[int, str]], reason: str) -> "CheckReport":
        return cls(id, dict(params), "skipped", reason=reason)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def sort_key(self) -> Tuple[str, str]:
        return (self.id, ",".join(f"{k}={v}" for k, v in self.params.items()))
