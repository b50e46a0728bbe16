"""
Partitions, their boundary words and the Aztec-type domains cut out of the
prototype domains.

A cell (x, y) is the unit square with lower-left corner (x, y). It lies on
diagonal k = x - y, and cells on even diagonals are white, cells on odd
diagonals gray. The prototype domain with parameters (M, N) keeps, on each
diagonal k = 0..N, the cells (i, i - k) for 0 <= i < M + ceil(k / 2).
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from aztecdet.dataclasses import BoundarySymbol, Cell, Color, DomainKind

__all__ = [
    "Partition",
    "AztecDomain",
    "arithmetic_partition",
    "boundary_encoding",
    "decode_boundary",
    "encoding_string",
    "prototype_domain",
    "aztec_type1",
    "aztec_type2",
    "aztec_domain",
    "cell_color",
]


@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing sequence of nonnegative integers; zero parts are kept, so
    the length n is part of the data.
    """

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        """
        |lambda|, the sum of the parts.
        """
        return sum(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def part(self, j: int) -> int:
        """
        lambda_j with 1-based j; lambda_(n+1) = 0.
        """
        return self.parts[j - 1] if j <= self.n else 0

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def cell_color(cell: Cell) -> Color:
    x, y = cell
    return Color.WHITE if (x - y) % 2 == 0 else Color.GRAY


@dataclass(frozen=True)
class AztecDomain:
    cells: FrozenSet[Cell]
    #: None for an uncut prototype.
    kind: Optional[DomainKind] = None
    partition: Optional[Partition] = None

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __iter__(self):
        return iter(sorted(self.cells))

    def color(self, cell: Cell) -> Color:
        if cell not in self.cells:
            raise KeyError(f"cell {cell} is not in the domain")
        return cell_color(cell)

    def colors(self) -> Dict[Cell, Color]:
        return {cell: cell_color(cell) for cell in self.cells}

    def count(self, color: Color) -> int:
        return sum(1 for cell in self.cells if cell_color(cell) is color)

    def diagonal(self, k: int) -> List[Cell]:
        return sorted(cell for cell in self.cells if cell[0] - cell[1] == k)


def arithmetic_partition(s: int, r: int, n: int) -> Partition:
    """
    (s(n-1)+r, s(n-2)+r, ..., r)

    Example
    -------
    >>> arithmetic_partition(2, 1, 4)
    Partition(parts=(7, 5, 3, 1))
    """
    return Partition(tuple(s * (n - j) + r for j in range(1, n + 1)))


def boundary_encoding(lam: Partition) -> List[BoundarySymbol]:
    """
    The boundary word of the Young diagram of lam: reading j = n down to 1,
    lambda_j - lambda_(j+1) circles (east edges) followed by one bullet (north
    edge). The word has lambda_1 circles and n bullets.
    """
    word: List[BoundarySymbol] = []
    for j in range(lam.n, 0, -1):
        word.extend([BoundarySymbol.CIRCLE] * (lam.part(j) - lam.part(j + 1)))
        word.append(BoundarySymbol.BULLET)
    return word


def decode_boundary(word: Iterable[BoundarySymbol]) -> Partition:
    """
    Inverse of :func:`boundary_encoding`. Trailing circles are not part of any
    boundary word and raise ValueError.
    """
    word = list(word)
    if word and word[-1] is not BoundarySymbol.BULLET:
        raise ValueError("boundary word must end with a bullet")
    parts: List[int] = []
    east = 0
    for symbol in word:
        if symbol is BoundarySymbol.CIRCLE:
            east += 1
        else:
            parts.append(east)
    return Partition(tuple(reversed(parts)))


def encoding_string(word: Sequence[BoundarySymbol]) -> str:
    return "".join(symbol.value for symbol in word)


def prototype_domain(M: int, N: int) -> AztecDomain:
    """
    Uncut prototype: diagonal k = 0..N holds M + ceil(k/2) cells.
    """
    cells = set()
    for k in range(N + 1):
        for i in range(M + (k + 1) // 2):
            cells.add((i, i - k))
    return AztecDomain(frozenset(cells))


def _cut(lam: Partition, N: int, removed: BoundarySymbol, kind: DomainKind) -> AztecDomain:
    prototype = prototype_domain(lam.first, N)
    word = boundary_encoding(lam)
    last = lam.first + (N + 1) // 2
    if len(word) != last:
        raise AssertionError(f"last diagonal holds {last} cells but the boundary word has {len(word)} symbols")
    # symbol t marks cell (t, t - N), counted from the bottom-left
    doomed = {(t, t - N) for t, symbol in enumerate(word) if symbol is removed}
    return AztecDomain(prototype.cells - doomed, kind, lam)


def aztec_type1(lam: Partition) -> AztecDomain:
    """
    Prototype (lambda_1, 2n - 1) with the bullet cells of its last diagonal removed.
    """
    if lam.n == 0:
        return AztecDomain(frozenset(), DomainKind.TYPE1, lam)
    return _cut(lam, 2 * lam.n - 1, BoundarySymbol.BULLET, DomainKind.TYPE1)


def aztec_type2(lam: Partition) -> AztecDomain:
    """
    Prototype (lambda_1, 2n) with the circle cells of its last diagonal removed.
    """
    return _cut(lam, 2 * lam.n, BoundarySymbol.CIRCLE, DomainKind.TYPE2)


def aztec_domain(kind: DomainKind, lam: Partition) -> AztecDomain:
    return aztec_type1(lam) if kind is DomainKind.TYPE1 else aztec_type2(lam)
