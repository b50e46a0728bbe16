"""
Brute-force domino tilings of Aztec-type domains.

Tilings are found by depth-first search: the lexicographically smallest
uncovered cell (x, y) is paired with (x, y + 1) or (x + 1, y), in that
order. Its lower and left neighbours are always covered already, so every
tiling is produced exactly once.
"""
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from aztecdet.dataclasses import Cell, Color, Domino, DominoType, Orientation, Tiling, WeightTriple
from aztecdet.logging import logger
from aztecdet.shapes import AztecDomain, cell_color

__all__ = [
    "DEFAULT_CELL_CAP",
    "EnumerationLimitError",
    "make_domino",
    "enumerate_tilings",
    "tiling_census",
    "count_tilings",
    "weighted_tiling_count",
    "census_weight",
]

#: Largest domain, in cells, the enumerator accepts by default.
DEFAULT_CELL_CAP = 80

TypeCounts = Tuple[int, int, int, int]


class EnumerationLimitError(RuntimeError):
    """
    Raised when a brute-force enumeration would exceed its configured cap.
    """

    def __init__(self, message: str = ""):
        super().__init__(message)


def make_domino(first: Cell, second: Cell) -> Domino:
    """
    Classify the domino covering two adjacent cells.

    Vertical with gray bottom is D1, vertical with gray top D2, horizontal with
    gray left D3 and horizontal with white left D4.
    """
    first, second = sorted((first, second))
    (x0, y0), (x1, y1) = first, second
    if x0 == x1 and y1 == y0 + 1:
        dtype = DominoType.D1 if cell_color(first) is Color.GRAY else DominoType.D2
        return Domino((first, second), Orientation.VERTICAL, dtype)
    if y0 == y1 and x1 == x0 + 1:
        dtype = DominoType.D3 if cell_color(first) is Color.GRAY else DominoType.D4
        return Domino((first, second), Orientation.HORIZONTAL, dtype)
    raise ValueError(f"cells {first} and {second} are not adjacent")


def _check_cap(domain: AztecDomain, cap: Optional[int]) -> None:
    cap = DEFAULT_CELL_CAP if cap is None else cap
    if len(domain) > cap:
        raise EnumerationLimitError(f"domain has {len(domain)} cells, the enumeration cap is {cap}")


def _search(domain: AztecDomain) -> Iterator[Tuple[List[Domino], List[int]]]:
    """
    Yield (placed dominoes, type counts) for every tiling. Both lists are
    reused between yields.
    """
    order = sorted(domain.cells)
    cells = domain.cells
    if domain.count(Color.WHITE) != domain.count(Color.GRAY):
        return
    candidates: Dict[Cell, List[Domino]] = {}
    for x, y in order:
        candidates[(x, y)] = [make_domino((x, y), p) for p in ((x, y + 1), (x + 1, y)) if p in cells]

    covered = set()
    placed: List[Domino] = []
    counts = [0, 0, 0, 0]

    def step(index: int) -> Iterator[Tuple[List[Domino], List[int]]]:
        while index < len(order) and order[index] in covered:
            index += 1
        if index == len(order):
            yield placed, counts
            return
        cell = order[index]
        for domino in candidates[cell]:
            partner = domino.cells[1]
            if partner in covered:
                continue
            covered.update(domino.cells)
            placed.append(domino)
            counts[domino.dtype.value - 1] += 1
            yield from step(index + 1)
            counts[domino.dtype.value - 1] -= 1
            placed.pop()
            covered.difference_update(domino.cells)

    yield from step(0)


def enumerate_tilings(domain: AztecDomain, cap: Optional[int] = None) -> Iterator[Tiling]:
    """
    Every domino tiling of ``domain``, each exactly once.

    The empty domain has one (empty) tiling.

    Raises
    ------
    EnumerationLimitError
        If the domain has more cells than ``cap`` (DEFAULT_CELL_CAP by default).
    """
    _check_cap(domain, cap)
    for placed, _ in _search(domain):
        yield Tiling(frozenset(placed))


def tiling_census(domain: AztecDomain, cap: Optional[int] = None) -> Dict[TypeCounts, int]:
    """
    Number of tilings for each (#D1, #D2, #D3, #D4).
    """
    _check_cap(domain, cap)
    census: Counter = Counter()
    for _, counts in _search(domain):
        census[tuple(counts)] += 1
    logger.debug(f"tiling census of a {len(domain)}-cell domain: {sum(census.values())} tilings")
    return dict(census)


def census_weight(census: Dict[TypeCounts, int], w: WeightTriple) -> Fraction:
    return sum((mult * w.weight(*counts[:3]) for counts, mult in census.items()), Fraction(0))


def count_tilings(domain: AztecDomain, cap: Optional[int] = None) -> int:
    return sum(tiling_census(domain, cap).values())


def weighted_tiling_count(domain: AztecDomain, w: WeightTriple, cap: Optional[int] = None) -> Fraction:
    """
    Sum over tilings T of w1^#D1(T) w2^#D2(T) w3^#D3(T); D4 has weight 1.
    """
    return census_weight(tiling_census(domain, cap), w)
