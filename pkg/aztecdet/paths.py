"""
Weighted Delannoy and H-Delannoy numbers, the LGV matrices of the arithmetic
path families and a brute-force oracle for nonintersecting path systems.
"""
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from aztecdet.dataclasses import Cell, PathFamilyParams, PathKind, PathSystem, Step, WeightTriple
from aztecdet.exact_arith import binomial
from aztecdet.linalg import ExactMatrix
from aztecdet.logging import logger
from aztecdet.tilings import EnumerationLimitError

__all__ = [
    "DEFAULT_PATH_CAP",
    "DelannoyTable",
    "delannoy",
    "h_delannoy",
    "lgv_entry",
    "lgv_matrix",
    "binomial_gv_matrix",
    "single_paths",
    "enumerate_path_systems",
    "path_census",
    "brute_force_path_count",
]

#: Largest number of partial path tuples the brute-force oracle may visit.
DEFAULT_PATH_CAP = 1_000_000

StepCounts = Tuple[int, int, int]


class DelannoyTable:
    """
    Memo table of D_w(i, j), the weighted count of lattice paths from (0, 0)
    to (i, j) with east, north and northeast steps of weights w1, w2, w3.

    D(0, 0) = 1, D = 0 off the first quadrant and
    D(i, j) = w1 D(i-1, j) + w2 D(i, j-1) + w3 D(i-1, j-1).
    Negative indices are answered without touching the table.
    """

    def __init__(self, w: WeightTriple):
        self.w = w
        self._memo: Dict[Tuple[int, int], Fraction] = {(0, 0): Fraction(1)}

    def _get(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            return Fraction(0)
        return self._memo[(i, j)]

    def __call__(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            return Fraction(0)
        if (i, j) not in self._memo:
            w1, w2, w3 = self.w.w1, self.w.w2, self.w.w3
            for a in range(i + 1):
                for b in range(j + 1):
                    if (a, b) not in self._memo:
                        self._memo[(a, b)] = w1 * self._get(a - 1, b) + w2 * self._get(a, b - 1) + w3 * self._get(a - 1, b - 1)
        return self._memo[(i, j)]

    def hat(self, i: int, j: int) -> Fraction:
        """
        H_w(i, j) = D_w(i, j+1) - w1 D_w(i-1, j+1): paths to (i, j+1) whose last step is not east.
        """
        if j < 0:
            return Fraction(0)
        return self(i, j + 1) - self.w.w1 * self(i - 1, j + 1)


def delannoy(i: int, j: int, w: WeightTriple = WeightTriple()) -> Fraction:
    """
    Weighted Delannoy number D_w(i, j).

    Example
    -------
    >>> delannoy(2, 2)
    Fraction(13, 1)
    """
    return DelannoyTable(w)(i, j)


def h_delannoy(i: int, j: int, w: WeightTriple = WeightTriple()) -> Fraction:
    """
    Weighted H-Delannoy number H_w(i, j) = D_w(i, j+1) - w1 D_w(i-1, j+1).
    """
    return DelannoyTable(w).hat(i, j)


def lgv_entry(params: PathFamilyParams, w: WeightTriple, i: int, j: int, table: Optional[DelannoyTable] = None) -> Fraction:
    """
    Entry (i, j) of the LGV matrix. Pass ``table`` to share one memo table
    between the entries of a single evaluation; it must have weights ``w``.
    """
    if table is None:
        table = DelannoyTable(w)
    elif table.w != w:
        raise ValueError(f"memo table has weights {table.w}, expected {w}")
    x = (params.s + 1) * i - j + params.r
    return table(x, j) if params.kind is PathKind.DELANNOY else table.hat(x, j)


def lgv_matrix(params: PathFamilyParams, w: WeightTriple = WeightTriple()) -> ExactMatrix:
    """
    The n x n matrix D_w((s+1)i - j + r, j), or H_w(...) for H-Delannoy
    families, whose determinant counts the nonintersecting path systems.
    The memo table lives for this call only.
    """
    table = DelannoyTable(w)
    return ExactMatrix.from_function(params.n, lambda i, j: lgv_entry(params, w, i, j, table))


def binomial_gv_matrix(s: int, r: int, n: int) -> ExactMatrix:
    """
    C((s+1)i + r, j) for 0 <= i, j < n; its determinant is (s+1)^C(n,2).
    """
    return ExactMatrix.from_function(n, lambda i, j: binomial((s + 1) * i + r, j))


def single_paths(start: Cell, end: Cell, kind: PathKind = PathKind.DELANNOY) -> List[Tuple[Step, ...]]:
    """
    All step sequences from ``start`` to ``end``; H-Delannoy paths may not end
    with an east step. start == end gives the single empty path.
    """
    found: List[Tuple[Step, ...]] = []
    steps: List[Step] = []

    def walk(x: int, y: int) -> None:
        if (x, y) == end:
            if kind is PathKind.DELANNOY or not steps or steps[-1] is not Step.EAST:
                found.append(tuple(steps))
            return
        for step in Step:
            nx, ny = x + step.dx, y + step.dy
            if nx <= end[0] and ny <= end[1]:
                steps.append(step)
                walk(nx, ny)
                steps.pop()

    walk(*start)
    return found


def enumerate_path_systems(params: PathFamilyParams, cap: Optional[int] = None) -> Iterator[PathSystem]:
    """
    Every tuple of pairwise vertex-disjoint paths, path j from params.start(j)
    to params.end(j).

    Raises
    ------
    EnumerationLimitError
        If more than ``cap`` partial tuples are visited.
    """
    cap = DEFAULT_PATH_CAP if cap is None else cap
    n = params.n
    starts = tuple(params.start(j) for j in range(1, n + 1))
    options = []
    for j, start in enumerate(starts, 1):
        paths = single_paths(start, params.end(j), params.kind)
        options.append([(path, frozenset(PathSystem((start,), (path,)).vertices()[0])) for path in paths])
    visited = 0
    chosen: List[Tuple[Step, ...]] = []
    occupied: set = set()

    def extend(j: int) -> Iterator[PathSystem]:
        nonlocal visited
        if j == n:
            yield PathSystem(starts, tuple(chosen))
            return
        for path, points in options[j]:
            visited += 1
            if visited > cap:
                raise EnumerationLimitError(f"path enumeration visited more than {cap} partial systems")
            if occupied.isdisjoint(points):
                chosen.append(path)
                occupied.update(points)
                yield from extend(j + 1)
                occupied.difference_update(points)
                chosen.pop()

    yield from extend(0)


def path_census(params: PathFamilyParams, cap: Optional[int] = None) -> Dict[StepCounts, int]:
    """
    Number of nonintersecting path systems for each (#East, #North, #NorthEast).
    """
    census: Counter = Counter(system.step_counts for system in enumerate_path_systems(params, cap))
    logger.debug(f"path census for {params}: {sum(census.values())} systems")
    return dict(census)


def brute_force_path_count(params: PathFamilyParams, w: WeightTriple = WeightTriple(), cap: Optional[int] = None) -> Fraction:
    """
    Weighted count of nonintersecting path systems by exhaustive enumeration,
    an oracle independent of the LGV determinant.
    """
    return sum((mult * w.weight(*counts) for counts, mult in path_census(params, cap).items()), Fraction(0))
