"""
Tilings of Aztec-type domains as nonintersecting lattice path systems.

Every D1, D2 and D3 domino contributes one step, read off its gray cell g:

    P(x, y) = ((x + y - 1) / 2, (x - y + 1) / 2)

    D1 (gray bottom)  P(g) -> P(g + (1, 1))    east
    D2 (gray top)     P(g) -> P(g + (1, -1))   north
    D3 (gray left)    P(g) -> P(g + (2, 0))    northeast

D4 dominoes contribute nothing. The steps chain into n paths starting at
P(0, 1 - 2j) = (-j, j).
"""
from typing import Dict, Optional, Tuple

from aztecdet.dataclasses import Cell, Color, DomainKind, Domino, DominoType, PathFamilyParams, PathKind, PathSystem, Step, Tiling
from aztecdet.shapes import AztecDomain, arithmetic_partition, aztec_domain, cell_color

__all__ = ["lattice_point", "domino_step", "family_domain", "tiling_to_paths", "phi", "phi_hat"]

_STEP_OF = {DominoType.D1: Step.EAST, DominoType.D2: Step.NORTH, DominoType.D3: Step.NORTHEAST}


def lattice_point(cell: Cell) -> Cell:
    x, y = cell
    if cell_color(cell) is not Color.GRAY:
        raise ValueError(f"only gray cells map to lattice points, got {cell}")
    return ((x + y - 1) // 2, (x - y + 1) // 2)


def domino_step(domino: Domino) -> Optional[Tuple[Cell, Step]]:
    """
    (start point, step) of a D1, D2 or D3 domino; None for D4.
    """
    step = _STEP_OF.get(domino.dtype)
    if step is None:
        return None
    gray = domino.cells[0] if cell_color(domino.cells[0]) is Color.GRAY else domino.cells[1]
    return lattice_point(gray), step


def family_domain(params: PathFamilyParams) -> AztecDomain:
    """
    The domain whose tilings correspond to the path systems of ``params``:
    Type 1 for Delannoy families, Type 2 for H-Delannoy families.
    """
    kind = DomainKind.TYPE1 if params.kind is PathKind.DELANNOY else DomainKind.TYPE2
    return aztec_domain(kind, arithmetic_partition(params.s, params.r, params.n))


def _check_cover(tiling: Tiling, domain: AztecDomain) -> None:
    covered = set()
    for domino in tiling.dominoes:
        for cell in domino.cells:
            if cell not in domain:
                raise ValueError(f"malformed tiling: cell {cell} is not in the domain")
            if cell in covered:
                raise ValueError(f"malformed tiling: cell {cell} is covered twice")
            covered.add(cell)
    if len(covered) != len(domain):
        raise ValueError(f"malformed tiling: {len(domain) - len(covered)} cells are uncovered")


def tiling_to_paths(tiling: Tiling, params: PathFamilyParams, domain: Optional[AztecDomain] = None) -> PathSystem:
    """
    The path system of a tiling of ``family_domain(params)``.

    Step counts are preserved: #D1 = #east, #D2 = #north, #D3 = #northeast.

    Raises
    ------
    ValueError
        If the tiling does not tile the domain, or its steps do not chain
        into paths with the expected end points.
    """
    domain = family_domain(params) if domain is None else domain
    _check_cover(tiling, domain)
    steps: Dict[Cell, Step] = {}
    for domino in tiling.dominoes:
        found = domino_step(domino)
        if found is not None:
            start, step = found
            steps[start] = step

    starts = tuple(params.start(j) for j in range(1, params.n + 1))
    paths = []
    for j, (x, y) in enumerate(starts, 1):
        path = []
        while (x, y) in steps:
            step = steps.pop((x, y))
            path.append(step)
            x, y = x + step.dx, y + step.dy
        if (x, y) != params.end(j):
            raise ValueError(f"malformed tiling: path {j} ends at {(x, y)} instead of {params.end(j)}")
        paths.append(tuple(path))
    if steps:
        raise ValueError(f"malformed tiling: {len(steps)} steps are not on any path")
    return PathSystem(starts, tuple(paths))


def phi(tiling: Tiling, params: PathFamilyParams, domain: Optional[AztecDomain] = None) -> PathSystem:
    """
    Type 1 tiling to Delannoy path system.
    """
    if params.kind is not PathKind.DELANNOY:
        raise ValueError("phi maps Type 1 tilings to Delannoy path systems; use phi_hat for H-Delannoy")
    return tiling_to_paths(tiling, params, domain)


def phi_hat(tiling: Tiling, params: PathFamilyParams, domain: Optional[AztecDomain] = None) -> PathSystem:
    """
    Type 2 tiling to H-Delannoy path system.
    """
    if params.kind is not PathKind.HDELANNOY:
        raise ValueError("phi_hat maps Type 2 tilings to H-Delannoy path systems; use phi for Delannoy")
    return tiling_to_paths(tiling, params, domain)
