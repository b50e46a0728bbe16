"""
Pictures of domains and tilings.

ASCII: one character per cell, top row first. Uncovered white cells are
``.``, uncovered gray cells ``#``, and a tiled cell shows its domino type
(``1`` to ``4``).

SVG: one square per cell (white or light gray), then one thick outline per
domino, colored by type. The cell (x, y) is drawn at screen position
(x - min_x, max_y - y) times the cell size.
"""
import xml.etree.ElementTree as ET
from typing import Dict, Optional

from aztecdet.dataclasses import Cell, Color, DominoType, Tiling
from aztecdet.shapes import AztecDomain, cell_color

__all__ = ["render", "render_ascii", "render_svg", "DOMINO_COLORS"]

CELL_SIZE = 20
MARGIN = 10
DOMINO_COLORS = {
    DominoType.D1: "#1f77b4",
    DominoType.D2: "#d62728",
    DominoType.D3: "#2ca02c",
    DominoType.D4: "#7f7f7f",
}
CELL_FILL = {Color.WHITE: "#ffffff", Color.GRAY: "#d9d9d9"}
ASCII_CELL = {Color.WHITE: ".", Color.GRAY: "#"}


def _cover(domain: AztecDomain, tiling: Optional[Tiling]) -> Dict[Cell, DominoType]:
    cover: Dict[Cell, DominoType] = {}
    if tiling is None:
        return cover
    for domino in tiling:
        for cell in domino.cells:
            if cell not in domain:
                raise ValueError(f"domino cell {cell} lies outside the domain")
            if cell in cover:
                raise ValueError(f"cell {cell} is covered twice")
            cover[cell] = domino.dtype
    return cover


def render_ascii(domain: AztecDomain, tiling: Optional[Tiling] = None) -> str:
    if not domain.cells:
        return ""
    cover = _cover(domain, tiling)
    xs = [x for x, _ in domain.cells]
    ys = [y for _, y in domain.cells]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        line = []
        for x in range(min(xs), max(xs) + 1):
            cell = (x, y)
            if cell in cover:
                line.append(str(cover[cell].value))
            elif cell in domain:
                line.append(ASCII_CELL[cell_color(cell)])
            else:
                line.append(" ")
        lines.append("".join(line).rstrip())
    return "\n".join(lines) + "\n"


def render_svg(domain: AztecDomain, tiling: Optional[Tiling] = None) -> str:
    _cover(domain, tiling)
    if domain.cells:
        min_x = min(x for x, _ in domain.cells)
        max_x = max(x for x, _ in domain.cells)
        min_y = min(y for _, y in domain.cells)
        max_y = max(y for _, y in domain.cells)
        width = (max_x - min_x + 1) * CELL_SIZE + 2 * MARGIN
        height = (max_y - min_y + 1) * CELL_SIZE + 2 * MARGIN
    else:
        min_x = max_y = 0
        width = height = 2 * MARGIN

    def corner(x: int, y: int):
        return MARGIN + (x - min_x) * CELL_SIZE, MARGIN + (max_y - y) * CELL_SIZE

    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "viewBox": f"0 0 {width} {height}",
            "width": str(width),
            "height": str(height),
        },
    )
    cells = ET.SubElement(root, "g", {"id": "cells", "stroke": "#000000", "stroke-width": "0.5"})
    for x, y in sorted(domain.cells):
        left, top = corner(x, y)
        ET.SubElement(
            cells,
            "rect",
            {"x": str(left), "y": str(top), "width": str(CELL_SIZE), "height": str(CELL_SIZE), "fill": CELL_FILL[cell_color((x, y))]},
        )
    if tiling is not None:
        dominoes = ET.SubElement(root, "g", {"id": "dominoes", "fill": "none", "stroke-width": "3"})
        for domino in tiling:
            (x0, y0), (x1, y1) = domino.cells
            # screen top-left corner sits on the upper cell
            left, top = corner(x0, max(y0, y1))
            ET.SubElement(
                dominoes,
                "rect",
                {
                    "x": str(left),
                    "y": str(top),
                    "width": str((x1 - x0 + 1) * CELL_SIZE),
                    "height": str((y1 - y0 + 1) * CELL_SIZE),
                    "stroke": DOMINO_COLORS[domino.dtype],
                    "class": domino.dtype.name,
                },
            )
    return ET.tostring(root, encoding="unicode")


def render(domain: AztecDomain, tiling: Optional[Tiling] = None, format: str = "ascii") -> str:
    """
    Draw ``domain``, optionally with ``tiling``, as ``ascii`` or ``svg`` text.
    """
    if format == "ascii":
        return render_ascii(domain, tiling)
    if format == "svg":
        return render_svg(domain, tiling)
    raise ValueError(f"unknown render format {format!r}, expected 'ascii' or 'svg'")
