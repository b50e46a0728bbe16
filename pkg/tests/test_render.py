import xml.etree.ElementTree as ET

import pytest

from aztecdet.dataclasses import Tiling
from aztecdet.render import DOMINO_COLORS, render
from aztecdet.shapes import AztecDomain, Partition, aztec_type1, aztec_type2
from aztecdet.tilings import enumerate_tilings, make_domino

SVG = "{http://www.w3.org/2000/svg}"


def test_ascii_domain():
    assert render(aztec_type1(Partition((1,)))) == ".\n#\n"
    assert render(aztec_type2(Partition((1,)))) == ".#\n#.\n"


def test_ascii_tiling():
    domain = aztec_type1(Partition((1,)))
    tiling = next(enumerate_tilings(domain))
    assert render(domain, tiling) == "1\n1\n"


def test_ascii_empty():
    assert render(AztecDomain(frozenset())) == ""


def test_ascii_fig6(type1_tiling):
    params, tiling, _ = type1_tiling
    domain = aztec_type1(Partition(params.parts))
    picture = render(domain, tiling)
    assert "." not in picture and "#" not in picture
    assert sum(picture.count(str(d)) for d in range(1, 5)) == 68


def test_svg(type2_tiling):
    params, tiling, _ = type2_tiling
    domain = aztec_type2(Partition(params.parts))
    root = ET.fromstring(render(domain, tiling, "svg"))
    assert root.tag == f"{SVG}svg"
    groups = {g.get("id"): g for g in root.iter(f"{SVG}g")}
    assert len(groups["cells"]) == 76
    dominoes = list(groups["dominoes"])
    assert len(dominoes) == 38
    assert sum(1 for rect in dominoes if rect.get("class") == "D4") == 19
    assert {rect.get("stroke") for rect in dominoes} == set(DOMINO_COLORS.values())


def test_render_rejects_bad_tilings():
    domain = aztec_type1(Partition((1,)))
    outside = Tiling(frozenset({make_domino((0, 0), (1, 0))}))
    with pytest.raises(ValueError, match="outside"):
        render(domain, outside)
    with pytest.raises(ValueError, match="unknown render format"):
        render(domain, format="png")
