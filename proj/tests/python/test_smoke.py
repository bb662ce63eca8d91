from fractions import Fraction

import pytest

import wlpw


def test_enumeration_counts():
    assert len(wlpw.enumerate(2, 6)) == 21
    assert len(wlpw.enumerate(1, 5)) == 5
    assert wlpw.enumerate(2, 5) == []


def test_named_cell():
    v1 = wlpw.named_diagram("V1")
    assert wlpw.diagram_name(v1) == "V1"
    cell = wlpw.cell(v1)
    assert cell["dim"] == 6
    assert cell["bases"] == wlpw.le_bases(cell["le"], 2, 6)
    assert wlpw.is_admissible(v1)


def test_catalog_and_render():
    assert wlpw.catalog_size(2, 6) == 473
    assert wlpw.render_le("0+0+/++++", 2, 6) == "0 + 0 +\n+ + + +\n"


def test_boundary_census():
    assert wlpw.boundary_census() == {"multi": 38, "e_pair": 6, "single": 6}


def test_homology_routes_agree():
    order = wlpw.homology(2, 6)
    assert order["betti"] == [1, 0, 0, 0, 0, 1, 0]
    assert wlpw.homology(2, 6, route="cellular")["betti"] == order["betti"]
    with pytest.raises(ValueError):
        wlpw.homology(2, 6, route="other")


def test_amplitude():
    v1 = wlpw.named_diagram("V1")
    assert len(wlpw.r_denominator(v1)) == 7
    assert wlpw.kernel_vanishes(v1)
    total = sum((wlpw.integrand(d) for d in wlpw.enumerate(2, 6)), Fraction(0))
    assert total != 0
    assert isinstance(wlpw.integrand(v1), Fraction)


def test_report(tmp_path):
    result = wlpw.write_report("table1", tmp_path)
    assert result["fixtures_match"]
    assert (tmp_path / "table1.csv").exists()
