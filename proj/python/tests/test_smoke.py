from fractions import Fraction

import pytest

import k3wall


def test_certify_pinned_genus():
    rep = k3wall.certify(2, 1, 8)
    assert rep["overall"] == "FAIL"
    failing = {c["id"] for c in rep["checks"] if c["verdict"] == "FAIL"}
    assert failing == {"C1", "C2"}


def test_min_genus_rank_two():
    res = k3wall.min_genus(2, 1, g_max=60, horizon=10, jobs=2)
    assert res["g_min"] == 16
    assert res["stable"] is True


def test_min_genus_not_found():
    assert k3wall.min_genus(2, 1, g_max=10, horizon=0)["g_min"] is None


def test_diagram_values_are_exact():
    d = k3wall.diagram(2, 1, 8, samples=3)
    assert k3wall.rational(d["theta"]) == Fraction(-6)
    labels = [b["label"] for b in d["b_values"]]
    assert labels[:2] == ["b1_star", "b2_star"]
    assert d["b_values"][1]["display"] == "5/12 ≈ 0.416667"
    assert len(d["gamma_samples"]) == 3


def test_polygon_and_lattice():
    p = k3wall.polygon(2, 1, 8)
    assert p["h"]["exact"] == "6"
    assert k3wall.compute_s(2, 1, 8) == 4
    assert k3wall.mukai_pairing((2, 1, 4), (2, 1, 4), 8) == -2


def test_bad_arguments_raise():
    with pytest.raises(ValueError):
        k3wall.certify(2, 1, 1)
    with pytest.raises(ValueError):
        k3wall.compute_s(4, 2, 8)
