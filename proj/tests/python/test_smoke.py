import math

import pytest

import poncelet


def test_triangle_locus():
    assert poncelet.locus(3) == "x^2 + y^2 - 1"


def test_quadrilateral_unique_p():
    assert poncelet.unique_p_for_4("1/2,0") == "3/2"
    c = poncelet.classify(4, "1/2,0")
    assert c["count"] == 1
    assert c["roots"][0]["p"] == pytest.approx(1.5)


def test_pentagon_double_root():
    c = poncelet.classify(5, "1/2,1/2")
    assert c["region"] == "Gamma5"
    assert c["roots"][0]["multiplicity"] == 2


def test_isoperiodic():
    assert poncelet.isoperiodic("0,0") == 4
    assert poncelet.isoperiodic("3/5,4/5") == 3
    assert poncelet.isoperiodic("1/3,1/7") is None


def test_trace_closes():
    r = poncelet.trace(0.5, 0.0, 1.5, 4)
    assert r["closed"]
    assert r["period"] == 4
    assert len(r["vertices"]) == 5
    assert poncelet.closes_after(0.5, 0.0, 1.5, 4)
    assert not poncelet.closes_after(0.5, 0.0, 1.4, 4)


def test_quartic_shape():
    # (p - 1)^2 (p^2 + 1)
    assert poncelet.quartic_shape(["1", "-2", "2", "-2", "1"]) == "RealDoubleComplexPair"


def test_painleve():
    s = poncelet.painleve(3, 0.3)
    assert s["residual_y0"] < 1e-9
    assert s["residual_y"] < 1e-9
    assert math.isfinite(abs(s["x"]))


def test_errors():
    with pytest.raises(ValueError):
        poncelet.unique_p_for_4("0,0")
    with pytest.raises(ValueError):
        poncelet.painleve(3, 0.0)


def test_identities_listed():
    ids = poncelet.verify_identities()
    assert {i["group"] for i in ids} >= {"locus", "discriminant"}
