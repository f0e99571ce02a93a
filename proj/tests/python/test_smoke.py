import pytest

import tightsfs


def test_continued_fractions():
    assert tightsfs.neg_cf("-3/5") == [-1, -3, -2]
    assert tightsfs.neg_cf("-5/3", strict=True) == [-2, -3]
    assert tightsfs.eval_cf([-1, -3, -2]) == (-3, 5)
    assert tightsfs.convergents([-1, -2]) == {"p": [1, 2], "q": [1, 1], "u": 1, "v": 1}
    with pytest.raises(tightsfs.TightsfsError, match="StrictModeImpossible"):
        tightsfs.neg_cf("-1/2", strict=True)


def test_slopes_and_fibers():
    assert tightsfs.act([2, -1, 1, 0], "inf") == "0"
    assert tightsfs.act([2, -1, 1, 0], "1/3") == "3/5"
    assert tightsfs.euler_number([(2, 7), (2, 1), (2, 1), (2, 1)]) == -7
    f = tightsfs.fiber_data(5, 3)
    assert f["cf"] == [-1, -3, -2]
    assert 5 * f["v"] - 3 * f["u"] == 1
    assert f["boundary_slope"] == "-3/2"


def test_honda_counts():
    assert tightsfs.solid_torus_count("-5/2") == 4
    assert tightsfs.solid_torus_count("1/-3") == 1
    assert tightsfs.toric_annulus_count("0", "2") == 3
    assert tightsfs.toric_annulus_count("-1", "-1") == "HOLONOMY_FAMILY"
    assert [tightsfs.shirt_count(s) for s in range(4)] == [3, 4, 5, 6]
    audit = tightsfs.shirt_count_audit(1)
    assert (audit["raw"], audit["sign_matched"], audit["classes"]) == (6, 5, 4)


def test_gluing_counts():
    g = tightsfs.gluing_counts()
    assert g["pants_states"] == 9
    assert g["configurations"] == 8
    assert g["torsion_classes"] == 1
    assert g["classes"] == 3
    assert sorted(g["class_euler"]) == [-2, 0, 2]


def test_surgery():
    assert tightsfs.h1_order("-1/2,-1/2,-1/2,-1/2") == 32
    d = tightsfs.diagram("-3/5,-1/2,-1/2,-1/2")
    assert d["central"] == -4
    assert d["chains"][0] == [-3, -2]


def test_classify():
    r = tightsfs.classify("-1/2,-1/2,-1/2,-1/2")
    assert r["count_zero_torsion"] == 3
    assert r["certificates"]["bounds_equal"]
    assert sorted(v[0] for v in r["realization_vectors"]) == [-2, 0, 2]
    assert tightsfs.classify("-1/2,-1/2,-1/2,-3/5")["count_zero_torsion"] == 6


def test_unsupported_regime():
    with pytest.raises(tightsfs.UnsupportedRegime, match="do not match for e0 > -4"):
        tightsfs.classify("-1/2,-1/2,-1/2,1/2")
    with pytest.raises(tightsfs.TightsfsError, match="InvalidFiber"):
        tightsfs.classify("-1/2,-1/2,-1/2,-2/4")


def test_verify_sweep():
    s = tightsfs.verify_sweep(4)
    assert s["cases"] > 0
    assert s["failed"] == 0
