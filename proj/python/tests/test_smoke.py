from fractions import Fraction

import pytest

import degloci

XYZ = ["x", "y", "z"]
PHI1 = [["x", "y", "0"], ["0", "y", "z"]]
PHI2 = [["x", "y", "0"], ["0", "x", "z"]]
MU = [["x", "y", "0"], ["y", "z", "x"]]


def test_groebner_and_dimension():
    basis = degloci.groebner_basis(["x", "y", "z"], ["x - y^2", "x - z^3"], order="lex")
    assert basis == ["-z^3 + x", "-z^3 + y^2"]
    assert degloci.dimension(XYZ, ["x*y", "x*z", "y*z"]) == 1


def test_fitting_ideals():
    assert degloci.ideal_equal(XYZ, degloci.fitting_ideal(XYZ, PHI1), ["x*y", "x*z", "y*z"])
    assert degloci.ideal_equal(XYZ, degloci.fitting_ideal(XYZ, PHI2), ["x^2", "x*z", "y*z"])


def test_blowup_and_charts():
    report = degloci.blowup_criterion(XYZ, MU)
    assert report["ok"]
    assert [s["codim"] for s in report["strata"]] == [2, 3]
    charts = degloci.charts(XYZ, PHI2)
    assert [c["chart"] for c in charts] == ["alpha", "beta", "gamma"]


def test_certificates():
    assert degloci.certify_matrix(XYZ, MU)["complete"]
    out = degloci.certify_ideal(["x", "y", "z", "w"], ["x*w - y^2 + z^3 + w^5"])
    assert not out["complete"]
    assert out["certificate"]["kind"] == "UnknownLeaf"


def test_closure():
    assert degloci.is_integrally_closed([[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    assert degloci.rrv_normal([[2, 0, 0], [1, 0, 1], [0, 1, 1]])
    assert sorted(degloci.integral_closure([[2, 0], [0, 2]])) == [[0, 2], [1, 1], [2, 0]]


def test_flips():
    assert degloci.flip_data(5, 2) == (7, 10)
    assert degloci.kappa_flip_ok(5, 2, "1/2")
    b = degloci.blowup_exponents(2, "1/2")
    assert b["bundle_exp"] == 0 and b["trivial_chain"]


def test_padic_small():
    out = degloci.estimate_pushforward("x*y", ["x", "y"], p=5, K=6, N=20000, seed=3)
    assert out["verdict"] is not None
    assert out["profile"]["N"] == 20000
    assert degloci.exact_monomial_density([1, 1], 5, 2) == Fraction(12, 5)
    assert degloci.exact_cone_density_at_zero(5, 2) == Fraction(29, 25)


def test_pipelines():
    assert degloci.verify_genus2(3)["summary"]["failed"] == 0
    report = degloci.verify_genus3("g3.subcase2b")
    assert report["instances"][0]["pass"]
    assert degloci.verify_genus3("g3.mutation")["summary"]["failed"] == 1


def test_errors():
    with pytest.raises(degloci.DeglociError):
        degloci.fitting_ideal(XYZ, [["0", "0", "0"], ["0", "0", "0"]])
    with pytest.raises(ValueError):
        degloci.flip_data(1, 1)
