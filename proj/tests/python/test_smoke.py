"""Smoke tests for the pydivsum extension module."""

import pydivsum as dv


def val(s: str) -> float:
    return float(s)


def test_arithmetic():
    assert dv.sigma(1, 12) == 28
    assert dv.sigma(5, 2) == 33
    assert dv.sigma(3, 27) == 20440
    assert dv.sigma(11, 97) == 97**11 + 1
    assert dv.primes_up_to(10) == [2, 3, 5, 7]
    assert dv.factorize(12) == [(2, 2), (3, 1)]
    assert dv.smooth_set(2, 10) == [1, 2, 4, 8]


def test_special_functions():
    re, im = dv.zeta("2", "0", 40)
    assert abs(val(re) - 1.6449340668482264) < 1e-12
    assert val(im) == 0.0
    re, im = dv.xi("0", "0", 40)
    assert abs(val(re) - 0.5) < 1e-30
    k0 = dv.bessel_k(0, "7", 40)
    assert abs(val(k0) - 4.248e-4) < 1e-6


def test_identity_verification():
    rep = dv.verify_identity("cor3", 5, -1, 40, "poly", 120)
    assert rep["pass"]
    assert rep["target"] == "1/504"
    assert val(rep["abs_error"]) < 1e-80
    rep = dv.verify_identity("constraint", 1, 0, 40, "1f1", 100)
    assert rep["pass"]
    assert val(rep["value"]) < 1e-60


def test_recovery():
    res = dv.recover(1, 8)
    rows = res["rows"]
    assert rows[0]["n"] == 2
    assert rows[0]["rounded"] == 3
    assert rows[0]["oracle"] == 3
    assert all(r["match"] for r in rows[:4])
    assert dv.vandermonde_det(4) == 48


def test_mellin_checks():
    defect = dv.j_pair_defect(1, 1, "0.5", "2.0", 20)
    assert val(defect) < 1e-20
    fe = dv.xi_functional_equation_defect(3, 1, "0.3", "1.7", 45)
    assert val(fe) < 1e-12


def test_partial_sums():
    vals = dv.partial_sums("bessel0", 0, [10], 120)
    v = val(vals[0])
    assert 1.9e-23 < v < 2.1e-23
