"""Exact coefficient classes and the necessary-condition checks."""

from fractions import Fraction

import pytest

from harmonic_atlas import (
    GaussRational, Series, b2_bound_check, catalog_lookup, classify_harmonic,
    coeff_class, default_grid, halfplane_subordination_margin, parse_formula,
    rogosinski_coeff_bound, shear_real,
)

F = Fraction


def test_half_integer_class():
    s = Series([F(n + 1, 2) for n in range(20)])
    rep = coeff_class(s)
    assert rep.klass == "half_integer"
    assert rep.first_violation is None
    assert rep.is_half_integer and not rep.is_integer


def test_neither_class_first_violation():
    # h = -2 log(1-z) - z has coefficient 1/n from n >= 2: violation at 3
    h = Series([0, 1] + [F(1, n) for n in range(2, 12)])
    rep = coeff_class(h)
    assert rep.klass == "neither"
    assert rep.first_violation == (3, GaussRational(F(1, 3)))


def test_all_zero_series_is_integer():
    assert coeff_class(Series.zero(10)).klass == "integer"


def test_complex_coefficient_is_violation():
    s = Series([0, 1, GaussRational(0, F(1, 2))], order=4)
    rep = coeff_class(s)
    assert rep.klass == "neither"
    assert rep.first_violation[0] == 2


def test_upto_validation():
    with pytest.raises(ValueError):
        coeff_class(Series.zero(3), upto=9)


def test_classify_harmonic_f3():
    fm = catalog_lookup("f3_cv1").harmonic_map(40)
    rh, rg = classify_harmonic(fm)
    assert rh.klass == "half_integer" and rg.klass == "half_integer"


def test_classify_harmonic_koebe_shear_is_neither():
    fm = catalog_lookup("harmonic_koebe").harmonic_map(16)
    rh, rg = classify_harmonic(fm)
    assert rh.klass == "neither" and rg.klass == "neither"


def test_classify_identity_map():
    fm = catalog_lookup("identity").harmonic_map(8)
    rh, rg = classify_harmonic(fm)
    assert rh.klass == "integer" and rg.klass == "integer"


# -- |b2| bound -----------------------------------------------------------------

def test_b2_equality_for_linear_dilatation():
    fm = catalog_lookup("f3_cv1").harmonic_map(8)
    assert b2_bound_check(fm) == F(1, 4)
    fm17 = catalog_lookup("t4_conj_sq_plus").harmonic_map(8)
    assert b2_bound_check(fm17) == F(1, 4)


def test_b2_zero_for_conformal():
    assert b2_bound_check(catalog_lookup("identity").harmonic_map(8)) == 0


def test_b2_bound_all_harmonic_entries(catalog):
    for entry in catalog:
        if entry.omega is None:
            continue
        assert b2_bound_check(entry.harmonic_map(8)) <= F(1, 4)


# -- subordination margin -----------------------------------------------------------

def test_margin_zero_coanalytic_part(grid):
    margin = halfplane_subordination_margin(
        parse_formula("0z"), parse_formula("z/(1-z)"), grid)
    assert margin == pytest.approx(0.5, abs=1e-12)


def test_margin_f3_positive(grid):
    entry = catalog_lookup("t4_re_koebe_im_halfplane")
    phi = catalog_lookup("halfplane").h
    margin = halfplane_subordination_margin(entry.g, phi, grid)
    assert margin > 0


def test_margin_constructed_minimum(grid):
    # g'/phi' = -z: minimum of Re(-z) + 1/2 over the grid is 1/2 - r_max
    margin = halfplane_subordination_margin(
        parse_formula("-z^2/2"), parse_formula("z"), grid)
    assert margin == pytest.approx(0.5 - 0.999, abs=1e-12)


# -- coefficient bound for subordination to z/(1-z) ------------------------------

def test_rogosinski_geometric_series():
    s = parse_formula("z/(1-z)").series(24)
    assert rogosinski_coeff_bound(s) == 1


def test_rogosinski_f3_ratio():
    # g'/phi' for the half-plane shear equals z/(1-z): bound exactly 1
    fm = shear_real(parse_formula("z/(1-z)"), parse_formula("z"), 64)
    gp = fm.g_series.derivative()
    pp = (fm.h_series - fm.g_series).derivative()
    ratio = gp * pp.reciprocal()
    assert rogosinski_coeff_bound(ratio) <= 1


def test_rogosinski_zero_series():
    assert rogosinski_coeff_bound(Series.zero(12)) == 0
