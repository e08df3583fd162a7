"""Exact series arithmetic, checked against independent oracles."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonic_atlas import GaussRational, Series, ZeroConstantTerm, gauss
from oracles import binomial_inverse_power, long_division_series

F = Fraction


def S(*coeffs, order=None):
    return Series(coeffs, order=order)


# ---------------------------------------------------------------------------
# GaussRational
# ---------------------------------------------------------------------------

def test_gauss_field_ops():
    a = GaussRational(F(1, 2), F(-1, 3))
    b = GaussRational(F(2), F(1, 5))
    assert a + b == GaussRational(F(5, 2), F(-2, 15))
    assert (a * b) / b == a
    assert a - a == GaussRational(0)
    assert -a + a == 0


def test_gauss_conjugation_involution():
    a = GaussRational(F(3, 7), F(5, 2))
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0
    assert a.abs2() == F(9, 49) + F(25, 4)


def test_gauss_pow_and_i():
    i = GaussRational(0, 1)
    assert i ** 2 == -1
    assert i ** 4 == 1
    assert (1 + i) ** 2 == 2 * i


def test_gauss_literals():
    assert GaussRational(F(1, 2), F(-1, 3)).literal() == "1/2-1/3 i"
    assert GaussRational(3).literal() == "3"
    assert GaussRational(0, 1).literal() == "i"


# ---------------------------------------------------------------------------
# Series: spec'd operation examples
# ---------------------------------------------------------------------------

def test_add_cancellation():
    one_plus = S(1, 1, order=8)
    one_minus = S(1, -1, order=8)
    assert one_plus + one_minus == S(2, order=8)


def test_add_identity():
    geo = Series([1] * 9)
    assert geo + Series.zero(8) == geo


def test_add_shifted_koebe_pattern():
    # z/(1-z)^2 + z/(1-z) has coefficients n + 1 for n >= 1: twice the
    # analytic part of the half-integer map built from the half-plane map.
    koebe = Series([n for n in range(11)])
    halfplane = Series([0] + [1] * 10)
    total = koebe + halfplane
    assert [total.coeff(n) for n in range(1, 11)] == [gauss(n + 1) for n in range(1, 11)]


def test_mul_geometric_inverse():
    one_minus = S(1, -1, order=10)
    geo = Series([1] * 11)
    assert one_minus * geo == Series.one(10)


def test_mul_monomials():
    z = Series.var(4)
    assert z * z == S(0, 0, 1, order=4)


def test_mul_against_long_division_oracle():
    # (1 - z + z^2) * series(z / (1 - z + z^2)) == z
    den = [F(1), F(-1), F(1)]
    div = long_division_series([F(0), F(1)], den, 12)
    s = Series(div)
    assert Series(den, order=12) * s == Series.var(12)


def test_reciprocal_geometric():
    assert S(1, -1, order=10).reciprocal() == Series([1] * 11)


def test_reciprocal_binomial_oracle():
    # 1/(1+z)^2 from the reciprocal of (1 + 2z + z^2)
    rec = S(1, 2, 1, order=12).reciprocal()
    assert list(rec.coeffs) == [gauss(c) for c in binomial_inverse_power(1, 2, 12)]


def test_reciprocal_of_phi_prime_long_division_oracle():
    # phi = z/(1 - z + z^2); 1/phi' = (1 - z + z^2)^2 / (1 - z^2)
    num = [F(1), F(-2), F(3), F(-2), F(1)]
    den = [F(1), F(0), F(-1)]
    expected = long_division_series(num, den, 10)
    phi_prime = Series(long_division_series([F(1), F(0), F(-1)],
                                            [F(1), F(-2), F(3), F(-2), F(1)], 10))
    assert list(phi_prime.reciprocal().coeffs) == [gauss(c) for c in expected]
    assert expected[:5] == [F(1), F(-2), F(4), F(-4), F(5)]


def test_reciprocal_zero_constant_term():
    with pytest.raises(ZeroConstantTerm):
        Series.var(4).reciprocal()


def test_derivative_basic():
    assert S(0, 1, F(-1, 2), order=4).derivative() == S(1, -1, order=3)


def test_derivative_matches_binomial_cube():
    # d/dz of the series with coefficients (n+1)/2 equals 1/(1-z)^3
    h = Series([F(n + 1, 2) for n in range(13)])
    cube = [gauss(c) for c in binomial_inverse_power(-1, 3, 11)]
    assert list(h.derivative().coeffs) == cube


def test_derivative_of_constant_is_zero():
    assert S(5, order=0).derivative() == Series.zero(0)


def test_antiderivative_log_series():
    # integral of 1/(1-t) has coefficients 1/n
    geo = Series([1] * 8)
    anti = geo.antiderivative()
    assert anti.coeff(0) == 0
    assert [anti.coeff(n) for n in range(1, 9)] == [gauss(F(1, n)) for n in range(1, 9)]


def test_antiderivative_inverse_square_half():
    # integral of 1/(1-t)^3 = (1/2)((1-z)^-2 - 1): coefficients (n+1)/2
    cube = Series(binomial_inverse_power(-1, 3, 9))
    anti = cube.antiderivative()
    assert [anti.coeff(n) for n in range(1, 11)] == [gauss(F(n + 1, 2)) for n in range(1, 11)]


def test_antiderivative_of_one():
    assert Series.one(3).antiderivative() == S(0, 1, order=4)


def test_compose_linear_negation_pair():
    # substituting -z into z/(1 - z + z^2) and negating gives z/(1 + z + z^2)
    a = Series(long_division_series([0, 1], [1, -1, 1], 12))
    b = Series(long_division_series([0, 1], [1, 1, 1], 12))
    assert -(a.compose_linear(-1)) == b


def test_compose_linear_rotation_pair():
    # -i * phi(iz) for phi = z/(1+z^2) gives z/(1-z^2)
    i = GaussRational(0, 1)
    a = Series(long_division_series([0, 1], [1, 0, 1], 12))
    b = Series(long_division_series([0, 1], [1, 0, -1], 12))
    assert a.compose_linear(i).scale(-i) == b


def test_compose_linear_identity():
    a = Series([F(k, 3) for k in range(7)])
    assert a.compose_linear(1) == a


def test_truncation_to_min_order():
    a = Series([1] * 9)   # order 8
    b = Series([1] * 5)   # order 4
    assert (a + b).order == 4
    assert (a * b).order == 4


# ---------------------------------------------------------------------------
# Ring laws and round trips on random series (exact)
# ---------------------------------------------------------------------------

small_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=6)
small_gauss = st.builds(GaussRational, small_fracs, small_fracs)
series6 = st.lists(small_gauss, min_size=7, max_size=7).map(Series)


@settings(max_examples=60, deadline=None)
@given(series6, series6, series6)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(series6)
def test_derivative_of_antiderivative_roundtrip(a):
    assert a.antiderivative().derivative() == a


def test_reciprocal_roundtrip_100_random_series():
    rng = random.Random(20240214)
    for _ in range(100):
        coeffs = [GaussRational(F(rng.randint(-5, 5), rng.randint(1, 4)),
                                F(rng.randint(-5, 5), rng.randint(1, 4)))
                  for _ in range(9)]
        if coeffs[0].is_zero:
            coeffs[0] = GaussRational(1)
        s = Series(coeffs)
        assert s * s.reciprocal() == Series.one(8)
