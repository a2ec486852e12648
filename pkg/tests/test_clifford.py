from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from kucalc import clifford as cl
from kucalc.clifford import B0Char, TiltParams

from conftest import small_rats

x = sp.symbols("x")


def bundle_oracle(summands, q):
    """ch at beta = 0 of sum m O(k+q), modified by -11/32 rk in degree 2, via sympy exp."""
    ch = sum(m * sp.exp((k + q) * x) for m, k in summands)
    s = sp.series(ch, x, 0, 3).removeO()
    rk, c1, c2 = (s.coeff(x, i) for i in range(3))
    c2 = c2 - sp.Rational(11, 32) * rk
    return tuple(F(str(v)) for v in (rk, c1, c2))


@pytest.mark.parametrize("j", range(-4, 6))
def test_b_char_matches_bundle_oracle(j):
    q, r = divmod(j, 2)
    summands = [(1, 0), (1, -1), (2, -2)] if r == 0 else [(2, 0), (1, -1), (1, -2)]
    assert cl.b_char(j, 0).triple() == bundle_oracle(summands, q)


def test_b_char_values():
    assert cl.b_char(0, 0).triple() == (4, -5, F(25, 8))
    assert cl.b_char(1).triple() == (4, 1, F(1, 8))
    assert cl.b_char(0).triple() == (4, -1, F(1, 8))
    assert cl.b_char(-1).triple() == (4, -3, F(9, 8))
    assert (-cl.b_char(1)).triple() == (-4, -1, F(-1, 8))


@pytest.mark.parametrize("j", range(-2, 4))
def test_b_chars_have_zero_discriminant(j):
    assert cl.discriminant(cl.b_char(j)) == 0


def test_psi_images_satisfy_ku_constraint():
    assert cl.psi_rho_image(1, 0).triple() == (4, 3, F(-7, 8))
    assert cl.psi_rho_image(0, 1).triple() == (-8, 0, F(7, 4))
    assert cl.psi_rho_image(2, 2).triple() == (-8, 6, F(7, 4))
    for a, b in [(1, 0), (0, 1), (2, 2), (-3, 5)]:
        assert cl.ku_constraint_holds(cl.psi_rho_image(a, b))


def test_lattice_coordinates():
    assert cl.lattice_coords(cl.psi_rho_image(2, 2)) == (-2, 4, 2)
    assert cl.lattice_coords(cl.b_char(1)) == (1, 0, 0)
    for j in (-1, 0, 1):
        assert cl.is_lattice_integral(cl.b_char(j))
    with pytest.raises(cl.IntegralityError) as exc:
        cl.lattice_coords(B0Char.of(1, 0, 0))
    assert exc.value.coords == (F(1, 4), F(-1, 8), F(-1, 32))
    assert cl.CLIFFORD_BASIS.steps() == (4, 1, F(1, 8))


def test_degenerate_basis_rejected():
    with pytest.raises(ValueError):
        cl.LatticeBasis.of((1, 0, 0), (2, 0, 0), (0, 0, 1))


def test_slope_polynomials():
    target = B0Char.of(-8, 6, F(7, 4))
    p = cl.slope_mu_poly(target)
    assert (p.const, p.alpha_coeff) == (F(7, 24), F(2, 3))
    assert str(p) == "7/24 + 2/3*alpha^2"
    # the shift B0[1] has positive c1 at beta = -1
    shifted = -cl.b_char(0)
    q = cl.slope_mu_poly(shifted)
    assert (q.const, q.alpha_coeff) == (F(-1, 8), 2)
    with pytest.raises(cl.NotInHeartError):
        cl.slope_mu_poly(cl.b_char(0))


def test_slope_at_infinity_and_errors():
    p = TiltParams(1)
    assert cl.slope_mu(B0Char.of(0, 0, 1), p) is cl.INFINITY
    assert cl.INFINITY > 10**9
    with pytest.raises(cl.NotInHeartError):
        cl.slope_mu(B0Char.of(1, -1, 0), p)
    with pytest.raises(ValueError):
        TiltParams(0)


@pytest.mark.parametrize("j", range(-3, 5))
def test_heart_membership_of_b_chars(j):
    mu = F(-5 + 2 * j, 4)
    assert cl.mu_slope(cl.b_char(j)) == mu
    for beta in (mu - 1, mu - F(1, 8), mu, mu + F(1, 8), mu + 1):
        expected = None if beta == mu else beta < mu
        assert cl.in_tilt_heart(cl.b_char(j), beta) == expected


triples = st.tuples(small_rats, small_rats, small_rats)


@given(triples, small_rats, small_rats)
def test_discriminant_twist_invariant(t, b1, b2):
    c = B0Char.of(*t, b1)
    assert cl.discriminant(cl.twist(c, b2)) == cl.discriminant(c)


@given(triples, small_rats, small_rats)
def test_twist_round_trip_and_equality(t, b1, b2):
    c = B0Char.of(*t, b1)
    assert cl.twist(cl.twist(c, b2), b1).triple() == c.triple()
    assert cl.twist(c, b2) == c
    assert hash(cl.twist(c, b2)) == hash(c)
    assert B0Char.from_json(c.to_json()) == c


@given(triples, triples)
def test_twist_is_additive(s, t):
    a, b = B0Char.of(*s), B0Char.of(*t)
    assert cl.twist(a + b, 0) == cl.twist(a, 0) + cl.twist(b, 0)


ku_chars = st.tuples(st.integers(-20, 20), st.integers(-20, 20)).map(lambda ab: cl.psi_rho_image(*ab))


@given(ku_chars, st.fractions(min_value=F(1, 50), max_value=50, max_denominator=50))
def test_rotated_central_charge_on_ku(c, a2):
    re, im = cl.rotated_central_charge(c, TiltParams(a2))
    assert im == -(F(7, 32) + a2 / 2) * c.rk
    assert re == c.c1


@given(triples, st.fractions(min_value=F(1, 50), max_value=50, max_denominator=50))
def test_slope_poly_agrees_with_slope(t, a2):
    c = B0Char.of(*t)
    if c.c1 <= 0:
        return
    assert cl.slope_mu_poly(c)(a2) == cl.slope_mu(c, TiltParams(a2))
    re, im = cl.central_charge(c, TiltParams(a2))
    assert -re / im == cl.slope_mu(c, TiltParams(a2))


def test_reduced_z():
    assert cl.reduced_Z(cl.psi_rho_image(1, 0)) == (3, -4)
    assert cl.reduced_Z(cl.psi_rho_image(2, 2)) == (6, 8)


def test_printing():
    assert str(B0Char.of(-8, 6, F(7, 4))) == "(-8, 6, 7/4)"
    assert str(cl.SlopePoly(F(-7, 8), F(-2))) == "-7/8 - 2*alpha^2"
    assert str(cl.SlopePoly(F(0), F(1))) == "alpha^2"
    assert str(cl.INFINITY) == "+inf"
