import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate, special

from hypersum import elliptic_core as ec
from hypersum.errors import DomainError

# 30-digit values from mpmath (jtheta / ellipk / ellipe), frozen
ORACLE = {
    1.0: (0.70710678118654752440, 1.8540746773013719184, 1.3506438810476755025, 0.5),
    2.0: (0.41421356237309504880, 1.6455683952934580399, 1.5010810456312439115, 0.41421356237309504880),
    4.0: (0.17157287525380990240, 1.5825517272237159118, 1.5591717445722428881, 0.34314575050761980479),
    1.3: (0.59963039587619466574, 1.7504675565518013779, 1.4182882335035167596, 0.47268615312090082083),
}
GAMMA_QUARTER = 3.62560990822190831193
GAMMA_MINUS_QUARTER_4TH = 577.264894379414206598


@pytest.mark.parametrize("r", sorted(ORACLE))
def test_context_against_frozen_oracle(r):
    k, K, E, alpha = ORACLE[r]
    c = ec.context_from_r(r)
    assert c.k == pytest.approx(k, rel=1e-14)
    assert c.bigK == pytest.approx(K, rel=1e-14)
    assert c.bigE == pytest.approx(E, rel=1e-14)
    assert c.alpha == pytest.approx(alpha, rel=1e-13)


def test_alpha_special_values():
    assert ec.elliptic_alpha(1) == pytest.approx(0.5, abs=1e-15)
    assert ec.elliptic_alpha(2) == pytest.approx(math.sqrt(2) - 1, abs=1e-15)
    assert ec.elliptic_alpha(4) == pytest.approx(6 - 4 * math.sqrt(2), abs=1e-15)


@given(st.floats(0.0, 0.999))
@settings(max_examples=60, deadline=None)
def test_K_E_match_scipy(k):
    assert ec.complete_K(k) == pytest.approx(special.ellipk(k * k), rel=1e-13)
    assert ec.complete_E(k) == pytest.approx(special.ellipe(k * k), rel=1e-13)


def test_K_E_match_quadrature():
    k = 0.6
    K, _ = integrate.quad(lambda t: 1 / math.sqrt(1 - (k * math.sin(t)) ** 2), 0, math.pi / 2, epsabs=1e-14)
    E, _ = integrate.quad(lambda t: math.sqrt(1 - (k * math.sin(t)) ** 2), 0, math.pi / 2, epsabs=1e-14)
    assert ec.complete_K(k) == pytest.approx(K, rel=1e-13)
    assert ec.complete_E(k) == pytest.approx(E, rel=1e-13)


@given(st.floats(0.01, 0.99))
@settings(max_examples=60, deadline=None)
def test_legendre_relation(k):
    assert abs(ec.legendre_residual(k)) < 1e-13


@given(st.floats(0.05, 60.0))
@settings(max_examples=60, deadline=None)
def test_period_ratio_and_moduli(r):
    c = ec.context_from_r(r)
    assert c.bigKprime / c.bigK == pytest.approx(math.sqrt(r), rel=1e-12)
    assert c.k ** 2 + c.kprime ** 2 == pytest.approx(1.0, abs=1e-14)
    assert ec.context_from_r(1 / r).k == pytest.approx(c.kprime, rel=1e-12, abs=1e-300)


@given(st.floats(0.0, 0.99))
def test_modular_transformation_of_K(x):
    assert abs(ec.modular_K_residual(x)) < 1e-13


@given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3))
def test_agm_bounds_and_symmetry(a, b):
    m = ec.agm(a, b)
    assert ec.agm(b, a) == pytest.approx(m, rel=1e-15)
    assert math.sqrt(a * b) * (1 - 1e-15) <= m <= (a + b) / 2 * (1 + 1e-15)


def test_gamma_quarter_against_quadrature():
    # Gamma(1/4) = 4 * int_0^inf exp(-s^4) ds
    val, _ = integrate.quad(lambda s: math.exp(-s ** 4), 0, 6, epsabs=1e-13, limit=200)
    assert abs(ec.gamma_quarter() - 4 * val) < 1e-10
    assert ec.gamma_quarter() == pytest.approx(GAMMA_QUARTER, rel=1e-15)
    assert ec.gamma_quarter() == pytest.approx(math.gamma(0.25), rel=1e-15)


def test_gamma_minus_quarter_fourth_power():
    assert ec.gamma_minus_quarter_4th() == pytest.approx(GAMMA_MINUS_QUARTER_4TH, rel=1e-14)
    assert ec.gamma_minus_quarter_4th() == pytest.approx(math.gamma(-0.25) ** 4, rel=1e-13)


def test_mu_at_one():
    assert ec.mu(1) == pytest.approx(-3, abs=1e-14)
    assert ec.mu_corrected(1) == pytest.approx(-3, abs=1e-14)


def test_mu_corrected_vanishes_at_four():
    assert abs(ec.mu_corrected(4)) < 1e-14


def test_negative_nome_K():
    for r in (1, 2, 4):
        c = ec.context_from_r(r)
        assert ec.negative_nome_K(c) / c.bigK == pytest.approx(c.kprime, rel=1e-14)


@pytest.mark.parametrize("r", [0, -1.0, float("nan")])
def test_context_rejects_bad_r(r):
    with pytest.raises(DomainError):
        ec.context_from_r(r)


def test_domain_errors():
    with pytest.raises(DomainError):
        ec.complete_K(1.0)
    with pytest.raises(DomainError):
        ec.agm(-1, 1)
    with pytest.raises(DomainError):
        ec.theta3(1.0)
    with pytest.raises(DomainError):
        ec.modular_K_residual(1.0)
