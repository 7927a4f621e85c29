import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from hypersum import contfrac as cf
from hypersum import elliptic_core as ec
from hypersum import jacobi_fourier as jf
from hypersum.errors import ConvergenceError, DomainError, PoleError

small_a = st.builds(cmath.rect, st.floats(0.0, 0.5), st.floats(-math.pi, math.pi))
small_q = st.floats(0.0, 0.5)


def test_zero_argument():
    assert cf.u0_cf(0, 0.3) == 0
    assert cf.u0_product(0, 0.3) == 0


def test_small_real_case():
    a, q = 0.1, 0.05
    assert abs(cf.u0_cf(a, q) - cf.u0_product(a, q)) < 1e-14
    # leading behavior 2a/(1-q)
    assert cf.u0_cf(a, q).real == pytest.approx(2 * a / (1 - q), rel=0.05)


@given(small_a, small_q)
@settings(max_examples=100, deadline=None)
def test_cf_matches_product(a, q):
    assert abs(cf.u0_cf(a, q) - cf.u0_product(a, q)) < 1e-12


@given(small_a, small_q)
@settings(max_examples=60, deadline=None)
def test_backward_matches_lentz(a, q):
    u, _ = cf.u0_cf_backward(a, q)
    assert abs(u - cf.u0_cf(a, q)) < 1e-13


@given(small_a, small_q)
@settings(max_examples=40, deadline=None)
def test_backward_derivative_matches_finite_difference(a, q):
    _, du = cf.u0_cf_backward(a, q)
    h = 1e-6
    fd = (cf.u0_cf(a + h, q) - cf.u0_cf(a - h, q)) / (2 * h)
    assert abs(du - fd) < 1e-7 * max(1, abs(du))


@given(small_a, small_q)
@settings(max_examples=60, deadline=None)
def test_log_P_routes(a, q):
    assert abs(cf.log_P_series(a, q) - cf.log_P_product(a, q)) < 1e-13
    assert abs(cf.log_from_u0(cf.u0_product(a, q)) - cmath.log(cf.product_P(a, q))) < 1e-13


def test_log_P_reference_point():
    a, q = 0.2, 0.1
    ref = 2 * mpmath.log(mpmath.qp(-a, q) / mpmath.qp(a, q))
    assert cf.log_P_series(a, q) == pytest.approx(complex(ref), abs=1e-14)


def test_product_against_mpmath():
    a, q = 0.3 + 0.2j, 0.4
    ref = (mpmath.qp(-a, q) / mpmath.qp(a, q)) ** 2
    assert abs(cf.product_P(a, q) - complex(ref)) < 1e-13


def test_complex_partial_numerators_regime():
    c = ec.context_from_r(1.0)
    a = jf.nome_argument(c, 0.3 * c.bigK)
    assert abs(cf.u0_cf(a, c.q) - cf.u0_product(a, c.q)) < 1e-13


def test_depth_cap_raises_with_last_convergent():
    with pytest.raises(ConvergenceError) as info:
        cf.u0_cf(0.5, 0.5, depth_cap=3)
    assert info.value.partial.depth == 3


def test_errors():
    with pytest.raises(DomainError):
        cf.u0_cf(0.1, 1.0)
    with pytest.raises(PoleError):
        cf.product_P(1.0, 0.2)
    with pytest.raises(ConvergenceError):
        cf.log_P_series(1.2, 0.2)


@pytest.mark.parametrize("r", [1.0, 2.0])
@pytest.mark.parametrize("f", [0.0, 0.3, 0.7])
def test_logP_dt_routes(r, f):
    c = ec.context_from_r(r)
    theta = f * c.bigK
    direct = jf.logP_dt(c, theta)
    assert abs(direct - 2 * jf.product_logderiv(c, theta)) < 1e-13
    assert abs(direct - cf.logP_dt_cf(c, theta)) < 1e-12
    h = 1e-5
    a = lambda t: jf.nome_argument(c, t)
    fd = (cf.log_P_series(a(theta + h), c.q) - cf.log_P_series(a(theta - h), c.q)) / (2 * h)
    assert abs(direct - fd) < 1e-6


def test_real_part_vanishes_at_zero():
    c = ec.context_from_r(1.0)
    assert abs(cf.real_log_u0(c, 0.0)) < 1e-15


@pytest.mark.parametrize("r", [1.0, 2.0])
@pytest.mark.parametrize("f", [0.1, 0.4, 0.9])
def test_real_part_is_minus_log_nd_ksd(r, f):
    c = ec.context_from_r(r)
    t = f * c.bigK
    target = math.log((jf.nd(c, t) + c.k * jf.sd(c, t)).real)
    assert cf.real_log_u0(c, t) == pytest.approx(-target, abs=1e-13)
