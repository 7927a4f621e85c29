"""Catalog of series/closed-form identities with independent two-sided checks.

Each :class:`Identity` pairs a direct summation (``lhs``) with a closed form or
a different summation route (``rhs``).  :func:`verify` evaluates both and
returns a :class:`VerificationReport`; numerical failures become ``passed=False``
reports rather than exceptions.

Entries whose printed statement is numerically false carry an ``erratum``
note, and a ``*_corrected`` sibling holds the version that does hold.
"""

import cmath
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import contfrac as cf
from . import elliptic_core as ec
from . import jacobi_fourier as jf
from . import qseries as qs
from .errors import DomainError
from .qseries import LambertSpec, SeriesResult, lambert_sum

PI = math.pi
TOL_ABS = 1e-10
TOL_REL = 1e-9
CANCELLATION_TOL_REL = 1e-7


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    param_domain: str
    lhs: Callable
    rhs: Callable
    grid: Callable
    check: Optional[Callable] = None
    cancellation_prone: bool = False
    tol_floor: float = 0.0
    erratum: str = ""


@dataclass
class VerificationReport:
    id: str
    params: dict
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    tol_abs: float
    tol_rel: float
    passed: bool
    terms_used: Optional[int] = None
    error: str = ""
    erratum: str = ""

    def to_dict(self):
        def cx(v):
            if v is None or (isinstance(v, complex) and (math.isnan(v.real) or math.isnan(v.imag))):
                return {"re": None, "im": None}
            return {"re": v.real, "im": v.imag}

        def num(v):
            return None if v is None or math.isnan(v) else v

        return {
            "id": self.id,
            "params": self.params,
            "lhs": cx(self.lhs),
            "rhs": cx(self.rhs),
            "abs_residual": num(self.abs_residual),
            "rel_residual": num(self.rel_residual),
            "tol": {"abs": self.tol_abs, "rel": self.tol_rel},
            "pass": self.passed,
            "terms_used": self.terms_used,
        }


# --------------------------------------------------------------------------
# small helpers

def _ctx(p):
    return ec.context_from_r(p["r"])


def _L(**kw):
    return lambert_sum(LambertSpec(**kw))


def _need_r(p):
    if "r" not in p:
        raise DomainError("parameter r is required")
    if not p["r"] > 0:
        raise DomainError(f"r > 0 violated (r={p['r']})")


def _theta(p):
    return jf.parse_lattice(p["theta"], _ctx(p))


def _r_grid(rs):
    return [{"r": r} for r in rs]


def _fixed(*params):
    return lambda rs: [dict(p) for p in params]


def _with(rs, key, values):
    return [{"r": r, key: v} for r in rs for v in values]


def _combine(res_a, res_b, fa, fb):
    # returns (value, terms) for a linear combination of two series results
    return SeriesResult(fa * res_a.value + fb * res_b.value,
                        res_a.terms_used + res_b.terms_used,
                        abs(fa) * res_a.tail_bound + abs(fb) * res_b.tail_bound)


def _scale(res, factor, offset=0.0):
    return SeriesResult(factor * res.value + offset, res.terms_used, abs(factor) * res.tail_bound)


# --------------------------------------------------------------------------
# Lambert / hyperbolic closed forms

def _eq2_lhs(p):
    return _L(x=2 * PI, s=4 * p["nu"] + 1)


def _eq2_rhs(p):
    nu = p["nu"]
    return qs.bernoulli(4 * nu + 2) / (8 * nu + 4)


def _eq2_check(p):
    if not (isinstance(p.get("nu"), int) and p["nu"] >= 1):
        raise DomainError("nu must be a positive integer")


def _eq3_lhs(p):
    return _L(x=PI, s=4 * p["nu"] + 1, sign=-1, parity="odd")


def _eq3_rhs(p):
    nu = p["nu"]
    return -qs.q_nu(4 * nu + 1) / 4 - 2.0 ** (4 * nu - 1) / (2 * nu + 1) * qs.bernoulli(4 * nu + 2)


def _eq3_check(p):
    if not (isinstance(p.get("nu"), int) and p["nu"] >= 0):
        raise DomainError("nu must be a non-negative integer")


def _thm1_side(nu, a):
    zeta_half = 0.5 * qs.zeta_odd(2 * nu + 1)
    return _scale(_L(x=2 * a, s=-2 * nu - 1), 1.0, zeta_half)


def _thm1_lhs(p):
    nu, a = p["nu"], p["a"]
    b = PI * PI / a
    sa, sb = _thm1_side(nu, a), _thm1_side(nu, b)
    return _combine(sa, sb, a ** -nu, -((-b) ** -nu))


def _thm1_rhs(p):
    nu, a = p["nu"], p["a"]
    b = PI * PI / a
    total = math.fsum(
        (-1) ** n * qs.bernoulli(2 * n) / math.factorial(2 * n)
        * qs.bernoulli(2 * nu + 2 - 2 * n) / math.factorial(2 * nu + 2 - 2 * n)
        * a ** (nu + 1 - n) * b ** n
        for n in range(0, nu + 2))
    return -(2.0 ** (2 * nu)) * total


def _thm1_check(p):
    if not (isinstance(p.get("nu"), int) and p["nu"] != 0):
        raise DomainError("nu must be a non-zero integer")
    if not p.get("a", 0) > 0:
        raise DomainError("a > 0 violated (b = pi^2/a)")


def _eq7_lhs(p):
    return _L(x=2 * PI, s=1)


def _eq7_rhs(p):
    return 1 / 24 - 1 / (8 * PI)


def _eq9_lhs(p):
    c = _ctx(p)
    A = _L(x=PI * c.sqrt_r, s=-1)
    return SeriesResult(math.exp(-A.value), A.terms_used, A.tail_bound)


def _eq9_rhs(p):
    return qs.eta_product(_ctx(p).q)


def _eq10_lhs(p):
    return qs.eta_product(_ctx(p).q)


def _eq10_rhs(p):
    c = _ctx(p)
    return (2 ** (1 / 3) * PI ** -0.5 * c.q ** (-1 / 24) * c.k ** (1 / 12)
            * c.kprime ** (1 / 3) * c.bigK ** 0.5)


def _eq11_lhs(p):
    # dA/dq term by term: sum q^{n-1} / (1 - q^n)^2
    q = math.exp(-2 * p["x"])
    return qs.accumulate(lambda n: q ** (n - 1) / (1 - q ** n) ** 2,
                         lambda n: q ** (n - 1) / (1 - q) ** 2, lambda n: q, start=1)


def _eq11_rhs(p):
    x = p["x"]
    return math.exp(2 * x) / 4 * qs.sinh_sq_sum(x).value


def _eq12_lhs(p):
    return qs.sinh_sq_sum(p["x"])


def _eq12_rhs(p):
    return -4 * qs.eta_logderiv(math.exp(-2 * p["x"])).value


def _x_check(p):
    if not p.get("x", 0) > 0:
        raise DomainError("x > 0 violated")


def _eq13_lhs(p):
    c = _ctx(p)
    return _L(x=2 * PI / c.sqrt_r, s=1, alternating="n")


def _eq13_rhs(p):
    c = _ctx(p)
    return 1 / 8 - c.sqrt_r / (4 * PI) + c.r * c.bigK * (c.bigE - c.bigK) / (2 * PI ** 2)


def _eq16_lhs(p):
    c = _ctx(p)
    return _combine(_L(x=4 * PI / c.sqrt_r, s=1), _L(x=2 * PI / c.sqrt_r, s=1, parity="odd"), 2, -1)


def _eq16_rhs(p, alpha=None):
    c = _ctx(p)
    a = c.alpha if alpha is None else alpha
    return 1 / 8 - c.sqrt_r / (8 * PI) - a * c.sqrt_r * c.bigK ** 2 / (2 * PI ** 2)


def _eq17_lhs(p):
    return _L(x=PI, s=1, parity="odd")


def _eq17_rhs(p):
    return -1 / 24 + 16 * PI / ec.gamma_minus_quarter_4th()


def _thm2_lhs(p):
    c = _ctx(p)
    return _scale(_L(x=PI * c.sqrt_r, s=1), -24, 1.0)


def _thm2_rhs(p):
    c = _ctx(p)
    return 6 / (PI * c.sqrt_r) + (1 + c.k ** 2 - 6 * c.alpha / c.sqrt_r) * 4 * c.bigK ** 2 / PI ** 2


def _eq20_lhs(p):
    c = _ctx(p)
    return _L(x=4 * PI / c.sqrt_r, s=1)


def _eq20_rhs(p, mu=ec.mu):
    c = _ctx(p)
    return 1 / 24 - c.sqrt_r / (16 * PI) + c.bigKprime ** 2 / (48 * PI ** 2) * mu(c.r)


def _thm3_lhs(p):
    c = _ctx(p)
    return _L(x=2 * PI / c.sqrt_r, s=1, parity="odd")


def _thm3_rhs(p, mu=ec.mu):
    c = _ctx(p)
    return (-1 / 24 + c.sqrt_r * c.alpha * c.bigK ** 2 / (2 * PI ** 2)
            + mu(c.r) * c.bigKprime ** 2 / (24 * PI ** 2))


def _thm4_lhs(p):
    c = _ctx(p)
    return _scale(_L(x=PI * c.sqrt_r, s=1, sign=-1, parity="odd"), -24, 1.0)


def _thm4_rhs(p):
    c = _ctx(p)
    z = 2 * c.bigK / PI
    return z * z * (1 - 2 * c.k ** 2)


def _thm5_lhs(p):
    c = _ctx(p)
    x = PI * c.sqrt_r / 2
    return qs.hyperbolic_sum(lambda n: 1 / math.cosh(n * x), x, start=1, step=2)


def _thm5_rhs(p):
    c = _ctx(p)
    return c.bigK * c.k / PI


def _thm6_lhs(p):
    c = _ctx(p)
    x = PI * c.sqrt_r
    return qs.hyperbolic_sum(lambda n: (-1) ** n / (math.exp((2 * n + 1) * x) + 1), 2 * x,
                             margin=math.exp(-x))


def _thm6_rhs(p):
    c = _ctx(p)
    return 0.25 - c.bigK * c.kprime / (2 * PI)


# --------------------------------------------------------------------------
# arithmetic transforms and alternating Lambert sums

def _eq26_lhs(p):
    return qs.arithmetic_transform(lambda n: n, p["x"])[0]


def _eq26_rhs(p):
    return qs.sigma_side(p["x"]).value


def _prop1_lhs(p):
    return qs.ghost_sum(p["x"])


def _prop1_rhs(p):
    return qs.divisor_side(p["x"]).value


def _cor1_lhs(p):
    c = _ctx(p)
    return _scale(_L(x=PI * c.sqrt_r, parity="odd", alternating="half"), 4, 1.0)


def _two_K_over_pi(p):
    return 2 * _ctx(p).bigK / PI


def _eq30_lhs(p):
    c = _ctx(p)
    x = PI * c.sqrt_r
    return _combine(_L(x=x, parity="1mod4"), _L(x=x, parity="3mod4"), 4, -4)


def _eq30_value(p):
    res = _eq30_lhs(p)
    return SeriesResult(1 + res.value, res.terms_used, res.tail_bound)


def _thm7_lhs(p):
    return qs.sinh_sq_sum(p["x"], weighted=True)


def _thm7_rhs(p):
    return qs.weighted_divisor_derivative(p["x"]).value


def _thm8_lhs(p):
    c = _ctx(p)
    x = PI * c.sqrt_r
    return qs.hyperbolic_sum(lambda n: (-1) ** n / math.sinh((n + 0.5) * x), x,
                             margin=2 * math.exp(-x / 2) / -math.expm1(-x))


def _thm8_lambert_lhs(p):
    c = _ctx(p)
    return _scale(_L(x=PI * c.sqrt_r, parity="odd", alternating="half", shift=0.5), 2)


def _kk_over_pi(p):
    c = _ctx(p)
    return c.bigK * c.k / PI


def _eq33_lhs(p):
    x = p["x"]
    return ec._K_from_parameter(x / (x - 1)) / math.sqrt(1 - x)


def _eq33_rhs(p):
    return ec._K_from_parameter(p["x"])


def _eq33_check(p):
    if not 0 <= p.get("x", -1) < 1:
        raise DomainError("0 <= x < 1 violated (x is the parameter k^2)")


def _eq34_lhs(p):
    c = _ctx(p)
    return ec.negative_nome_K(c) / c.bigK


def _eq34_rhs(p):
    return _ctx(p).kprime


def _eq41_lhs(p):
    pair = jf.NegativeNomePair.from_context(_ctx(p))
    c = pair.base
    return 1j * c.bigK * c.k / (pair.star_bigK * pair.star_k)


# --------------------------------------------------------------------------
# Jacobi / Fourier identities

def _u(p):
    return p["u_over_K"] * _ctx(p).bigK


def _prop3_lhs(p):
    return jf.fourier_fn_negative("sn", _ctx(p), _u(p))


def _prop3_rhs(p):
    c = _ctx(p)
    return c.kprime * jf.fourier_fn("sd", c, _u(p) / c.kprime)


def _prop5_lhs(p):
    return jf.fourier_fn_negative("cn", _ctx(p), _u(p))


def _prop5_rhs(p):
    c = _ctx(p)
    return jf.fourier_fn("cd", c, _u(p) / c.kprime)


def _eq44_lhs(p):
    return jf.fourier_fn_negative("cn1", _ctx(p), _u(p))


def _eq44_rhs(p):
    c = _ctx(p)
    return jf.fourier_fn("cd1", c, _u(p) / c.kprime)


def _prop4_lhs(p):
    return jf.ss(_ctx(p), _u(p))


def _prop4_rhs(p):
    c = _ctx(p)
    z = PI * _u(p) / (2 * c.bigK)
    s2 = math.sin(2 * z)
    return (jf.fourier_fn("cn", c, _u(p)) * math.cos(2 * z) - jf.fourier_fn("cn1", c, _u(p))) / s2


def _prop4_check(p):
    _need_r(p)
    f = p.get("u_over_K")
    if f is None or abs(math.sin(PI * f)) < 1e-6:
        raise DomainError("u/K must avoid integers (cot/csc of 2z singular)")


def _eq24_lhs(p):
    c = _ctx(p)
    u = _u(p)
    return jf.sn(c, u) / (jf.cn(c, u) * jf.dn(c, u))


def _eq24_rhs(p):
    c = _ctx(p)
    u = _u(p)
    K, kp, q = c.bigK, c.kprime, c.q
    w = PI * u / K
    series = qs.accumulate(lambda n: (-1) ** n * q ** n * math.sin(n * w) / (1 + q ** n),
                           lambda n: q ** n, lambda n: q, start=1).value
    return PI / (2 * kp * kp * K) * math.tan(w / 2) + 2 * PI / (kp * kp * K) * series


def _eq24_check(p):
    _need_r(p)
    f = p.get("u_over_K")
    if f is None or abs(math.cos(PI * f / 2)) < 1e-6:
        raise DomainError("u must avoid odd multiples of K (poles of sn/(cn dn))")


def _pyth_lhs(p):
    c = _ctx(p)
    u = _theta(p)
    return jf.sn(c, u) ** 2 + jf.cn(c, u) ** 2


def _fourier_vs_theta(name):
    def lhs(p):
        return jf.fourier_fn(name, _ctx(p), _u(p))

    def rhs(p):
        return getattr(jf, name)(_ctx(p), _u(p))
    return lhs, rhs


def _thm9_lhs(p):
    return jf.odd_power_sum(_ctx(p), _theta(p))


def _thm9_rhs(p):
    return jf.odd_power_closed_form(_ctx(p), _theta(p))


def _thm9_check(p):
    _need_r(p)
    c = _ctx(p)
    th = jf.parse_lattice(p.get("theta", ""), c)
    if abs(jf.nome_argument(c, th)) >= 1:
        raise DomainError("|q^(1/2) exp(i pi theta/(2K))| < 1 violated")
    if abs(cmath.sin(PI * th / c.bigK)) < 1e-8:
        raise DomainError("theta must avoid integer multiples of K (csc singular)")


def _thm10_lhs(p):
    c = _ctx(p)
    lam, x = p["lam"], PI * c.sqrt_r
    res = qs.hyperbolic_sum(lambda n: (-1) ** n * math.exp(-x * (n + 0.5) * lam) / math.sinh((n + 0.5) * x),
                            x * (1 + lam), margin=2 * math.exp(-x * (1 + lam) / 2) / -math.expm1(-x))
    return _scale(res, PI / (c.bigK * c.k))


def _thm10_rhs(p):
    c = _ctx(p)
    lam = p["lam"]
    th = lam * 1j * c.bigKprime
    y = lam * PI * c.sqrt_r
    cdv = jf.cd(c, th)
    return cdv / math.tanh(y) - jf.fourier_fn("cd1", c, th) / math.sinh(y) + cdv


def _thm10_check(p):
    _need_r(p)
    lam = p.get("lam", 0)
    if not 0 < abs(lam) < 1:
        raise DomainError("0 < |lambda| < 1 violated")


def _thm11_lhs(p):
    c = _ctx(p)
    nu, q = p["nu"], c.q
    e = 0.5 + 1 / nu
    res = qs.accumulate(lambda n: q ** ((2 * n + 1) * e) / (1 - q ** (2 * n + 1)),
                        lambda n: q ** ((2 * n + 1) * e) / (1 - q), lambda n: q ** (2 * e))
    return _scale(res, 2 * PI / (c.bigK * c.k))


def _thm11_rhs(p):
    c = _ctx(p)
    nu = p["nu"]
    y = 2 * PI * c.sqrt_r / nu
    s = jf.sn(c, 2j * c.bigKprime / nu)
    cd1v = jf.cd1_any(c, -c.bigK + 2j * c.bigKprime / nu)
    return 1j * s / math.tanh(y) + 1j * cd1v / math.sinh(y) + 1j * s


def _thm11_check(p):
    _need_r(p)
    nu = p.get("nu")
    if not nu or nu < 0:
        raise DomainError("nu must be a positive real here")
    if abs(2 / nu - round(2 / nu)) < 1e-12:
        raise DomainError("2/nu must not be an integer")


def _richardson_limit(c):
    # cd1(K+h)/h is even in h about K, so the h^2 error term cancels between h and h/10
    K = c.bigK
    vals = [jf.fourier_fn("cd1", c, K + h).real / h for h in (1e-2, 1e-3, 1e-4)]
    r1 = (100 * vals[1] - vals[0]) / 99
    r2 = (100 * vals[2] - vals[1]) / 99
    return r2 if abs(r2 - r1) < 1e-6 else r1


def _cor2_lhs(p):
    return _richardson_limit(_ctx(p))


def _cor2_rhs(p):
    c = _ctx(p)
    s = _L(x=PI * c.sqrt_r, parity="odd", shift=0.5).value
    return 1 + 2 * PI ** 2 / (c.bigK ** 2 * c.k) * s


_COR2_POINTS = {"0": 1.0, "K": 0.0, "2K": -1.0}


def _cor2_values_lhs(p):
    return jf.fourier_fn("cd1", _ctx(p), _theta(p))


def _cor2_values_rhs(p):
    return _COR2_POINTS[p["theta"]]


def _cor2_values_check(p):
    _need_r(p)
    if p.get("theta") not in _COR2_POINTS:
        raise DomainError(f"theta must be one of {sorted(_COR2_POINTS)}")


def _antiperiodic_lhs(p):
    c = _ctx(p)
    return jf.fourier_fn("cd1", c, _theta(p) + 2 * c.bigK)


def _antiperiodic_rhs(p):
    return -jf.fourier_fn("cd1", _ctx(p), _theta(p))


def _thm12_lhs(p):
    c = _ctx(p)
    return jf.cd1(c, 1j * c.bigKprime)


def _thm12_rhs(p):
    return jf.cd1_special(_ctx(p), "iK'")


def _cor3_lhs(p):
    c = _ctx(p)
    return jf.fourier_fn("cd1", c, 0.5j * c.bigKprime)


def _cor3_rhs(p):
    return jf.cd1_special(_ctx(p), "iK'/2")


def _cor4_lhs(p):
    c = _ctx(p)
    return jf.fourier_fn("cd1", c, c.bigK / 2)


def _cor4_rhs(p):
    return jf.cd1_special(_ctx(p), "K/2")


def _mod4_sums(c):
    x = PI * c.sqrt_r
    s1 = _L(x=x, parity="1mod4", alternating="quarter", shift=0.5)
    s3 = _L(x=x, parity="3mod4", alternating="quarter", shift=0.5)
    return s1, s3


def _eq55_lhs(p):
    c = _ctx(p)
    return _scale(_L(x=PI * c.sqrt_r, alternating="chi8", shift=0.5), -1)


def _eq55_rhs(p):
    c = _ctx(p)
    return c.bigK * c.k / (math.sqrt(2) * PI * math.sqrt(1 + c.kprime))


def _eq56_cn_lhs(p):
    c = _ctx(p)
    return jf.cn(c, c.bigK / 2)


def _eq56_dn_lhs(p):
    c = _ctx(p)
    return jf.dn(c, c.bigK / 2)


def _eq57_lhs(p):
    c = _ctx(p)
    return jf.cd(c, c.bigK / 2)


def _eq58_lhs(p):
    s1, s3 = _mod4_sums(_ctx(p))
    return _combine(s1, s3, 1, 1)


def _eq58_rhs(p):
    c = _ctx(p)
    return math.sqrt(2) / math.sqrt(1 + c.kprime) * c.bigK * c.k / (2 * PI)


def _eq59_lhs(p):
    c = _ctx(p)
    s1, s3 = _mod4_sums(c)
    f = PI * math.sqrt(2) / (c.bigK * c.k)
    return _combine(s3, s1, f, -f)


# --------------------------------------------------------------------------
# q-products, continued fraction, log-derivative identities

def _aq_grid(count=6, seed=7):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = cmath.rect(rng.uniform(0.05, 0.5), rng.uniform(-PI, PI))
        out.append({"a_re": round(a.real, 6), "a_im": round(a.imag, 6), "q": round(rng.uniform(0.01, 0.5), 6)})
    return out


def _a(p):
    return complex(p["a_re"], p["a_im"])


def _aq_check(p):
    if not 0 < p.get("q", -1) < 1:
        raise DomainError("0 < q < 1 violated")
    if not abs(complex(p.get("a_re", 0), p.get("a_im", 0))) < 1:
        raise DomainError("|a| < 1 violated")


def _eq64_lhs(p):
    return cf.log_from_u0(cf.u0_product(_a(p), p["q"]))


def _eq64_rhs(p):
    return cmath.log(cf.product_P(_a(p), p["q"]))


def _eq65_lhs(p):
    return cf.log_P_series(_a(p), p["q"])


def _eq65_rhs(p):
    return cf.log_P_product(_a(p), p["q"])


def _eq70_lhs(p):
    return cf.u0_cf(_a(p), p["q"])


def _eq70_rhs(p):
    return cf.u0_product(_a(p), p["q"])


def _eq66_lhs(p):
    return jf.logP_dt(_ctx(p), _theta(p))


def _eq66_rhs(p):
    return 2 * jf.product_logderiv(_ctx(p), _theta(p))


def _log_nd_ksd(c, t):
    return cmath.log(jf.nd(c, t) + c.k * jf.sd(c, t))


def _eq67_lhs(p):
    c = _ctx(p)
    t = _theta(p).real
    h = 1e-5
    return ((_log_nd_ksd(c, t + h) - _log_nd_ksd(c, t - h)) / (2 * h)).real


def _eq67_rhs(p):
    return jf.cd(_ctx(p), _theta(p).real).real


def _eq67_corrected_rhs(p):
    c = _ctx(p)
    return c.k * jf.cd(c, _theta(p).real).real


def _real_theta_check(p):
    _need_r(p)
    c = _ctx(p)
    th = jf.parse_lattice(p.get("theta", ""), c)
    if abs(th.imag) > 0 or not 0 < th.real < c.bigK:
        raise DomainError("theta must be real with 0 < theta < K")


def _thm13_lhs(p):
    return cf.real_log_u0(_ctx(p), _theta(p).real)


def _thm13_rhs(p):
    return _log_nd_ksd(_ctx(p), _theta(p).real).real


def _thm13_corrected_rhs(p):
    return -_thm13_rhs(p)


def _thm13_cd1_lhs(p):
    c = _ctx(p)
    th = _theta(p).real
    z = PI * th / (2 * c.bigK)
    D = jf.product_logderiv(c, th)
    return jf.cd(c, th).real * math.cos(2 * z) + 2 / c.k * math.sin(2 * z) * D.imag


def _cd1_fourier_rhs(p):
    return jf.fourier_fn("cd1", _ctx(p), _theta(p))


def _thm14_lhs(p):
    return jf.cd1(_ctx(p), _theta(p))


def _thm14_cf_lhs(p):
    c = _ctx(p)
    th = _theta(p)
    z = PI * th / (2 * c.bigK)
    cdv = jf.cd(c, th)
    s2 = cmath.sin(2 * z)
    return cdv * cmath.cos(2 * z) - 1j * cdv * s2 - 1j / c.k * s2 * cf.logP_dt_cf(c, th)


def _cd1_any_rhs(p):
    return jf.cd1_any(_ctx(p), _theta(p))


def _thm14_check(p):
    _need_r(p)
    c = _ctx(p)
    th = jf.parse_lattice(p.get("theta", ""), c)
    if abs(jf.nome_argument(c, th)) >= 1:
        raise DomainError("|q^(1/2) exp(i pi theta/(2K))| < 1 violated")


def _thm14_strip_check(p):
    _thm14_check(p)
    c = _ctx(p)
    th = jf.parse_lattice(p.get("theta", ""), c)
    if c.q * math.exp(PI * abs(th.imag) / c.bigK) >= 1:
        raise DomainError("theta must lie inside the Fourier strip |Im theta| < K'")


def _thm15_lhs(p):
    c = _ctx(p)
    return jf.cd1(c, jf.lattice_point(c, p["m"], p["inv_nu"]))


def _thm15_rhs(p):
    return jf.cd1_special(_ctx(p), "lattice", p["m"], p["inv_nu"])


def _lattice_check(p):
    _need_r(p)
    m, l = p.get("m"), p.get("inv_nu")
    if not isinstance(m, int) or m % 2:
        raise DomainError("m must be an even integer")
    if not isinstance(l, int) or l < 1:
        raise DomainError("1/nu must be a positive integer")


def _eq74_lhs(p):
    return jf.finite_sum_identity(_ctx(p), p["l"])[0]


def _eq74_rhs(p):
    return jf.finite_sum_identity(_ctx(p), p["l"])[1]


def _eq74_check(p):
    _need_r(p)
    if not (isinstance(p.get("l"), int) and p["l"] >= 0):
        raise DomainError("l must be a non-negative integer")


def _eq75_lhs(p):
    c = _ctx(p)
    return jf.cd(c, jf.lattice_point(c, p["m"], p["inv_nu"]))


def _eq75_rhs(p):
    return (-1) ** (p["m"] // 2)


def _alpha4_lhs(p):
    return ec.context_from_r(4).alpha


# --------------------------------------------------------------------------
# Catalog

def _theta_grid(rs, tokens):
    return [{"r": r, "theta": t} for r in rs for t in tokens]


def _u_grid(rs, fracs):
    return [{"r": r, "u_over_K": f} for r in rs for f in fracs]


_REAL_THETAS = ("0.1K", "0.3K", "0.55K", "0.8K")
_U_FRACS = (0.13, 0.37, 0.61, 0.89, 1.23, 1.58)
_THETA_COMPLEX = ("0.3K", "0.7K+0.2iKprime", "1.3K-0.4iKprime", "0.5iKprime")

_IDENTITIES = [
    Identity("eq2", "sum n^{4nu+1}/(e^{2 pi n}-1) = B_{4nu+2}/(8nu+4)", "nu positive integer",
             _eq2_lhs, _eq2_rhs, _fixed({"nu": 1}, {"nu": 2}, {"nu": 3}), _eq2_check),
    Identity("eq3", "sum_{n odd} n^{4nu+1}/(e^{n pi}+1) = -Q_{4nu+1}/4 - 2^{4nu-1} B_{4nu+2}/(2nu+1)",
             "nu non-negative integer", _eq3_lhs, _eq3_rhs,
             _fixed({"nu": 0}, {"nu": 1}, {"nu": 2}), _eq3_check),
    Identity("thm1", "odd-zeta transformation pairing a and b = pi^2/a", "nu non-zero integer, a > 0",
             _thm1_lhs, _thm1_rhs,
             _fixed(*[{"nu": nu, "a": a} for nu in (1, 2, -1, -2) for a in (PI, PI / 2)]), _thm1_check),
    Identity("eq7", "sum n/(e^{2 pi n}-1) = 1/24 - 1/(8 pi)", "none",
             _eq7_lhs, _eq7_rhs, _fixed({})),
    Identity("eq9", "exp(-sum 1/(n(e^{pi n sqrt r}-1))) = prod (1-q^n)", "r > 0",
             _eq9_lhs, _eq9_rhs, _r_grid, _need_r),
    Identity("eq10", "prod (1-q^n) = 2^{1/3} pi^{-1/2} q^{-1/24} k^{1/12} k'^{1/3} K^{1/2}", "r > 0",
             _eq10_lhs, _eq10_rhs, _r_grid, _need_r),
    Identity("eq11", "dA/dq = e^{2x}/4 sum 1/sinh^2(nx), q = e^{-2x}", "x > 0",
             _eq11_lhs, _eq11_rhs, _fixed({"x": 1.0}, {"x": 2.0}, {"x": PI}), _x_check),
    Identity("eq12", "sum 1/sinh^2(nx) = -4 q d/dq log f(-q), q = e^{-2x}", "x > 0",
             _eq12_lhs, _eq12_rhs, _fixed({"x": 1.0}, {"x": 2.0}, {"x": PI}), _x_check),
    Identity("eq13", "sum (-1)^n n/(e^{2 pi n/sqrt r}-1) = 1/8 - sqrt r/(4 pi) + r K (E-K)/(2 pi^2)", "r > 0",
             _eq13_lhs, _eq13_rhs, _r_grid, _need_r),
    Identity("eq16", "2 sum n/(e^{4 pi n/sqrt r}-1) - sum_odd n/(e^{2 pi n/sqrt r}-1) = 1/8 - sqrt r/(8 pi) - alpha sqrt r K^2/(2 pi^2)",
             "r > 0", _eq16_lhs, _eq16_rhs, _r_grid, _need_r),
    Identity("eq17", "sum_odd n/(e^{pi n}-1) = -1/24 + 16 pi / Gamma(-1/4)^4", "none",
             _eq17_lhs, _eq17_rhs, _fixed({})),
    Identity("thm2", "1 - 24 sum n/(e^{pi n sqrt r}-1) = 6/(pi sqrt r) + (1 + k^2 - 6 alpha/sqrt r) 4K^2/pi^2",
             "r > 0", _thm2_lhs, _thm2_rhs, _r_grid, _need_r),
    Identity("eq20", "sum n/(e^{4 pi n/sqrt r}-1) = 1/24 - sqrt r/(16 pi) + K'^2 mu(r)/(48 pi^2), printed mu",
             "r > 0", _eq20_lhs, _eq20_rhs, _r_grid, _need_r,
             erratum="the printed mu(r) makes this hold only at r = 1; see eq20_corrected"),
    Identity("eq20_corrected", "same with mu(r) = -10 + 2k^2 + 12 sqrt r alpha(1/r)", "r > 0",
             _eq20_lhs, lambda p: _eq20_rhs(p, ec.mu_corrected), _r_grid, _need_r),
    Identity("thm3", "sum_odd n/(e^{2 pi n/sqrt r}-1) = -1/24 + sqrt r alpha K^2/(2 pi^2) + mu K'^2/(24 pi^2), printed mu",
             "r > 0", _thm3_lhs, _thm3_rhs, _r_grid, _need_r,
             erratum="inherits the printed mu(r); holds only at r = 1; see thm3_corrected"),
    Identity("thm3_corrected", "same with mu(r) = -10 + 2k^2 + 12 sqrt r alpha(1/r)", "r > 0",
             _thm3_lhs, lambda p: _thm3_rhs(p, ec.mu_corrected), _r_grid, _need_r),
    Identity("thm4", "1 - 24 sum_odd n/(e^{n pi sqrt r}+1) = z^2 (1 - 2x), z = 2K/pi, x = k^2", "r > 0",
             _thm4_lhs, _thm4_rhs, _r_grid, _need_r),
    Identity("thm5", "sum_odd 1/cosh(n pi sqrt r/2) = K k/pi", "r > 0",
             _thm5_lhs, _thm5_rhs, _r_grid, _need_r),
    Identity("thm6", "sum (-1)^n/(e^{(2n+1) pi sqrt r}+1) = 1/4 - K k'/(2 pi)", "r > 0",
             _thm6_lhs, _thm6_rhs, _r_grid, _need_r),
    Identity("eq26", "sum n/(e^{nx}-1) = sum sigma(n) e^{-nx}", "x > 0",
             _eq26_lhs, _eq26_rhs, _fixed({"x": 1.0}, {"x": 2.0}), _x_check),
    Identity("prop1", "sum 1/(e^{nx}-1) = sum d(n) e^{-nx}", "x > 0",
             _prop1_lhs, _prop1_rhs, _fixed({"x": 1.0}, {"x": 2.0}), _x_check),
    Identity("cor1", "1 + 4 sum (-1)^n/(e^{(2n+1) pi sqrt r}-1) = 2K/pi", "r > 0",
             _cor1_lhs, _two_K_over_pi, _r_grid, _need_r),
    Identity("eq30", "1 + 4 sum_{n=1 mod 4} - 4 sum_{n=3 mod 4} 1/(e^{n pi sqrt r}-1) = 2K/pi", "r > 0",
             _eq30_value, _two_K_over_pi, _r_grid, _need_r),
    Identity("thm7", "sum n/sinh^2(nx) = -2 d/dx sum 1/(e^{2nx}-1)", "x > 0",
             _thm7_lhs, _thm7_rhs, _fixed({"x": 1.0}, {"x": PI}), _x_check),
    Identity("eq33", "(1-x)^{-1/2} K(x/(x-1)) = K(x), parameter convention", "0 <= x < 1",
             _eq33_lhs, _eq33_rhs, _fixed({"x": 0.1}, {"x": 0.3}, {"x": 0.5}), _eq33_check),
    Identity("eq34", "K(k_{r1})/K(k_r) = k'_r for the nome -q", "r > 0",
             _eq34_lhs, _eq34_rhs, _r_grid, _need_r),
    Identity("eq41", "i K k / (K* k*) = 1", "r > 0",
             _eq41_lhs, lambda p: 1.0, _r_grid, _need_r),
    Identity("prop3", "sn(-q,u) = k' sd(q, u/k')", "r > 0, u real",
             _prop3_lhs, _prop3_rhs, lambda rs: _u_grid(rs, _U_FRACS), _need_r),
    Identity("prop4", "ss = cn cot(2z) - cn1 csc(2z), z = pi u/(2K)", "r > 0, u/K not an integer",
             _prop4_lhs, _prop4_rhs, lambda rs: _u_grid(rs, _U_FRACS), _prop4_check),
    Identity("prop5", "cn(-q,u) = cd(q, u/k')", "r > 0, u real",
             _prop5_lhs, _prop5_rhs, lambda rs: _u_grid(rs, _U_FRACS), _need_r),
    Identity("eq44", "cn1(-q,u) = cd1(q, u/k')", "r > 0, u real",
             _eq44_lhs, _eq44_rhs, lambda rs: _u_grid(rs, _U_FRACS), _need_r),
    Identity("eq24", "sn/(cn dn) = pi/(2k'^2K) tan(pi u/2K) + 2pi/(k'^2K) sum (-1)^n q^n sin(n pi u/K)/(1+q^n)",
             "r > 0, u not an odd multiple of K", _eq24_lhs, _eq24_rhs,
             lambda rs: _u_grid(rs, (0.13, 0.37, 0.61, 0.89, 1.23, 1.58)), _eq24_check),
    Identity("thm8", "sum (-1)^n / sinh((n+1/2) pi sqrt r) = K k/pi", "r > 0",
             _thm8_lhs, _kk_over_pi, _r_grid, _need_r),
    Identity("thm8_lambert", "2 sum_odd (-1)^{(n-1)/2} q^{n/2}/(1-q^n) = K k/pi", "r > 0",
             _thm8_lambert_lhs, _kk_over_pi, _r_grid, _need_r),
    Identity("sn_fourier", "Fourier series of sn equals the theta quotient", "r > 0, u real",
             *_fourier_vs_theta("sn"), lambda rs: _u_grid(rs, _U_FRACS), _need_r),
    Identity("cn_fourier", "Fourier series of cn equals the theta quotient", "r > 0, u real",
             *_fourier_vs_theta("cn"), lambda rs: _u_grid(rs, _U_FRACS), _need_r),
    Identity("cd_fourier", "Fourier series of cd equals the theta quotient", "r > 0, u real",
             *_fourier_vs_theta("cd"), lambda rs: _u_grid(rs, _U_FRACS), _need_r),
    Identity("sd_fourier", "Fourier series of sd equals the theta quotient", "r > 0, u real",
             *_fourier_vs_theta("sd"), lambda rs: _u_grid(rs, _U_FRACS), _need_r),
    Identity("pythagorean", "sn^2 + cn^2 = 1 at complex argument", "r > 0",
             _pyth_lhs, lambda p: 1.0, lambda rs: _theta_grid(rs, _THETA_COMPLEX), _need_r),
    Identity("thm9", "(2pi/(K k)) sum a^{2n+1}/(1-q^{2n+1}) = -cd cot(pi t/K) + cd1 csc(pi t/K) + i cd",
             "|q^{1/2} e^{i pi t/2K}| < 1, t not a multiple of K", _thm9_lhs, _thm9_rhs,
             lambda rs: _theta_grid(rs, _THETA_COMPLEX), _thm9_check),
    Identity("thm10", "(pi/(K k)) sum (-1)^n e^{-(n+1/2) lam pi sqrt r}/sinh((n+1/2) pi sqrt r) = cd coth - cd1 csch + cd",
             "0 < |lambda| < 1", _thm10_lhs, _thm10_rhs,
             lambda rs: _with(rs, "lam", (0.25, 0.5, 0.75)), _thm10_check),
    Identity("thm11", "(2pi/(K k)) sum q^{(2n+1)(1/2+1/nu)}/(1-q^{2n+1}) = i sn coth + i cd1 csch + i sn",
             "2/nu not an integer", _thm11_lhs, _thm11_rhs,
             lambda rs: _with(rs, "nu", (3, 5)), _thm11_check),
    Identity("cor2_limit", "lim_{y->K} cd1(y)/(y-K) = 1 + 2pi^2/(K^2 k) sum_odd q^{n/2}/(1-q^n)", "r > 0",
             _cor2_lhs, _cor2_rhs, _r_grid, _need_r, tol_floor=1e-6),
    Identity("cor2_values", "cd1(0) = 1, cd1(K) = 0, cd1(2K) = -1", "theta in {0, K, 2K}",
             _cor2_values_lhs, _cor2_values_rhs,
             lambda rs: _theta_grid(rs, ("0", "K", "2K")), _cor2_values_check),
    Identity("cor2_antiperiodic", "cd1(u + 2K) = -cd1(u)", "u in the Fourier strip",
             _antiperiodic_lhs, _antiperiodic_rhs,
             lambda rs: _theta_grid(rs, ("0.2K", "0.7K+0.3iKprime", "1.1K-0.2iKprime")), _need_r),
    Identity("thm12", "cd1(q, iK') = 1/(q k) - sinh(pi sqrt r)/k (1 - pi/(2K))", "r > 0",
             _thm12_lhs, _thm12_rhs, _r_grid, _need_r, cancellation_prone=True),
    Identity("cor3", "cd1(q, iK'/2) closed form with a sinh series", "r > 0",
             _cor3_lhs, _cor3_rhs, _r_grid, _need_r),
    Identity("cor4", "cd1(q, K/2) = 1/sqrt(1+k') - pi sqrt 8/(K k) sum_{1 mod 4} (-1)^{(n-1)/4} q^{n/2}/(1-q^n)",
             "r > 0", _cor4_lhs, _cor4_rhs, _r_grid, _need_r),
    Identity("eq55", "-sum chi8(n) q^{n/2}/(1-q^n) = K k/(sqrt2 pi sqrt(1+k'))", "r > 0",
             _eq55_lhs, _eq55_rhs, _r_grid, _need_r),
    Identity("eq56_cn", "cn(K/2) = sqrt(k')/sqrt(1+k')", "r > 0",
             _eq56_cn_lhs, lambda p: jf.half_K_values(_ctx(p))[0], _r_grid, _need_r),
    Identity("eq56_dn", "dn(K/2) = sqrt(k')", "r > 0",
             _eq56_dn_lhs, lambda p: jf.half_K_values(_ctx(p))[1], _r_grid, _need_r),
    Identity("eq57", "cd(K/2) = 1/sqrt(1+k')", "r > 0",
             _eq57_lhs, lambda p: jf.half_K_values(_ctx(p))[2], _r_grid, _need_r),
    Identity("eq58", "sum_{1 mod 4} + sum_{3 mod 4} (alternating) q^{n/2}/(1-q^n) = sqrt2/sqrt(1+k') K k/(2pi)",
             "r > 0", _eq58_lhs, _eq58_rhs, _r_grid, _need_r),
    Identity("eq59", "pi sqrt2/(K k) (sum_{3 mod 4} - sum_{1 mod 4}) = cd1(q, K/2)", "r > 0",
             _eq59_lhs, _cor4_lhs, _r_grid, _need_r),
    Identity("eq64", "log(-1 + 2/(1-u0)) = log P", "|a| < 1, 0 < q < 1",
             _eq64_lhs, _eq64_rhs, lambda rs: _aq_grid(), _aq_check),
    Identity("eq65", "log P = 4 sum a^{2n+1}/((2n+1)(1-q^{2n+1}))", "|a| < 1, 0 < q < 1",
             _eq65_lhs, _eq65_rhs, lambda rs: _aq_grid(), _aq_check),
    Identity("eq66", "d/dt log P = (2 pi i/K) sum a^{2n+1}/(1-q^{2n+1})", "|a| < 1",
             _eq66_lhs, _eq66_rhs, lambda rs: _theta_grid(rs, _THETA_COMPLEX), _thm14_check),
    Identity("eq67", "d/dt log(nd + k sd) = cd, as printed", "theta real in (0, K)",
             _eq67_lhs, _eq67_rhs, lambda rs: _theta_grid(rs, _REAL_THETAS), _real_theta_check,
             tol_floor=1e-6,
             erratum="the derivative of log(nd + k sd) is k cd; see eq67_corrected"),
    Identity("eq67_corrected", "d/dt log(nd + k sd) = k cd", "theta real in (0, K)",
             _eq67_lhs, _eq67_corrected_rhs, lambda rs: _theta_grid(rs, _REAL_THETAS), _real_theta_check,
             tol_floor=1e-6),
    Identity("eq70", "continued fraction for u0 equals (P-1)/(P+1)", "|a| < 1, 0 < q < 1",
             _eq70_lhs, _eq70_rhs, lambda rs: _aq_grid(), _aq_check),
    Identity("thm13", "Re log(-1 + 2/(1-u0(a,q))) = log(nd + k sd), as printed", "theta real in (0, K)",
             _thm13_lhs, _thm13_rhs, lambda rs: _theta_grid(rs, _REAL_THETAS), _real_theta_check,
             erratum="holds with the opposite sign on the right; see thm13_corrected"),
    Identity("thm13_corrected", "Re log(-1 + 2/(1-u0(a,q))) = -log(nd + k sd)", "theta real in (0, K)",
             _thm13_lhs, _thm13_corrected_rhs, lambda rs: _theta_grid(rs, _REAL_THETAS), _real_theta_check),
    Identity("thm13_cd1", "cd1 = cd cos(pi t/K) + 2/k sin(pi t/K) Im d/dt log((-a;q)/(a;q))",
             "theta real in (0, K)", _thm13_cd1_lhs, _cd1_fourier_rhs,
             lambda rs: _theta_grid(rs, _REAL_THETAS), _real_theta_check),
    Identity("thm14", "cd1 by the q-product log-derivative equals its Fourier series", "theta in the strip",
             _thm14_lhs, _cd1_fourier_rhs, lambda rs: _theta_grid(rs, _THETA_COMPLEX), _thm14_strip_check),
    Identity("thm14_cf", "cd1 through the continued fraction log-derivative", "|q^{1/2} e^{i pi t/2K}| < 1",
             _thm14_cf_lhs, _cd1_any_rhs,
             lambda rs: _theta_grid(rs, _THETA_COMPLEX + ("iKprime",)), _thm14_check),
    Identity("thm15", "cd1(q, mK + nu1 iK') finite-sum closed form, nu1 = 2/nu", "m even, 1/nu positive integer",
             _thm15_lhs, _thm15_rhs,
             lambda rs: [{"r": r, "m": m, "inv_nu": l} for r in rs for m, l in ((0, 1), (2, 1), (0, 2))],
             _lattice_check),
    Identity("eq74", "sum (-1)^n q^{(2n+1)(l+1/2)}/(1-q^{2n+1}) = -sum_{j<l} q^{j+1/2}/(1+q^{2j+1}) + K k/(2pi)",
             "l non-negative integer", _eq74_lhs, _eq74_rhs,
             lambda rs: _with(rs, "l", (0, 1, 2, 3)), _eq74_check),
    Identity("eq75", "cd(q, mK + nu1 iK') = (-1)^{m/2}, nu1 = 2/nu", "m even, 1/nu positive integer",
             _eq75_lhs, _eq75_rhs,
             lambda rs: [{"r": r, "m": m, "inv_nu": l} for r in rs for m, l in ((0, 1), (2, 1), (0, 2))],
             _lattice_check),
    Identity("alpha4", "alpha(4) = 6 - 4 sqrt 2", "none",
             _alpha4_lhs, lambda p: 6 - 4 * math.sqrt(2), _fixed({})),
]

CATALOG = {ident.id: ident for ident in _IDENTITIES}


def identity_ids():
    return sorted(CATALOG)


def get(identity_id):
    try:
        return CATALOG[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}") from None


def _as_value(v):
    if isinstance(v, SeriesResult):
        return complex(v.value), v.terms_used
    return complex(v), None


def verify(identity_id, params=None, tol=None):
    """Evaluate both sides of one identity and report the residuals.

    ``tol`` replaces both default tolerances (1e-10 absolute, 1e-9
    relative).  Entries evaluated through numerical differentiation or
    extrapolation carry a ``tol_floor`` that ``tol`` cannot go below, and
    cancellation-prone entries keep a relative floor of 1e-7.
    """
    ident = get(identity_id)
    params = dict(params or {})
    if ident.check is not None:
        ident.check(params)
    if tol is not None and not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    tol_abs = max(TOL_ABS if tol is None else tol, ident.tol_floor)
    tol_rel = max(TOL_REL if tol is None else tol, ident.tol_floor)
    if ident.cancellation_prone:
        tol_rel = max(tol_rel, CANCELLATION_TOL_REL)
    nan = complex(math.nan, math.nan)
    try:
        lhs, terms = _as_value(ident.lhs(params))
        rhs, _ = _as_value(ident.rhs(params))
    except (ArithmeticError, DomainError, OverflowError) as exc:
        return VerificationReport(ident.id, params, nan, nan, math.nan, math.nan, tol_abs, tol_rel,
                                  False, None, error=str(exc), erratum=ident.erratum)
    abs_res = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel_res = abs_res / scale if scale > 0 else 0.0
    passed = abs_res <= tol_abs or rel_res <= tol_rel
    return VerificationReport(ident.id, params, lhs, rhs, abs_res, rel_res, tol_abs, tol_rel,
                              passed, terms, erratum=ident.erratum)


def _param_key(params):
    return tuple(sorted((k, str(v)) for k, v in params.items()))


def verify_all(r_grid, tol=None, ids=None):
    """Run every catalog entry (or ``ids``) over its grid derived from ``r_grid``."""
    r_grid = list(r_grid)
    if not r_grid:
        raise DomainError("r grid must be non-empty")
    for r in r_grid:
        if not r > 0:
            raise DomainError(f"r > 0 violated (r={r})")
    reports = []
    for ident_id in sorted(ids or CATALOG):
        ident = get(ident_id)
        grid = sorted(ident.grid(r_grid), key=_param_key)
        for params in grid:
            reports.append(verify(ident_id, params, tol))
    return reports


def special_constant_checks():
    """Checks at the special values r = 4 and r = 1 with exact constants substituted."""
    reports = [verify("eq17", {}), verify("alpha4", {})]
    # combined identity at r = 4 with alpha(4) = 6 - 4 sqrt 2 as an exact input
    exact_alpha = 6 - 4 * math.sqrt(2)
    lhs, terms = _as_value(_eq16_lhs({"r": 4}))
    rhs = complex(_eq16_rhs({"r": 4}, alpha=exact_alpha))
    res = abs(lhs - rhs)
    rel = res / max(abs(lhs), abs(rhs))
    reports.append(VerificationReport("eq16", {"r": 4, "alpha": "6-4sqrt2"}, lhs, rhs, res, rel,
                                      TOL_ABS, TOL_REL, res <= TOL_ABS or rel <= TOL_REL, terms))
    reports.extend(verify("eq20", {"r": r}) for r in (1, 4))
    return reports
