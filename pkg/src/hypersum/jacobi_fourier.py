"""Jacobi elliptic functions for complex argument and the Fourier-defined
auxiliary functions cn1, cc, dd, cd1, ss.

sn, cn, dn and their quotients come from theta-function quotients after
reducing the argument into the fundamental cell, so they are valid on the
whole plane.  The Fourier series are evaluated only inside their strip of
convergence |Im(pi u / 2K)| < pi sqrt(r) / 2 and serve both as definitions
(cn1, cc, dd, cd1, ss) and as cross-checks (sn, cn, sd, cd).
"""

import cmath
import re
import math
import warnings
from dataclasses import dataclass

from .elliptic_core import EllipticContext, negative_nome_K, theta2, theta3, theta4
from .errors import ConvergenceError, DomainError, PoleError
from .qseries import DEFAULT_TOL, SeriesResult, accumulate


class CancellationWarning(RuntimeWarning):
    pass


# --------------------------------------------------------------------------
# Theta functions with complex argument (real nome)

def _theta_odd(z, q, kind):
    # theta1 (kind=1) and theta2 (kind=2): 2 sum q^{(n+1/2)^2} {(-1)^n sin, cos}((2n+1)z)
    scale = q ** 0.25 * (min(1.0, abs(cmath.sin(z))) if kind == 1 else 1.0)
    total = 0j
    for n in range(200):
        w = (2 * n + 1) * z
        c = q ** ((n + 0.5) ** 2)
        if n > 0 and (2 * n + 1) * c * math.exp(abs(w.imag)) < 1e-18 * scale:
            break
        if kind == 1:
            total += (-1) ** n * c * cmath.sin(w)
        else:
            total += c * cmath.cos(w)
    return 2 * total


def _theta_even(z, q, alternating):
    # theta3 / theta4: 1 + 2 sum (+-1)^n q^{n^2} cos(2nz)
    total = 0j
    for n in range(1, 200):
        w = 2 * n * z
        c = q ** (n * n)
        if c * math.exp(abs(w.imag)) < 1e-18:
            break
        total += ((-1) ** n if alternating else 1) * c * cmath.cos(w)
    return 1 + 2 * total


def theta_functions(z, q):
    """(theta1, theta2, theta3, theta4) at complex ``z`` for real nome ``q``."""
    z = complex(z)
    return (_theta_odd(z, q, 1), _theta_odd(z, q, 2),
            _theta_even(z, q, False), _theta_even(z, q, True))


_ZERO_TOL = 1e-13


def _jacobi_all(ctx, u):
    u = complex(u)
    K, Kp = ctx.bigK, ctx.bigKprime
    m = round(u.real / (2 * K))
    n = round(u.imag / (2 * Kp))
    u0 = u - 2 * m * K - 2j * n * Kp
    z = math.pi * u0 / (2 * K)
    q = ctx.q
    return (m, n), theta_functions(z, q), (theta2(q), theta3(q), theta4(q))


def _quotient(num, den, label):
    if abs(den) < _ZERO_TOL * max(1.0, abs(num)):
        raise PoleError(f"{label} has a pole at this argument")
    return num / den


def sn(ctx, u):
    (m, n), (t1, t2, t3, t4), (a2, a3, a4) = _jacobi_all(ctx, u)
    return (-1) ** m * (a3 / a2) * _quotient(t1, t4, "sn")


def cn(ctx, u):
    (m, n), (t1, t2, t3, t4), (a2, a3, a4) = _jacobi_all(ctx, u)
    return (-1) ** (m + n) * (a4 / a2) * _quotient(t2, t4, "cn")


def dn(ctx, u):
    (m, n), (t1, t2, t3, t4), (a2, a3, a4) = _jacobi_all(ctx, u)
    return (-1) ** n * (a4 / a3) * _quotient(t3, t4, "dn")


def cd(ctx, u):
    (m, n), (t1, t2, t3, t4), (a2, a3, a4) = _jacobi_all(ctx, u)
    return (-1) ** m * (a3 / a2) * _quotient(t2, t3, "cd")


def sd(ctx, u):
    (m, n), (t1, t2, t3, t4), (a2, a3, a4) = _jacobi_all(ctx, u)
    return (-1) ** (m + n) * (a3 * a3 / (a2 * a4)) * _quotient(t1, t3, "sd")


def nd(ctx, u):
    (m, n), (t1, t2, t3, t4), (a2, a3, a4) = _jacobi_all(ctx, u)
    return (-1) ** n * (a3 / a4) * _quotient(t4, t3, "nd")


# --------------------------------------------------------------------------
# Fourier series

@dataclass(frozen=True)
class NomeData:
    """Series data for nome q or -q: q^{1/2}, q, K and k (complex for -q)."""

    qhalf: complex
    q: complex
    bigK: complex
    k: complex
    kprime: complex

    @classmethod
    def positive(cls, ctx):
        return cls(math.sqrt(ctx.q), ctx.q, ctx.bigK, ctx.k, ctx.kprime)

    @classmethod
    def negative(cls, ctx):
        # (-q)^{n+1/2} = i (-1)^n q^{n+1/2}, K* = k' K, k* = i k / k'
        return cls(1j * math.sqrt(ctx.q), -ctx.q, ctx.kprime * ctx.bigK,
                   1j * ctx.k / ctx.kprime, 1.0 / ctx.kprime)


@dataclass(frozen=True)
class NegativeNomePair:
    base: EllipticContext
    star_bigK: float
    star_k: complex

    @classmethod
    def from_context(cls, ctx):
        return cls(ctx, ctx.kprime * ctx.bigK, 1j * ctx.k / ctx.kprime)

    def residuals(self):
        """Residuals of i K k / (K* k*) = 1, k' (k*)' = 1 and K(k*) / K = k'.

        The last one computes K(k*) from the (negative) parameter k*^2
        directly rather than from the k' K shortcut.
        """
        ctx = self.base
        r1 = abs(1j * ctx.bigK * ctx.k / (self.star_bigK * self.star_k) - 1)
        r2 = abs(ctx.kprime * cmath.sqrt(1 - self.star_k ** 2) - 1)
        r3 = abs(negative_nome_K(ctx) / ctx.bigK - ctx.kprime)
        return r1, r2, r3


# name: (extra factor 1/k' in prefactor, alternating, trig, harmonic offset, denom sign, denom offset)
_FOURIER = {
    "sn":  (False, False, "sin", 1, -1, 1),
    "cn":  (False, False, "cos", 1, +1, 1),
    "cn1": (False, False, "cos", 3, +1, 1),
    "sd":  (True,  True,  "sin", 1, +1, 1),
    "cc":  (False, False, "cos", 1, +1, -1),
    "cd":  (False, True,  "cos", 1, -1, 1),
    "dd":  (False, True,  "cos", 1, -1, -1),
    "cd1": (False, True,  "cos", 3, -1, 1),
    "ss":  (False, False, "sin", 1, +1, 1),
    # sine companion of cd; appears when cd1 is expanded by the addition formula
    "sdm": (False, True,  "sin", 1, -1, 1),
}

FOURIER_NAMES = tuple(n for n in _FOURIER if n != "sdm")


def fourier_series(name, nome, u, tol=DEFAULT_TOL):
    """Evaluate one of the Fourier-defined functions for the given :class:`NomeData`."""
    try:
        over_kp, alt, trig, offset, dsign, doff = _FOURIER[name]
    except KeyError:
        raise DomainError(f"unknown Fourier function {name!r}") from None
    z = math.pi * complex(u) / (2 * nome.bigK)
    y = abs(z.imag)
    aq = abs(nome.q)
    rho = aq * math.exp(2 * y)
    # points on the strip boundary (e.g. iK') are treated as outside
    if rho >= 1 - 1e-9:
        raise ConvergenceError(
            f"{name}: argument outside the Fourier strip (|q| e^(2|Im z|) = {rho:.6g} >= 1)")
    pref = 2 * math.pi / (nome.bigK * nome.k)
    if over_kp:
        pref /= nome.kprime
    f = cmath.sin if trig == "sin" else cmath.cos
    q, qh = nome.q, nome.qhalf

    def term(n):
        sign = (-1) ** n if alt else 1
        return sign * qh * q ** n * f((2 * n + offset) * z) / (1 + dsign * q ** (2 * n + doff))

    def bound(n):
        e = max(2 * n + doff, 1)
        return aq ** (n + 0.5) * math.exp((2 * n + offset) * y) / (1 - aq ** e)

    res = accumulate(term, bound, lambda n: rho, start=0, tol=tol / abs(pref))
    return SeriesResult(pref * res.value, res.terms_used, abs(pref) * res.tail_bound)


def fourier_fn(name, ctx, u, tol=DEFAULT_TOL):
    """Fourier-series value of ``name`` at nome q (complex result)."""
    return complex(fourier_series(name, NomeData.positive(ctx), u, tol).value)


def fourier_fn_negative(name, ctx, u, tol=DEFAULT_TOL):
    """The same series with q replaced by -q."""
    return complex(fourier_series(name, NomeData.negative(ctx), u, tol).value)


def ss(ctx, u, tol=DEFAULT_TOL):
    return fourier_fn("ss", ctx, u, tol)


def _half_angle(ctx, u):
    return math.pi * complex(u) / (2 * ctx.bigK)


def prop4_residual(ctx, u, tol=DEFAULT_TOL):
    """ss - (cn cot 2z - cn1 csc 2z), plus the cc form; ``None`` where 2z is a multiple of pi."""
    z = _half_angle(ctx, u)
    s2 = cmath.sin(2 * z)
    if abs(s2) < 1e-8 or abs(cmath.sin(z)) < 1e-8:
        return None
    lhs = ss(ctx, u, tol)
    c = fourier_fn("cn", ctx, u, tol)
    c1 = fourier_fn("cn1", ctx, u, tol)
    cc = fourier_fn("cc", ctx, u, tol)
    q = ctx.q
    form2 = c * cmath.cos(2 * z) / s2 - c1 / s2
    form1 = (c * cmath.cos(2 * z) / s2 - cc / (q * s2)
             + math.pi * math.sqrt(q) / ((1 + q) * ctx.k * ctx.bigK * cmath.sin(z)))
    return abs(lhs - form2), abs(lhs - form1)


def cc_rearrangement_residual(ctx, u, tol=DEFAULT_TOL):
    """cc - [2 pi/(K k) q^{1/2} cos z / (1 + 1/q) + q cn1]."""
    z = _half_angle(ctx, u)
    q = ctx.q
    first = 2 * math.pi / (ctx.bigK * ctx.k) * math.sqrt(q) * cmath.cos(z) / (1 + 1 / q)
    return abs(fourier_fn("cc", ctx, u, tol) - first - q * fourier_fn("cn1", ctx, u, tol))


def negative_nome_checks(ctx, u, tol=DEFAULT_TOL):
    """Residuals of sn(-q,u) = k' sd(q,u/k'), cn(-q,u) = cd(q,u/k'), cn1(-q,u) = cd1(q,u/k')."""
    kp = ctx.kprime
    v = complex(u) / kp
    r_sn = abs(fourier_fn_negative("sn", ctx, u, tol) - kp * fourier_fn("sd", ctx, v, tol))
    r_cn = abs(fourier_fn_negative("cn", ctx, u, tol) - fourier_fn("cd", ctx, v, tol))
    r_cn1 = abs(fourier_fn_negative("cn1", ctx, u, tol) - fourier_fn("cd1", ctx, v, tol))
    return r_sn, r_cn, r_cn1


# --------------------------------------------------------------------------
# cd1 through the q-product log-derivative

def nome_argument(ctx, theta):
    """a = i q^{1/2} exp(i pi theta / (2K))."""
    return 1j * math.sqrt(ctx.q) * cmath.exp(1j * math.pi * complex(theta) / (2 * ctx.bigK))


def _check_a(ctx, theta):
    a = nome_argument(ctx, theta)
    if abs(a) >= 1:
        raise DomainError(f"|q^(1/2) exp(i pi theta/2K)| = {abs(a):.6g} must be < 1")
    return a


def product_logderiv(ctx, theta, tol=DEFAULT_TOL):
    """d/dt log((-a;q)_inf / (a;q)_inf) at t = theta, differentiated term by term.

    With da/dt = a i pi/(2K) each factor contributes
    i pi/(2K) * 2 a q^n / (1 - a^2 q^{2n}).
    """
    a = _check_a(ctx, theta)
    q = ctx.q
    aa = abs(a)

    def term(n):
        w = a * q ** n
        return w / (1 - w * w)

    res = accumulate(term, lambda n: aa * q ** n / (1 - aa * aa * q ** (2 * n)),
                     lambda n: q, start=0, tol=tol)
    return 1j * math.pi / ctx.bigK * res.value


def cd1(ctx, theta, tol=DEFAULT_TOL):
    """cd1(q, theta) by the q-product route; valid beyond the Fourier strip.

    cd1 = cd cos(2z) - i cd sin(2z) - 2i/k sin(2z) D,  z = pi theta/(2K),
    D the log-derivative of (-a;q)_inf/(a;q)_inf.
    """
    theta = complex(theta)
    z = _half_angle(ctx, theta)
    D = product_logderiv(ctx, theta, tol)
    c = cd(ctx, theta)
    s2, c2 = cmath.sin(2 * z), cmath.cos(2 * z)
    parts = (c * c2, -1j * c * s2, -2j / ctx.k * s2 * D)
    value = sum(parts)
    scale = max(abs(p) for p in parts)
    if scale > 1e3 * max(abs(value), 1e-300) and scale > 1e-8:
        warnings.warn(f"cd1 at theta={theta}: relative cancellation {scale / max(abs(value), 1e-300):.3g}",
                      CancellationWarning, stacklevel=2)
    return value


def cd1_any(ctx, theta, tol=DEFAULT_TOL):
    """Fourier definition inside the strip, q-product route outside."""
    try:
        return fourier_fn("cd1", ctx, theta, tol)
    except ConvergenceError:
        return cd1(ctx, theta, tol)


def odd_power_sum(ctx, theta, tol=DEFAULT_TOL):
    """(2 pi/(K k)) sum a^{2n+1}/(1 - q^{2n+1}) summed directly."""
    a = nome_argument(ctx, theta)
    aa = abs(a)
    if aa >= 1:
        raise ConvergenceError(f"|a| = {aa:.6g} >= 1: series diverges")
    q = ctx.q
    pref = 2 * math.pi / (ctx.bigK * ctx.k)
    res = accumulate(lambda n: a ** (2 * n + 1) / (1 - q ** (2 * n + 1)),
                     lambda n: aa ** (2 * n + 1) / (1 - q),
                     lambda n: aa * aa, tol=tol / pref)
    return pref * res.value


def odd_power_closed_form(ctx, theta, tol=DEFAULT_TOL):
    """-cd cot(pi theta/K) + cd1 csc(pi theta/K) + i cd; cd1 from its Fourier series."""
    w = math.pi * complex(theta) / ctx.bigK
    s = cmath.sin(w)
    if abs(s) < 1e-10:
        raise DomainError("csc(pi theta/K) is singular at this theta")
    c = cd(ctx, theta)
    return -c * cmath.cos(w) / s + fourier_fn("cd1", ctx, theta, tol) / s + 1j * c


def logP_dt(ctx, theta, tol=DEFAULT_TOL):
    """d/dt of 4 sum a^{2n+1}/((2n+1)(1-q^{2n+1})): (2 pi i/K) sum a^{2n+1}/(1-q^{2n+1})."""
    return 2j * math.pi / ctx.bigK * (ctx.bigK * ctx.k / (2 * math.pi)) * odd_power_sum(ctx, theta, tol)


# --------------------------------------------------------------------------
# Closed forms for special arguments

def cd1_special(ctx, which, m=0, inv_nu=1):
    """Closed-form cd1 at iK', iK'/2, K/2, or mK + nu1 iK' with nu1 = 2/nu, 1/nu = ``inv_nu``.

    The iK'/2 and K/2 forms still contain a rapidly convergent series; the
    lattice point form contains only a finite sum.
    """
    from . import qseries as qs
    q, k, kp, K = ctx.q, ctx.k, ctx.kprime, ctx.bigK
    sr = ctx.sqrt_r
    x = math.pi * sr
    if which == "iK'":
        # 1/(q k) - sinh(x)/k (1 - pi/(2K)), with e^x grouped: (e^x - sinh x)/k + sinh(x) pi/(2K k)
        return (math.cosh(x) + math.sinh(x) * math.pi / (2 * K)) / k
    if which == "iK'/2":
        series = qs.hyperbolic_sum(
            lambda n: (-1) ** n * math.exp(-(n + 0.5) * x / 2) / math.sinh((n + 0.5) * x),
            1.5 * x, start=0, margin=2.0 * math.exp(-0.75 * x) / -math.expm1(-x)).value
        return 1 / math.sqrt(q * k) - math.pi * math.sinh(x / 2) / (K * k) * series
    if which == "K/2":
        series = qs.lambert_sum(qs.LambertSpec(x=x, parity="1mod4", alternating="quarter",
                                               shift=0.5)).value
        return 1 / math.sqrt(1 + kp) - math.pi * math.sqrt(8) / (K * k) * series
    if which == "lattice":
        if m % 2 or int(inv_nu) != inv_nu or inv_nu < 1:
            raise DomainError("need m even and 1/nu a positive integer")
        nu1 = 2 * int(inv_nu)
        y = nu1 * x
        sgn = -1 if (m // 2) % 2 else 1
        finite = math.fsum(q ** (j + 0.5) / (1 + q ** (2 * j + 1)) for j in range(int(inv_nu)))
        return sgn * math.exp(y) - sgn * 2 * math.pi / (K * k) * math.sinh(y) * (-finite + K * k / (2 * math.pi))
    raise DomainError(f"unknown special point {which!r}")


def lattice_point(ctx, m, inv_nu):
    return m * ctx.bigK + 2j * inv_nu * ctx.bigKprime


def finite_sum_identity(ctx, l, tol=DEFAULT_TOL):
    """Both sides of sum (-1)^n q^{(2n+1)(l+1/2)}/(1-q^{2n+1}) = -sum_{j<l} q^{j+1/2}/(1+q^{2j+1}) + K k/(2 pi)."""
    q = ctx.q
    p = l + 0.5
    lhs = accumulate(lambda n: (-1) ** n * q ** ((2 * n + 1) * p) / (1 - q ** (2 * n + 1)),
                     lambda n: q ** ((2 * n + 1) * p) / (1 - q), lambda n: q ** (2 * p), tol=tol).value
    rhs = -math.fsum(q ** (j + 0.5) / (1 + q ** (2 * j + 1)) for j in range(l)) + ctx.bigK * ctx.k / (2 * math.pi)
    return lhs, rhs


def half_K_values(ctx):
    """Closed forms of cn(K/2), dn(K/2), cd(K/2)."""
    kp = ctx.kprime
    return math.sqrt(kp) / math.sqrt(1 + kp), math.sqrt(kp), 1 / math.sqrt(1 + kp)


def shift_identities_check(ctx, u):
    """Residuals of cn(u+K) = -k' sn/dn, dn(u+K) = k'/dn, cd(u+K) = -sn, sn(u+2K) = -sn."""
    K, kp = ctx.bigK, ctx.kprime
    s, d = sn(ctx, u), dn(ctx, u)
    return (abs(cn(ctx, u + K) + kp * s / d),
            abs(dn(ctx, u + K) - kp / d),
            abs(cd(ctx, u + K) + s),
            abs(sn(ctx, u + 2 * K) + s))


def sum_rule_residual(ctx, u, tol=DEFAULT_TOL):
    """sn/(cn dn) against (pi/(2k'^2 K)) tan(pi u/2K) + (2 pi/(k'^2 K)) sum (-1)^n q^n sin(n pi u/K)/(1+q^n)."""
    K, kp, q = ctx.bigK, ctx.kprime, ctx.q
    u = float(u)
    w = math.pi * u / K
    series = accumulate(lambda n: (-1) ** n * q ** n * math.sin(n * w) / (1 + q ** n),
                        lambda n: q ** n, lambda n: q, start=1, tol=tol).value
    rhs = math.pi / (2 * kp * kp * K) * math.tan(w / 2) + 2 * math.pi / (kp * kp * K) * series
    lhs = sn(ctx, u) / (cn(ctx, u) * dn(ctx, u))
    return abs(lhs - rhs), lhs, rhs


# --------------------------------------------------------------------------
# Lattice-relative argument tokens: "K/2", "iKprime", "0.3K", "-K+2iKprime/3"

_TERM = re.compile(
    r"^(?P<coef>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?P<i>i)?"
    r"(?P<unit>Kprime|K'|K)?(?:/(?P<div>\d+\.?\d*|\.\d+))?$")


def parse_lattice(text, ctx):
    """Parse a sum of terms like ``2iKprime/3`` into a complex number for ``ctx``."""
    src = str(text).replace(" ", "")
    if not src:
        raise DomainError("empty argument expression")
    pieces = [p for p in re.split(r"(?<!\d[eE])(?=[+-])", src) if p]
    total = 0j
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        m = _TERM.match(body)
        if not m or not (m["coef"] or m["i"] or m["unit"]):
            raise DomainError(f"cannot parse term {piece!r} in {text!r}")
        value = complex(float(m["coef"]) if m["coef"] else 1.0)
        if m["i"]:
            value *= 1j
        if m["unit"] == "K":
            value *= ctx.bigK
        elif m["unit"]:
            value *= ctx.bigKprime
        if m["div"]:
            value /= float(m["div"])
        total += sign * value
    return total
