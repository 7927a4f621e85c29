"""The q-continued fraction u0(a, q) and its q-product form.

    u0 = 2a/(1-q+) a^2(1+q)^2/(1-q^3+) a^2 q(1+q^2)^2/(1-q^5+) ...
       = (P - 1)/(P + 1),   P = ((-a;q)_inf / (a;q)_inf)^2
"""

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, PoleError
from .qseries import DEFAULT_TOL, accumulate, qpochhammer

DEPTH_CAP = 500
_TINY = 1e-300


@dataclass
class CFState:
    depth: int
    convergent: complex
    delta: float


def _partial(a, q, j):
    """(numerator, denominator) of the j-th level, j >= 1."""
    if j == 1:
        return 2 * a, 1 - q
    return a * a * q ** (j - 2) * (1 + q ** (j - 1)) ** 2, 1 - q ** (2 * j - 1)


def _check(a, q):
    if not abs(q) < 1:
        raise DomainError(f"|q| must be < 1, got {q}")
    return complex(a)


def u0_cf(a, q, depth_cap=DEPTH_CAP, tol=1e-16, return_state=False):
    """Modified Lentz evaluation of the continued fraction."""
    a = _check(a, q)
    if a == 0:
        state = CFState(0, 0j, 0.0)
        return (0j, state) if return_state else 0j
    f = _TINY
    C, D = f, 0j
    for j in range(1, depth_cap + 1):
        num, den = _partial(a, q, j)
        D = den + num * D
        if abs(D) < _TINY:
            D = _TINY
        C = den + num / C
        if abs(C) < _TINY:
            C = _TINY
        D = 1 / D
        step = C * D
        f *= step
        delta = abs(step - 1)
        if delta < tol:
            state = CFState(j, f, delta)
            return (f, state) if return_state else f
    raise ConvergenceError(f"continued fraction not converged after {depth_cap} levels",
                           partial=CFState(depth_cap, f, delta))


def u0_cf_backward(a, q, depth=120):
    """Backward recurrence from a fixed depth; returns (u0, du0/da).

    The derivative is carried along the recurrence exactly, so no
    finite differences are involved.
    """
    a = _check(a, q)
    f, df = 1 - q ** (2 * depth - 1), 0j
    for j in range(depth, 1, -1):
        num, _ = _partial(a, q, j)
        dnum = 2 * num / a if a != 0 else 0j
        _, den_prev = _partial(a, q, j - 1)
        if f == 0:
            raise PoleError("zero tail in backward recurrence")
        f, df = den_prev + num / f, dnum / f - num * df / (f * f)
    if f == 0:
        raise PoleError("zero tail in backward recurrence")
    return 2 * a / f, 2 / f - 2 * a * df / (f * f)


def product_P(a, q, tol=DEFAULT_TOL):
    """P = ((-a;q)_inf / (a;q)_inf)^2."""
    a = _check(a, q)
    den = qpochhammer(a, q, tol)
    if abs(den) < 1e-300:
        raise PoleError("(a;q)_inf vanishes: a = q^{-n}")
    return (qpochhammer(-a, q, tol) / den) ** 2


def u0_product(a, q, tol=DEFAULT_TOL):
    P = product_P(a, q, tol)
    if P == -1:
        raise PoleError("P = -1: u0 has a pole")
    return (P - 1) / (P + 1)


def log_P_series(a, q, tol=DEFAULT_TOL):
    """4 sum a^{2n+1} / ((2n+1)(1 - q^{2n+1})); needs |a| < 1."""
    a = _check(a, q)
    aa = abs(a)
    if aa >= 1:
        raise ConvergenceError(f"|a| = {aa:.6g} >= 1: log P series diverges")
    res = accumulate(lambda n: a ** (2 * n + 1) / ((2 * n + 1) * (1 - q ** (2 * n + 1))),
                     lambda n: aa ** (2 * n + 1) / ((2 * n + 1) * (1 - abs(q))),
                     lambda n: aa * aa, tol=tol)
    return 4 * res.value


def log_P_product(a, q, tol=DEFAULT_TOL):
    """2 sum_n [log(1 + a q^n) - log(1 - a q^n)], the principal-branch factorwise log of P."""
    a = _check(a, q)
    total = 0j
    w = a
    for _ in range(100000):
        if abs(w) < tol:
            return 2 * total
        total += cmath.log(1 + w) - cmath.log(1 - w)
        w *= q
    raise ConvergenceError("log P product did not settle")


def log_from_u0(u0):
    """log(-1 + 2/(1 - u0))."""
    return cmath.log(-1 + 2 / (1 - u0))


def logP_dt_cf(ctx, theta, depth=120):
    """d/dt log(-1 + 2/(1 - u0(a(t), q))) at t = theta, through the continued fraction.

    a(t) = i q^{1/2} exp(i pi t/(2K)); the chain rule uses du0/da from the
    backward recurrence and da/dt = a i pi/(2K).
    """
    a = 1j * math.sqrt(ctx.q) * cmath.exp(1j * math.pi * complex(theta) / (2 * ctx.bigK))
    u, du = u0_cf_backward(a, ctx.q, depth)
    return 2 / (1 - u * u) * du * a * 1j * math.pi / (2 * ctx.bigK)


def real_log_u0(ctx, theta, tol=DEFAULT_TOL):
    """Re log(-1 + 2/(1 - u0(a, q))) at a = i q^{1/2} exp(i pi theta/(2K)), theta real."""
    a = 1j * math.sqrt(ctx.q) * cmath.exp(1j * math.pi * float(theta) / (2 * ctx.bigK))
    return log_from_u0(u0_cf(a, ctx.q)).real
