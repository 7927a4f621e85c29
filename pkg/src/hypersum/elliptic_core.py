"""AGM, complete elliptic integrals, theta nulls and the singular-modulus context.

Everything is parameterized by the positive real ``r`` with nome
``q = exp(-pi*sqrt(r))``; the singular modulus ``k_r`` is the modulus whose
complementary-to-direct period ratio K'/K equals ``sqrt(r)``.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

_EPS = 2.0 ** -52
_THETA_REL = 1e-17
_THETA_CAP = 200


def agm(a, b):
    """Arithmetic-geometric mean of two non-negative reals."""
    if a < 0 or b < 0:
        raise DomainError(f"agm needs non-negative arguments, got ({a}, {b})")
    a, b = float(a), float(b)
    if a == 0.0 or b == 0.0:
        return 0.0
    for _ in range(64):
        if abs(a - b) <= 4 * _EPS * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def _K_from_parameter(m):
    # parameter m = k**2; negative m is allowed (imaginary modulus)
    if m >= 1:
        raise DomainError(f"K diverges for parameter m={m} >= 1")
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - m)))


def complete_K(k):
    """Complete elliptic integral of the first kind at modulus ``k``."""
    if not 0 <= k < 1:
        raise DomainError(f"complete_K needs 0 <= k < 1, got {k}")
    return math.pi / (2.0 * agm(1.0, math.sqrt((1.0 - k) * (1.0 + k))))


def complete_E(k):
    """Complete elliptic integral of the second kind at modulus ``k``.

    Uses the AGM with the accumulated sum of ``2**(n-1) * c_n**2``.
    """
    if not 0 <= k <= 1:
        raise DomainError(f"complete_E needs 0 <= k <= 1, got {k}")
    if k == 1:
        return 1.0
    a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    c = k
    acc = 0.5 * c * c
    power = 0.5
    for _ in range(64):
        if abs(c) <= _EPS * a:
            break
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        power *= 2.0
        acc += power * c * c
    return math.pi / (2.0 * a) * (1.0 - acc)


def _check_nome(q):
    if not 0 <= q < 1:
        raise DomainError(f"theta null values need 0 <= q < 1, got {q}")


def theta2(q):
    _check_nome(q)
    if q == 0:
        return 0.0
    total = 0.0
    for n in range(_THETA_CAP):
        term = q ** ((n + 0.5) ** 2)
        if total and term < _THETA_REL * total:
            break
        total += term
    return 2.0 * total


def theta3(q):
    _check_nome(q)
    total = 0.0
    for n in range(1, _THETA_CAP):
        term = q ** (n * n)
        if term < _THETA_REL * (1.0 + 2.0 * total):
            break
        total += term
    return 1.0 + 2.0 * total


def theta4(q):
    _check_nome(q)
    total = 0.0
    sign = -1.0
    for n in range(1, _THETA_CAP):
        term = q ** (n * n)
        if term < _THETA_REL * abs(1.0 + 2.0 * total):
            break
        total += sign * term
        sign = -sign
    return 1.0 + 2.0 * total


@dataclass(frozen=True)
class EllipticContext:
    """Modulus-level quantities for a given ``r``."""

    r: float
    q: float
    k: float
    kprime: float
    bigK: float
    bigKprime: float
    bigE: float
    alpha: float

    @property
    def sqrt_r(self):
        return math.sqrt(self.r)

    @property
    def bigEprime(self):
        return complete_E(self.kprime)


@lru_cache(maxsize=256)
def context_from_r(r):
    """Build the :class:`EllipticContext` for ``q = exp(-pi*sqrt(r))``."""
    if not r > 0:
        raise DomainError(f"r must be positive, got {r}")
    r = float(r)
    q = math.exp(-math.pi * math.sqrt(r))
    t2, t3, t4 = theta2(q), theta3(q), theta4(q)
    k = (t2 / t3) ** 2
    kp = (t4 / t3) ** 2
    # the theta map gives both moduli to full relative precision, unlike sqrt(1-k^2)
    K = math.pi / (2.0 * agm(1.0, kp))
    Kp = math.pi / (2.0 * agm(1.0, k))
    E = complete_E(k)
    alpha = math.pi / (4.0 * K * K) - math.sqrt(r) * (E / K - 1.0)
    ratio_err = abs(Kp / K - math.sqrt(r))
    if ratio_err > 1e-10 * max(1.0, math.sqrt(r)):
        raise ArithmeticError(f"K'/K deviates from sqrt(r) by {ratio_err:g} at r={r}")
    return EllipticContext(r, q, k, kp, K, Kp, E, alpha)


def elliptic_alpha(r):
    return context_from_r(r).alpha


def mu(r):
    """The combination -1 - 9r + 12 sqrt(r) alpha(1/r) + 6(r-1)k_r + k_r^2 (3r-1)."""
    ctx = context_from_r(r)
    inv = context_from_r(1.0 / r)
    k = ctx.k
    return (-1.0 - 9.0 * r + 12.0 * math.sqrt(r) * inv.alpha
            + 6.0 * (r - 1.0) * k + k * k * (3.0 * r - 1.0))


def gamma_quarter():
    """Gamma(1/4) from the lemniscate relation agm(1, sqrt 2) = (2 pi)^{3/2} / Gamma(1/4)^2."""
    return math.sqrt((2.0 * math.pi) ** 1.5 / agm(1.0, math.sqrt(2.0)))


def gamma_minus_quarter_4th():
    """Gamma(-1/4)**4, reduced to 256 * (pi*sqrt(2)/Gamma(1/4))**4."""
    g34 = math.pi * math.sqrt(2.0) / gamma_quarter()
    return 256.0 * g34 ** 4


def legendre_residual(k):
    """E K' + E' K - K K' - pi/2 for modulus ``k``."""
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    K, Kp = complete_K(k), complete_K(kp)
    E, Ep = complete_E(k), complete_E(kp)
    return E * Kp + Ep * K - K * Kp - math.pi / 2.0


def modular_K_residual(x):
    """(1-x)^(-1/2) K(x/(x-1)) - K(x), with ``x`` the parameter k**2."""
    if not 0 <= x < 1:
        raise DomainError(f"parameter must lie in [0, 1), got {x}")
    return _K_from_parameter(x / (x - 1.0)) / math.sqrt(1.0 - x) - _K_from_parameter(x)


def negative_nome_K(ctx):
    """K at the modulus belonging to nome -q: K(m) with m = k^2/(k^2-1)."""
    k2 = ctx.k * ctx.k
    return _K_from_parameter(k2 / (k2 - 1.0))


def mu_corrected(r):
    """-10 + 2 k_r^2 + 12 sqrt(r) alpha(1/r).

    This is the value that makes
    sum n/(e^{4 pi n/sqrt r} - 1) = 1/24 - sqrt(r)/(16 pi) + K'^2 mu / (48 pi^2)
    hold for every r > 0; it coincides with :func:`mu` only at r = 1.
    """
    k = context_from_r(r).k
    return -10.0 + 2.0 * k * k + 12.0 * math.sqrt(r) * context_from_r(1.0 / r).alpha
