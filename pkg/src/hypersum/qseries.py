"""Direct summation of hyperbolic, Lambert and q-series, plus the arithmetic
coefficients they need (Bernoulli numbers, Q_nu, divisor sums, chi_8, odd zeta).

Every truncated sum returns a :class:`SeriesResult` whose ``tail_bound`` is a
geometric majorant of the omitted terms.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, TruncationError

DEFAULT_TOL = 1e-17
TERM_CAP = 20000


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    tail_bound: float

    def __float__(self):
        return float(self.value.real if isinstance(self.value, complex) else self.value)

    def __complex__(self):
        return complex(self.value)


def accumulate(term, bound, ratio, start=0, step=1, tol=DEFAULT_TOL, cap=TERM_CAP):
    """Sum ``term(n)`` for n = start, start+step, ... with a certified stop.

    ``bound(n)`` must dominate ``|term(m)|`` at m = n, and ``ratio(n)`` must
    bound ``bound(m+step)/bound(m)`` for every m >= n.  Summation stops as soon
    as the geometric majorant ``bound(n)/(1-ratio(n))`` of the remaining tail
    drops below ``tol``.
    """
    total = 0.0
    used = 0
    n = start
    while True:
        rho = ratio(n)
        if rho < 1.0:
            tail = bound(n) / (1.0 - rho)
            if tail < tol:
                return SeriesResult(total, used, tail)
        if used >= cap:
            raise TruncationError(
                f"term cap {cap} reached before tolerance {tol:g}",
                partial=SeriesResult(total, used, math.inf))
        total += term(n)
        used += 1
        n += step


# --------------------------------------------------------------------------
# Lambert-type sums  sum chi(n) n^s e^{w n x} / (e^{n x} - sign)

_PARITY = ("all", "odd", "even", "1mod4", "3mod4")
_ALTERNATION = ("none", "n", "half", "quarter", "chi8")


@dataclass(frozen=True)
class LambertSpec:
    """Summand shape ``alt(n) * n**s * exp(shift*n*x) / (exp(n*x) - sign)``.

    ``alternating`` selects the sign pattern: ``"n"`` is (-1)^n,
    ``"half"`` is (-1)^((n-1)/2), ``"quarter"`` is (-1)^floor(n/4)
    (that is (-1)^((n-1)/4) on 1 mod 4 and (-1)^((n-3)/4) on 3 mod 4),
    ``"chi8"`` is the character chi8.  ``shift`` < 1 lets q^{n/2}/(1-q^n)
    style summands be written with ``shift=0.5``.
    """

    x: float
    s: int = 0
    sign: int = 1
    parity: str = "all"
    alternating: str = "none"
    shift: float = 0.0

    def __post_init__(self):
        if not self.x > 0:
            raise DomainError(f"Lambert scale x must be positive, got {self.x}")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 (e^{nx}-1) or -1 (e^{nx}+1)")
        if self.parity not in _PARITY:
            raise DomainError(f"unknown parity filter {self.parity!r}")
        if self.alternating not in _ALTERNATION:
            raise DomainError(f"unknown alternation {self.alternating!r}")
        if self.alternating == "chi8" and self.parity not in ("all", "odd"):
            raise DomainError("chi8 already selects odd n; combine only with parity 'all' or 'odd'")
        if self.alternating in ("half", "quarter") and self.parity in ("all", "even"):
            raise DomainError(f"alternation {self.alternating!r} needs odd n")
        if not self.shift < 1:
            raise DomainError("shift must be < 1 for convergence")


def _alternation(kind, n):
    if kind == "none":
        return 1
    if kind == "n":
        return -1 if n & 1 else 1
    if kind == "half":
        return -1 if (n // 2) & 1 else 1
    if kind == "quarter":
        return -1 if (n // 4) & 1 else 1
    return chi8(n)


def lambert_sum(spec, tol=DEFAULT_TOL):
    x, s, sign = spec.x, spec.s, spec.sign
    decay = (1.0 - spec.shift) * x
    start, step = {"all": (1, 1), "odd": (1, 2), "even": (2, 2),
                   "1mod4": (1, 4), "3mod4": (3, 4)}[spec.parity]
    if spec.alternating == "chi8":
        start, step = 1, 2

    def term(n):
        alt = _alternation(spec.alternating, n)
        if alt == 0:
            return 0.0
        # e^{(shift-1)nx} / (1 - sign e^{-nx}) avoids overflow for large nx
        e = math.exp(-n * x)
        return alt * n ** s * math.exp(-n * decay) / (1.0 - sign * e)

    def bound(n):
        denom = 1.0 - math.exp(-n * x) if sign == 1 else 1.0
        return n ** s * math.exp(-n * decay) / denom

    def ratio(n):
        return ((n + step) / n) ** s * math.exp(-step * decay)

    return accumulate(term, bound, ratio, start, step, tol)


def hyperbolic_sum(term, x, start=0, step=1, power=0, tol=DEFAULT_TOL, margin=2.0):
    """Sum a hyperbolic summand decaying like ``n**power * exp(-x*n)``.

    ``margin`` is the constant in the majorant ``margin * n**power * e^{-x n}``;
    the default 2 covers 1/sinh, 1/cosh and 1/(e^t+-1) for t >= log 3.
    """
    def bound(n):
        return margin * max(n, 1) ** power * math.exp(-x * n)

    def ratio(n):
        m = max(n, 1)
        return ((m + step) / m) ** power * math.exp(-x * step)

    return accumulate(term, bound, ratio, start, step, tol)


def ghost_sum(x, tol=DEFAULT_TOL):
    """sum_{n>=1} 1/(e^{nx} - 1)."""
    return lambert_sum(LambertSpec(x=x), tol)


@lru_cache(maxsize=4096)
def divisor_count(n):
    if n < 1:
        raise DomainError("divisor_count needs n >= 1")
    count = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            count += 1 if d * d == n else 2
        d += 1
    return count


@lru_cache(maxsize=4096)
def divisor_sigma(n):
    if n < 1:
        raise DomainError("divisor_sigma needs n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d if d * d == n else d + n // d
        d += 1
    return total


def _divisor_series(coef, growth, x, tol):
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    # coef(n) <= growth * n**2 for the coefficient families used here
    return accumulate(
        lambda n: coef(n) * math.exp(-n * x),
        lambda n: growth * n * n * math.exp(-n * x),
        lambda n: ((n + 1) / n) ** 2 * math.exp(-x),
        start=1, tol=tol)


def divisor_side(x, tol=DEFAULT_TOL):
    """sum_{n>=1} d(n) e^{-nx}, the divisor-generating side of the ghost sum."""
    return _divisor_series(divisor_count, 1.0, x, tol)


def sigma_side(x, tol=DEFAULT_TOL):
    """sum_{n>=1} sigma(n) e^{-nx}."""
    return _divisor_series(divisor_sigma, 1.0, x, tol)


def arithmetic_transform(X, x, tol=DEFAULT_TOL):
    """Both sides of sum X(n)/(e^{nx}-1) = sum e^{-nx} sum_{d|n} X(d).

    ``X`` must be polynomially bounded (|X(n)| <= n); returns the two
    :class:`SeriesResult` objects.
    """
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    lhs = accumulate(lambda n: X(n) / math.expm1(n * x),
                     lambda n: n * math.exp(-n * x) / -math.expm1(-n * x),
                     lambda n: (n + 1) / n * math.exp(-x), start=1, tol=tol)

    def divisor_total(n):
        return sum(X(d) for d in range(1, n + 1) if n % d == 0)

    rhs = accumulate(lambda n: divisor_total(n) * math.exp(-n * x),
                     lambda n: n * n * math.exp(-n * x),
                     lambda n: ((n + 1) / n) ** 2 * math.exp(-x), start=1, tol=tol)
    return lhs, rhs


def sinh_sq_sum(x, weighted=False, tol=DEFAULT_TOL):
    """sum 1/sinh^2(nx), or sum n/sinh^2(nx) when ``weighted``."""
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    power = 1 if weighted else 0

    c = 4.0 / (1.0 - math.exp(-2 * x)) ** 2
    return accumulate(lambda n: n ** power / math.sinh(n * x) ** 2,
                      lambda n: c * n ** power * math.exp(-2 * n * x),
                      lambda n: ((n + 1) / n) ** power * math.exp(-2 * x),
                      start=1, tol=tol)


def weighted_divisor_derivative(x, tol=DEFAULT_TOL):
    """-2 d/dx sum d(N) e^{-2Nx}, differentiated term by term: 4 sum N d(N) e^{-2Nx}."""
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    return accumulate(lambda n: 4.0 * n * divisor_count(n) * math.exp(-2 * n * x),
                      lambda n: 4.0 * n ** 3 * math.exp(-2 * n * x),
                      lambda n: ((n + 1) / n) ** 3 * math.exp(-2 * x), start=1, tol=tol)


# --------------------------------------------------------------------------
# q-products and the eta function f(-q)

def _check_q(q):
    if not 0 <= abs(q) < 1:
        raise DomainError(f"|q| must be < 1, got {q}")


def qpochhammer(z, q, tol=DEFAULT_TOL):
    """(z; q)_inf = prod_{n>=0} (1 - z q^n)."""
    _check_q(q)
    z = complex(z)
    prod = 1.0 + 0.0j
    zq = z
    for _ in range(TERM_CAP):
        if abs(zq) < tol:
            return prod
        prod *= 1.0 - zq
        zq *= q
    raise TruncationError("q-Pochhammer product did not settle", partial=prod)


def _check_real_nome(q):
    if not 0 < q < 1:
        raise DomainError(f"nome must lie in (0, 1), got {q}")


def eta_product(q, tol=DEFAULT_TOL):
    """f(-q) = prod_{n>=1} (1 - q^n)."""
    if q == 0:
        return 1.0
    _check_real_nome(q)
    return qpochhammer(q, q, tol).real


def log_eta_A(q, tol=DEFAULT_TOL):
    """A = sum q^n / (n (1 - q^n)), so that exp(-A) = f(-q)."""
    _check_real_nome(q)
    return accumulate(lambda n: q ** n / (n * (1.0 - q ** n)),
                      lambda n: q ** n / (n * (1.0 - q)),
                      lambda n: q, start=1, tol=tol)


def eta_logderiv(q, tol=DEFAULT_TOL):
    """q d/dq log f(-q) = -sum n q^n / (1 - q^n)."""
    _check_real_nome(q)
    res = accumulate(lambda n: n * q ** n / (1.0 - q ** n),
                     lambda n: n * q ** n / (1.0 - q),
                     lambda n: (n + 1) / n * q, start=1, tol=tol)
    return SeriesResult(-res.value, res.terms_used, res.tail_bound)


# --------------------------------------------------------------------------
# Arithmetic coefficients

BERNOULLI_MAX = 64


@lru_cache(maxsize=None)
def _bernoulli_table():
    # Akiyama-Tanigawa, giving B_1 = +1/2; only even indices are exposed
    table = []
    row = [Fraction(0)] * (BERNOULLI_MAX + 1)
    for m in range(BERNOULLI_MAX + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        table.append(row[0])
    return tuple(table)


def bernoulli_exact(n):
    if n < 0:
        raise DomainError("Bernoulli index must be non-negative")
    if n > BERNOULLI_MAX:
        raise DomainError(f"Bernoulli index capped at {BERNOULLI_MAX}, got {n}")
    if n == 1:
        return Fraction(-1, 2)
    if n & 1:
        return Fraction(0)
    return _bernoulli_table()[n]


def bernoulli(n):
    """B_n as a float (B_1 = -1/2, odd n > 1 give 0)."""
    return float(bernoulli_exact(n))


Q_NU_MAX = 40


@lru_cache(maxsize=None)
def _fermi_series():
    # coefficients of 1/(e^x + 1) by power-series division of 1 by (2 + x + x^2/2! + ...)
    deg = Q_NU_MAX
    denom = [Fraction(2)] + [Fraction(1, math.factorial(j)) for j in range(1, deg + 1)]
    out = []
    for n in range(deg + 1):
        acc = Fraction(1) if n == 0 else Fraction(0)
        acc -= sum(denom[j] * out[n - j] for j in range(1, n + 1))
        out.append(acc / denom[0])
    return tuple(out)


def q_nu_exact(nu):
    if not 0 <= nu <= Q_NU_MAX:
        raise DomainError(f"Q_nu supported for 0 <= nu <= {Q_NU_MAX}, got {nu}")
    return 2 * math.factorial(nu) * _fermi_series()[nu]


def q_nu(nu):
    """Q_nu = 2 (d^nu/dx^nu 1/(e^x+1)) at x = 0."""
    return float(q_nu_exact(nu))


def zeta_odd(s, tol=1e-15):
    """Riemann zeta at an integer ``s``; s >= 2 by Euler-Maclaurin, s <= 0 from Bernoulli numbers."""
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    if s <= 0:
        # zeta(-m) = (-1)^m B_{m+1}/(m+1)
        m = -s
        return (-1) ** m * bernoulli(m + 1) / (m + 1)
    N = 12
    head = math.fsum(n ** -s for n in range(1, N))
    tail = N ** (1 - s) / (s - 1) + 0.5 * N ** -s
    rising = float(s)
    for j in range(1, 12):
        corr = bernoulli(2 * j) / math.factorial(2 * j) * rising * N ** (-s - 2 * j + 1)
        tail += corr
        if abs(corr) < tol * 1e-3:
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return head + tail


def chi8(n):
    """The Kronecker symbol ((n+2)/8) for odd n: +1 if n+2 = +-1 mod 8, -1 if +-3 mod 8."""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"chi8 is defined on odd positive integers, got {n}")
    return 1 if (n + 2) % 8 in (1, 7) else -1
