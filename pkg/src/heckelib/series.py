"""Archimedean constants and the compactly supported test-function pair.

All sums are evaluated in double precision with exact-rounding summation
(math.fsum) plus analytic tail corrections; every exported value carries
an explicit error bound instead of relying on extended precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InternalConsistencyError


@dataclass(frozen=True)
class SeriesValue:
    value: float
    error_bound: float

    def __float__(self):
        return self.value


# Bernoulli numbers B_2 .. B_14 for the asymptotic digamma expansion.
_BERNOULLI = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)

_ASYMPTOTIC_X = 12.0


def digamma(x: float) -> SeriesValue:
    """psi(x) for x > 0: upward recurrence plus asymptotic series."""
    if x <= 0:
        raise DomainError("digamma requires x > 0")
    shift = 0.0
    while x < _ASYMPTOTIC_X:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    t = inv2
    tail = 0.0
    for n, b in enumerate(_BERNOULLI, start=1):
        tail -= b / (2 * n) * t
        t *= inv2
    val = shift + math.log(x) - 0.5 / x + tail
    return SeriesValue(val, 1e-14 * (1.0 + abs(val)))


def euler_gamma() -> SeriesValue:
    """Euler's constant, via gamma = H_m - psi(m+1)."""
    m = 20
    harm = math.fsum(1.0 / j for j in range(1, m + 1))
    psi = digamma(float(m + 1))
    return SeriesValue(harm - psi.value, psi.error_bound)


def archimedean_c1(k: int) -> SeriesValue:
    """sum_{l>=1} (k+1) / (l (2l + k + 1)), computed two independent ways.

    Telescoped closed form: gamma + psi((k+3)/2).  The direct route uses
    exact-rounding summation with a midpoint-rule integral tail.  The two
    must agree within 1e-10 or an internal-consistency error is raised.
    """
    if k < 3:
        raise DomainError("weight must be >= 3")
    a = (k + 1) / 2.0
    closed = euler_gamma().value + digamma((k + 3) / 2.0).value

    L = 20000
    direct = math.fsum(1.0 / l - 1.0 / (l + a) for l in range(1, L + 1))
    mid = L + 0.5
    direct += math.log((mid + a) / mid)  # integral tail, midpoint rule
    if abs(direct - closed) > 1e-10:
        raise InternalConsistencyError(
            f"archimedean_c1 dual-path mismatch at k={k}: {closed} vs {direct}"
        )
    return SeriesValue(closed, 1e-11)


def hurwitz_tail(m: int, k: int) -> SeriesValue:
    """sum_{l>=1} (l + (k-1)/2)^{-m}, Euler-Maclaurin corrected.

    The caller applies the alternating (-1)^m sign of the binomial tail.
    """
    if m < 2:
        raise DomainError("exponent must be >= 2 (the series diverges at m=1)")
    if k < 3:
        raise DomainError("weight must be >= 3")
    a = (k - 1) / 2.0
    L = 10000
    terms = []
    for l in range(1, L + 1):
        t = (l + a) ** (-m)
        terms.append(t)
        if t < 1e-20:
            L = l
            break
    s = math.fsum(terms)
    x = L + 1 + a
    integral = x ** (1 - m) / (m - 1)
    corr = 0.5 * x ** (-m)
    corr += m / 12.0 * x ** (-m - 1)
    corr -= m * (m + 1) * (m + 2) / 720.0 * x ** (-m - 3)
    err = m * (m + 1) * (m + 2) * (m + 3) * (m + 4) / 30240.0 * x ** (-m - 5)
    return SeriesValue(s + integral + corr, err + 1e-15 * (1 + s))


def f_n_profile(n: int, x: float) -> float:
    """The piecewise explicit-formula test function supported on (-inf, 0].

    Value e^{x/2} sum_{j=1}^n C(n,j) x^{j-1}/(j-1)! for x < 0, n/2 at 0,
    and 0 for x > 0.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if x > 0:
        return 0.0
    if x == 0:
        return n / 2.0
    poly = 0.0
    for j in range(1, n + 1):
        poly += math.comb(n, j) * x ** (j - 1) / math.factorial(j - 1)
    return math.exp(x / 2.0) * poly


def phi_n(n: int, s: complex) -> complex:
    """1 - (1 - 1/s)^n, the Mellin-side image of f_n_profile."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if s == 0:
        raise DomainError("s must be nonzero")
    return 1.0 - (1.0 - 1.0 / s) ** n
