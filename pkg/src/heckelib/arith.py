"""Exact integer arithmetic, sieves, and multiplicative functions.

Everything here returns exact values on unbounded Python integers; the
only floating-point output is von_mangoldt (a logarithm by definition).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import DomainError, ResourceLimitError

# Largest sieve we are willing to allocate (bytearray of this length).
MAX_SIEVE_LIMIT = 200_000_000

Rational = Fraction


@dataclass(frozen=True)
class FactoredInteger:
    """A nonnegative integer together with its prime factorization.

    factors is a tuple of (prime, exponent) with primes strictly increasing.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 0
        for p, e in self.factors:
            if p <= last or e < 1:
                raise DomainError(f"malformed factorization of {self.value}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise DomainError(f"factorization does not multiply to {self.value}")

    @classmethod
    def of(cls, n: int) -> "FactoredInteger":
        return cls(n, tuple(factorize(n)))


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending (Eratosthenes)."""
    if limit < 2:
        raise DomainError("sieve limit must be >= 2")
    if limit > MAX_SIEVE_LIMIT:
        raise ResourceLimitError(f"sieve limit {limit} exceeds budget {MAX_SIEVE_LIMIT}")
    flags = bytearray(b"\x01") * (limit + 1)
    flags[:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i, v in enumerate(flags) if v]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division; fine at desk scale."""
    if n < 1:
        raise DomainError("factorize expects n >= 1")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def von_mangoldt(m: int) -> float:
    """Lambda(m): ln p when m is a positive prime power, else 0."""
    if m < 1:
        raise DomainError("von_mangoldt expects m >= 1")
    if m == 1:
        return 0.0
    fac = factorize(m)
    if len(fac) == 1:
        return math.log(fac[0][0])
    return 0.0


@lru_cache(maxsize=None)
def psi_index(N: int) -> int:
    """psi(N) = N * prod_{p|N} (1 + 1/p), the index of Gamma_0(N)."""
    if N < 1:
        raise DomainError("psi_index expects N >= 1")
    val = N
    for p in prime_divisors(N):
        val = val // p * (p + 1)
    return val


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError("euler_phi expects n >= 1")
    val = n
    for p in prime_divisors(n):
        val = val // p * (p - 1)
    return val


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise DomainError("divisors expects n >= 1")
    out = [1]
    for p, e in factorize(n):
        out = [d * p**j for d in out for j in range(e + 1)]
    return sorted(out)


def divisor_count(n: int) -> int:
    cnt = 1
    for _, e in factorize(n):
        cnt *= e + 1
    return cnt


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def gegenbauer_coeff(t: int, n: int, k: int) -> int:
    """P_{k-2}(t, n) = (rho^{k-1} - rhobar^{k-1}) / (rho - rhobar).

    rho, rhobar are the complex roots of x^2 - t x + n; requires t^2 < 4n.
    Integer three-term recurrence P_0 = 1, P_1 = t, P_j = t P_{j-1} - n P_{j-2}.
    """
    if k < 3:
        raise DomainError("weight must be >= 3")
    if t * t >= 4 * n:
        raise DomainError(f"gegenbauer_coeff needs t^2 < 4n, got t={t}, n={n}")
    prev, cur = 1, t  # P_0, P_1
    for _ in range(k - 3):
        prev, cur = cur, t * cur - n * prev
    return cur


def crt_merge(d: int, c: int, e: int, m: int) -> tuple[int, int] | None:
    """Solve y = d (mod c), y = e (mod m).

    Returns (y, lcm(c, m)) with 0 <= y < lcm, or None when the
    congruences are incompatible (d != e modulo gcd(c, m)).
    """
    if c < 1 or m < 1:
        raise DomainError("crt_merge moduli must be positive")
    g = gcd(c, m)
    if (d - e) % g != 0:
        return None
    lcm = c // g * m
    # y = d + c * t with c*t = e - d (mod m)
    t = ((e - d) // g * pow(c // g, -1, m // g)) % (m // g)
    return (d + c * t) % lcm, lcm
