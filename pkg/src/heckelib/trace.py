"""Exact traces of Hecke operators on S_k(N, chi).

tr T(n) = identity term - elliptic term - divisor term, assembled in
exact arithmetic (Fractions / cyclotomic rationals) end to end.  The
level-1 trivial-character path runs on plain integers against a bulk
class-number weight table, which is what the large-cutoff prime sums of
the Li coefficients hit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .arith import divisors, gegenbauer_coeff, is_square, psi_index, crt_merge
from .classnum import bulk_weight_table, class_number
from .cyclotomic import CyclotomicRational
from .dirichlet import DirichletCharacter, trivial_character
from .errors import DomainError, InternalConsistencyError


@dataclass
class HeckeSpace:
    """The cusp form space S_k(N, chi): weight, level, nebentypus."""

    k: int
    N: int
    chi: DirichletCharacter
    conductor: int = field(init=False)
    _dimension: int | None = field(init=False, default=None, repr=False)

    def __post_init__(self):
        if self.k == 2:
            raise DomainError(
                "weight 2 is outside the supported trace-formula range (needs k > 2)"
            )
        if self.k < 3:
            raise DomainError("weight must be >= 3")
        if self.N < 1:
            raise DomainError("level must be >= 1")
        if self.chi.modulus != self.N:
            raise DomainError("character modulus must equal the level")
        if not self.chi.check_weight_compat(self.k):
            raise DomainError(
                f"chi(-1) = {self.chi.parity()} incompatible with weight {self.k}"
            )
        self.conductor = self.chi.conductor()

    @property
    def g(self) -> int:
        if self._dimension is None:
            self._dimension = dimension(self)
        return self._dimension

    def key(self) -> tuple:
        return (self.k, self.N, self.chi.stable_hash())


@dataclass(frozen=True)
class TraceValue:
    exact: CyclotomicRational
    approx: complex
    snapped_integer: int | None
    validated: bool = True  # False when gcd(n, N) > 1 (outside the primary range)


def trivial_space(k: int, N: int) -> HeckeSpace:
    return HeckeSpace(k, N, trivial_character(N))


# ---------------------------------------------------------------------
# the three terms of the trace formula


def identity_term(space: HeckeSpace, n: int) -> CyclotomicRational:
    """n^{k/2-1} chi(sqrt n) (k-1)/12 psi(N); zero unless n is a square."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if not is_square(n):
        return CyclotomicRational.zero(space.chi.order)
    s = isqrt(n)
    scalar = Fraction(s ** (space.k - 2) * (space.k - 1) * psi_index(space.N), 12)
    return space.chi.value(s) * scalar


def mu_factor(space: HeckeSpace, t: int, n: int, m: int) -> CyclotomicRational:
    """chi-weighted count of roots of x^2 - t x + n mod N, lifted mod N gcd(N, m).

    A residue x mod N contributes chi(x) when at least one of its lifts
    mod N gcd(N, m) solves the congruence there.  Counting classes mod N
    (rather than raw solutions mod N gcd(N, m)) is what keeps traces
    integral and matches the oldform decomposition at composite level;
    the psi-ratio prefactor matches the Gamma_0(N) dimension oracle.
    """
    N = space.N
    g = gcd(N, m)
    M = N * g
    pref = Fraction(psi_index(N), psi_index(N // g))
    acc = CyclotomicRational.zero(space.chi.order)
    for x0 in range(N):
        if any((x * x - t * x + n) % M == 0 for x in range(x0, M, N)):
            acc = acc + space.chi.value(x0)
    return acc * pref


def elliptic_term(space: HeckeSpace, n: int) -> CyclotomicRational:
    """The class-number double sum (without its leading minus sign)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if space.N == 1:
        return CyclotomicRational.from_rational(_elliptic_level1(space.k, n))
    acc = CyclotomicRational.zero(space.chi.order)
    tmax = isqrt(4 * n - 1)
    for t in range(-tmax, tmax + 1):
        disc = t * t - 4 * n
        P = gegenbauer_coeff(t, n, space.k)
        if P == 0:
            continue
        for m in range(1, isqrt(-disc) + 1):
            if disc % (m * m):
                continue
            D = disc // (m * m)
            if D % 4 not in (0, 1):
                continue
            entry = class_number(D)
            mu = mu_factor(space, t, n, m)
            acc = acc + mu * (Fraction(entry.h, entry.w) * P)
    return acc


_WEIGHT_TABLE: np.ndarray | None = None


def _weight12(absdisc: int) -> int:
    """12 * sum_m h/w for discriminant -absdisc, backed by the bulk table."""
    global _WEIGHT_TABLE
    if _WEIGHT_TABLE is None or absdisc >= len(_WEIGHT_TABLE):
        size = max(2 * absdisc + 16, 4096)
        _WEIGHT_TABLE = bulk_weight_table(size)
    return int(_WEIGHT_TABLE[absdisc])


def _elliptic_level1(k: int, n: int) -> Fraction:
    """Integer fast path: sum_t P_{k-2}(t,n) * weight(t^2-4n), over 12."""
    total = 0
    tmax = isqrt(4 * n - 1)
    # P_{k-2}(-t, n) = P_{k-2}(t, n) for even k, so fold t and -t together
    for t in range(0, tmax + 1):
        w = _weight12(4 * n - t * t)
        if w:
            P = gegenbauer_coeff(t, n, k)
            total += (P if t == 0 else 2 * P) * w
    return Fraction(total, 12)


def divisor_term(space: HeckeSpace, n: int) -> CyclotomicRational:
    """The divisor/cusp sum (without its leading minus sign).

    chi(y) is evaluated through the primitive character underlying chi at
    the CRT-merged residue y, which is well defined because the summation
    condition forces the conductor to divide N/(c, N/c).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    N, k, f = space.N, space.k, space.conductor
    chi = space.chi
    acc = CyclotomicRational.zero(chi.order)
    nf = N // f
    for d in divisors(n):
        nd = n // d
        weight = min(d, nd) ** (k - 1)
        inner = CyclotomicRational.zero(chi.order)
        for c in divisors(N):
            e = gcd(c, N // c)
            if gcd(nf, abs(nd - d)) % e:  # gcd(nf, 0) = nf covers d = n/d
                continue
            merged = crt_merge(d, c, nd, N // c)
            if merged is None:
                continue
            y, _ = merged
            pe = chi.primitive_exponent(y)
            if pe is None:
                continue
            phi_e = _euler_phi_small(e)
            inner = inner + CyclotomicRational.root_of_unity(chi.order, pe) * phi_e
        acc = acc + inner * weight
    return acc * Fraction(1, 2)


def _euler_phi_small(e: int) -> int:
    from .arith import euler_phi

    return euler_phi(e)


# ---------------------------------------------------------------------
# assembly, memoization, derived quantities

_memo: dict[tuple, CyclotomicRational] = {}
_persistent = None  # optional TraceCache, wired by the CLI


def set_persistent_cache(cache) -> None:
    global _persistent
    _persistent = cache


def clear_memo() -> None:
    _memo.clear()


def trace_hecke(space: HeckeSpace, n: int) -> TraceValue:
    """tr T(n) on S_k(N, chi), exact."""
    if n < 1:
        raise DomainError("n must be >= 1")
    key = space.key() + (n,)
    exact = _memo.get(key)
    if exact is None and _persistent is not None:
        exact = _persistent.get_trace(key)
        if exact is not None:
            _memo[key] = exact
    if exact is None:
        exact = identity_term(space, n) - elliptic_term(space, n) - divisor_term(space, n)
        _memo[key] = exact
        if _persistent is not None:
            _persistent.put_trace(key, exact)
    return _finish(space, n, exact)


def _finish(space: HeckeSpace, n: int, exact: CyclotomicRational) -> TraceValue:
    approx = exact.embed()
    snapped = None
    q = exact.as_rational()
    if q is not None:
        if q.denominator != 1:
            if space.chi.order <= 2:
                raise InternalConsistencyError(
                    f"trace of T({n}) on {space.key()} is non-integral: {q}"
                )
        else:
            snapped = q.numerator
    elif space.chi.order <= 2:
        raise InternalConsistencyError(
            f"trace of T({n}) with a real character failed to be rational"
        )
    return TraceValue(exact, approx, snapped, validated=gcd(n, space.N) == 1)


def dimension(space: HeckeSpace) -> int:
    """dim S_k(N, chi) = tr T(1), snapped to a nonnegative integer."""
    tv = trace_hecke(space, 1)
    if tv.snapped_integer is None or tv.snapped_integer < 0:
        raise InternalConsistencyError(
            f"dimension of {space.key()} did not snap to a nonnegative integer: {tv.exact}"
        )
    return tv.snapped_integer


def b_coefficient(space: HeckeSpace, p: int, ell: int) -> TraceValue:
    """B(p^ell) = tr T(p^ell) - chi(p) p^{k-1} tr T(p^{ell-2}); B(1) = 2g."""
    if space.N % p == 0:
        raise DomainError(f"prime {p} divides the level {space.N}")
    if ell < 0:
        raise DomainError("exponent must be >= 0")
    if ell == 0:
        exact = CyclotomicRational.from_rational(2 * space.g, space.chi.order)
        return _finish(space, 1, exact)
    hi = trace_hecke(space, p**ell).exact
    if ell == 1:  # tr T(p^{-1}) = 0 by convention
        return _finish(space, p, hi)
    lo = trace_hecke(space, p ** (ell - 2)).exact
    exact = hi - space.chi.value(p) * (p ** (space.k - 1)) * lo
    return _finish(space, p**ell, exact)
