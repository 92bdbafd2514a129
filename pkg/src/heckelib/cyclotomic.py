"""Exact elements of Q(zeta_r) as rational-coefficient arrays.

An element is stored as coefficients c_0..c_{r-1} with value
sum_e c_e * zeta_r^e, i.e. a representative in Q[x]/(x^r - 1).
Equality and rationality tests reduce modulo the r-th cyclotomic
polynomial, which gives a canonical form; arithmetic itself stays in
the cheap circulant representation.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .arith import divisors
from .errors import DomainError


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[Fraction, ...]:
    """Coefficients (low to high) of the r-th cyclotomic polynomial."""
    if r < 1:
        raise DomainError("order must be >= 1")
    if r == 1:
        return (Fraction(-1), Fraction(1))
    # (x^r - 1) / prod_{d | r, d < r} Phi_d, by exact long division.
    num = [Fraction(0)] * (r + 1)
    num[0] = Fraction(-1)
    num[r] = Fraction(1)
    for d in divisors(r)[:-1]:
        num = _polydiv_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _polydiv_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Exact polynomial division (remainder must vanish)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] / lead
        quot[i - dn] = c
        if c:
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num):
        raise DomainError("non-exact polynomial division")
    return quot


def _polymod(coeffs: list[Fraction], den: tuple[Fraction, ...]) -> list[Fraction]:
    """Remainder of coeffs modulo den (monic)."""
    rem = list(coeffs)
    dn = len(den) - 1
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i]
        if c:
            for j in range(dn + 1):
                rem[i - dn + j] -= c * den[j]
    return rem[:dn]


class CyclotomicRational:
    """Immutable exact element of Q(zeta_r)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise DomainError("order must be >= 1")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) != order:
            raise DomainError("need exactly `order` coefficients")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # immutability
        raise AttributeError("CyclotomicRational is immutable")

    # --- constructors -------------------------------------------------
    @classmethod
    def from_rational(cls, q, order: int = 1) -> "CyclotomicRational":
        cs = [Fraction(0)] * order
        cs[0] = Fraction(q)
        return cls(order, cs)

    @classmethod
    def root_of_unity(cls, order: int, e: int) -> "CyclotomicRational":
        cs = [Fraction(0)] * order
        cs[e % order] = Fraction(1)
        return cls(order, cs)

    @classmethod
    def zero(cls, order: int = 1) -> "CyclotomicRational":
        return cls(order, [Fraction(0)] * order)

    # --- order handling ----------------------------------------------
    def promote(self, order: int) -> "CyclotomicRational":
        """Re-express in Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise DomainError("can only promote to a multiple order")
        step = order // self.order
        cs = [Fraction(0)] * order
        for e, c in enumerate(self.coeffs):
            cs[e * step] = c
        return CyclotomicRational(order, cs)

    @staticmethod
    def _common(a: "CyclotomicRational", b: "CyclotomicRational"):
        r = lcm(a.order, b.order)
        return a.promote(r), b.promote(r)

    # --- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicRational):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicRational.from_rational(other, 1)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(self, o)
        return CyclotomicRational(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicRational(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.order == 1:  # scalar fast path
            s = o.coeffs[0]
            return CyclotomicRational(self.order, [c * s for c in self.coeffs])
        if self.order == 1:
            s = self.coeffs[0]
            return CyclotomicRational(o.order, [c * s for c in o.coeffs])
        a, b = self._common(self, o)
        r = a.order
        out = [Fraction(0)] * r
        for i, ci in enumerate(a.coeffs):
            if ci:
                for j, cj in enumerate(b.coeffs):
                    if cj:
                        out[(i + j) % r] += ci * cj
        return CyclotomicRational(r, out)

    __rmul__ = __mul__

    # --- canonical form and queries ----------------------------------
    def canonical(self) -> tuple[Fraction, ...]:
        """Coefficients reduced modulo the cyclotomic polynomial Phi_r."""
        phi = cyclotomic_polynomial(self.order)
        rem = _polymod(list(self.coeffs), phi)
        return tuple(rem)

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        q = self.as_rational()
        if q is not None:
            return hash(q)
        return hash(("cyc", self.order, self.canonical()))

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction, or None if genuinely irrational."""
        can = self.canonical()
        if any(can[1:]):
            return None
        return can[0] if can else Fraction(0)

    def embed(self) -> complex:
        """Numerical complex embedding zeta_r -> exp(2 pi i / r)."""
        z = 0j
        r = self.order
        for e, c in enumerate(self.coeffs):
            if c:
                z += float(c) * cmath.exp(2j * cmath.pi * e / r)
        return z

    def __repr__(self):
        return f"CyclotomicRational(order={self.order}, coeffs={list(self.coeffs)})"
