"""Class numbers h(D) and unit counts w(D) of imaginary quadratic orders.

h(D) is realized as the number of primitive reduced binary quadratic
forms (a, b, c) of discriminant D = b^2 - 4ac < 0.  The elliptic term of
the trace formula consumes the aggregated weight

    sum_{m : D0/m^2 = 0,1 mod 4} h(D0/m^2) / w(D0/m^2)

which equals half the count of ALL reduced forms (imprimitive included)
of discriminant D0, corrected at the two discriminants with extra units;
`bulk_weight_table` precomputes those counts for a whole range at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .arith import is_square
from .errors import DomainError


def _check_disc(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise DomainError(f"need a negative discriminant = 0,1 mod 4, got {D}")


def unit_count(D: int) -> int:
    """w(D): 6 at D=-3, 4 at D=-4, else 2."""
    _check_disc(D)
    if D == -3:
        return 6
    if D == -4:
        return 4
    return 2


@dataclass(frozen=True)
class ClassNumberEntry:
    discriminant: int
    h: int
    w: int


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """All primitive reduced forms of discriminant D, scanning a outermost.

    Reduced means -a < b <= a <= c with b >= 0 when a = c.
    """
    _check_disc(D)
    out = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if gcd(gcd(a, b), c) == 1:
                out.append((a, b, c))
    return out


def reduced_forms_by_b(D: int) -> list[tuple[int, int, int]]:
    """Independent enumeration scanning b outermost (oracle for reduced_forms)."""
    _check_disc(D)
    out = []
    bmax = isqrt(-D // 3)
    for b in range(-bmax, bmax + 1):
        if (b - D) % 2:
            continue
        ac4 = b * b - D
        if ac4 % 4:
            continue
        ac = ac4 // 4
        for a in range(max(abs(b), 1), isqrt(ac) + 1):
            if b == -a:
                continue
            if ac % a:
                continue
            c = ac // a
            if c < a or (a == c and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                out.append((a, b, c))
    return sorted(out)


@lru_cache(maxsize=None)
def class_number(D: int) -> ClassNumberEntry:
    """h(D) and w(D) for the imaginary quadratic order of discriminant D."""
    return ClassNumberEntry(D, len(reduced_forms(D)), unit_count(D))


def form_class_weight(D0: int) -> Fraction:
    """sum over m with D0/m^2 = 0,1 (mod 4) of h(D0/m^2)/w(D0/m^2), exact."""
    if D0 >= 0:
        raise DomainError("needs a negative discriminant")
    total = Fraction(0)
    for m in range(1, isqrt(-D0) + 1):
        if D0 % (m * m):
            continue
        D = D0 // (m * m)
        if D % 4 in (0, 1):
            e = class_number(D)
            total += Fraction(e.h, e.w)
    return total


def bulk_weight_table(dmax: int) -> np.ndarray:
    """counts[|D0|] = 12 * form_class_weight(D0) as int64, for 0 < |D0| <= dmax.

    Counts every reduced form, primitive or not, with numpy slice updates;
    the total form count F satisfies form_class_weight = F/2 - 1/3 [|D0| = 3s^2]
    - 1/4 [|D0| = 4s^2], so twelve times the weight is the stored integer
    6F - 4[...] - 3[...].
    """
    if dmax < 3:
        raise DomainError("dmax must be >= 3")
    counts = np.zeros(dmax + 1, dtype=np.int64)
    for a in range(1, isqrt(dmax // 3) + 1):
        fa = 4 * a
        for b in range(0, a + 1):
            first = fa * a - b * b  # c = a
            if first > dmax:
                continue
            mult = 1 if (b == 0 or b == a) else 2
            counts[first : dmax + 1 : fa] += mult
            if mult == 2 and first <= dmax:
                counts[first] -= 1  # a = c admits only b >= 0
    counts *= 6
    s = 1
    while 3 * s * s <= dmax:
        counts[3 * s * s] -= 4
        s += 1
    s = 1
    while 4 * s * s <= dmax:
        counts[4 * s * s] -= 3
        s += 1
    return counts


def weight12_single(D0: int) -> int:
    """12 * form_class_weight(D0), via the primitive enumeration route."""
    w = form_class_weight(D0) * 12
    assert w.denominator == 1
    return w.numerator
