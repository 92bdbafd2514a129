"""Newform-subspace dimensions nu_m and the level logarithm term.

The oldform embeddings give dim S_k(N', chi_{N'}) = sum over levels
m between the conductor and N' of nu_m * d(N'/m); inverting that
triangular relation over the divisor lattice yields the nu table, and
with it the per-unit-n coefficient of the level term of the Li
coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import divisor_count, divisors, prime_divisors
from .errors import InternalConsistencyError
from .trace import HeckeSpace, dimension


@dataclass(frozen=True)
class NewformDimensionTable:
    k: int
    N: int
    conductor: int
    entries: dict[int, int]  # level m -> nu_m, for every conductor | m | N


def nu_table(space: HeckeSpace) -> NewformDimensionTable:
    """nu_m for all m with conductor | m | N, by ascending-divisor recursion."""
    f = space.conductor
    levels = [m for m in divisors(space.N) if m % f == 0]
    dims = {}
    for m in levels:
        sub = HeckeSpace(space.k, m, space.chi.induce(m))
        dims[m] = dimension(sub)
    nus: dict[int, int] = {}
    for mp in levels:
        val = dims[mp]
        for m in levels:
            if m != mp and mp % m == 0:
                val -= nus[m] * divisor_count(mp // m)
        if val < 0:
            raise InternalConsistencyError(
                f"negative newform dimension nu_{mp} = {val} for (k={space.k}, N={space.N})"
            )
        nus[mp] = val
    return NewformDimensionTable(space.k, space.N, f, nus)


def level_log_term(table: NewformDimensionTable) -> float:
    """sum_m nu_m d(N/m) ln m: the coefficient of n/2 in the level term."""
    return math.fsum(
        nu * divisor_count(table.N // m) * math.log(m)
        for m, nu in table.entries.items()
        if nu and m > 1
    )


def total_newform_count(table: NewformDimensionTable) -> int:
    """sum_m nu_m d(N/m); must reconstruct dim S_k(N, chi)."""
    return sum(nu * divisor_count(table.N // m) for m, nu in table.entries.items())


def linear_factor_log_sum(table: NewformDimensionTable) -> float:
    """sum of ln p over the removed local Euler factor linear pieces.

    Each basis form counted at level m contributes one linear factor per
    prime p | m and two per prime p | N with p not dividing m.  Feeds the
    hadamard-corrected convention of the Li assembly.
    """
    N_primes = set(prime_divisors(table.N))
    total = 0.0
    for m, nu in table.entries.items():
        if nu == 0:
            continue
        mult = nu * divisor_count(table.N // m)
        m_primes = set(prime_divisors(m)) if m > 1 else set()
        s = sum(math.log(p) for p in m_primes)
        s += 2.0 * sum(math.log(p) for p in N_primes - m_primes)
        total += mult * s
    return total
