"""Li-type coefficient assembly and the Euler-factor zero-sum oracle.

tau values are cutoff-truncated sums: the prime sums involved are only
conditionally convergent, so every report carries its cutoff and an
oscillation band measured over the top decade of cutoffs rather than a
claimed limit.  Summation order is fixed (ascending prime powers, fixed
block reduction) so serial and threaded runs are bit-identical.
"""

from __future__ import annotations

import cmath
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .arith import sieve_primes
from .dirichlet import DirichletCharacter, trivial_character
from .errors import DataError, DomainError
from .newforms import linear_factor_log_sum, level_log_term, nu_table
from .series import archimedean_c1, euler_gamma, hurwitz_tail
from .trace import HeckeSpace, b_coefficient

_BLOCK = 4096  # fixed reduction block size, independent of thread count


@dataclass(frozen=True)
class LiReport:
    n: int
    tau: float
    cutoff: int
    convention: str
    level_term: float
    archimedean_term: float
    prime_sum: float
    binomial_tail: float
    oscillation_band: float

    def breakdown_residual(self) -> float:
        return self.tau - (
            self.level_term + self.archimedean_term - self.prime_sum + self.binomial_tail
        )


@dataclass
class EigenData:
    """Hecke eigenvalues of one newform, keyed by prime."""

    k: int
    N: int
    eigenvalues: dict[int, complex]
    chi: DirichletCharacter | None = None

    def __post_init__(self):
        if self.chi is None:
            self.chi = trivial_character(self.N)
        self.check_bounds()

    def check_bounds(self) -> None:
        for p, lam in self.eigenvalues.items():
            bound = 2.0 * p ** ((self.k - 1) / 2.0)
            if self.N % p != 0:
                if abs(lam) > bound * (1.0 + 1e-9):
                    warnings.warn(
                        f"eigenvalue at p={p} violates the Ramanujan-Deligne bound"
                    )
            else:
                allowed = (0.0, p ** ((self.k - 2) / 2.0), p ** ((self.k - 1) / 2.0))
                if min(abs(abs(lam) - a) for a in allowed) > 1e-6 * (1.0 + abs(lam)):
                    warnings.warn(
                        f"bad-prime eigenvalue at p={p} has unexpected modulus {abs(lam)}"
                    )

    def lam(self, p: int) -> complex:
        try:
            return self.eigenvalues[p]
        except KeyError:
            raise DataError(f"no eigenvalue for prime {p}") from None


def b_f_prime_power(eigen: EigenData, p: int, m: int) -> complex:
    """b_f(p^m): lambda(p)^m at bad primes, alpha^m + beta^m at good ones."""
    if m < 0:
        raise DomainError("exponent must be >= 0")
    lam = eigen.lam(p)
    if eigen.N % p == 0:
        return lam**m
    if m == 0:
        return 2.0 + 0.0j
    chi_p = eigen.chi.value(p).embed()
    q = chi_p * p ** (eigen.k - 1)
    prev, cur = 2.0 + 0.0j, lam
    for _ in range(m - 1):
        prev, cur = cur, lam * cur - q * prev
    return cur


# ---------------------------------------------------------------------
# shared four-term assembly


def _prime_powers(X: int, skip_level: int | None = None) -> list[tuple[int, int, int]]:
    """Ascending prime powers (l, p, m) with l <= X; optionally only p coprime to skip_level."""
    if X < 2:
        raise DomainError("cutoff must be >= 2")
    out = []
    for p in sieve_primes(X):
        if skip_level is not None and skip_level % p == 0:
            continue
        l, m = p, 1
        while l <= X:
            out.append((l, p, m))
            l *= p
            m += 1
    out.sort()
    return out


def _prime_block_sums(
    powers: list[tuple[int, int, int]],
    b_at,
    k: int,
    n: int,
    threads: int = 1,
) -> list[list[float]]:
    """Per-block partial sums of Lambda(l)/l^{(k+1)/2} b(l) (ln l)^{j-1}.

    Blocks have fixed extent; each is summed serially in index order, so
    the final ordered reduction is independent of the thread count.
    """
    blocks = [powers[i : i + _BLOCK] for i in range(0, len(powers), _BLOCK)]
    half = (k + 1) / 2.0

    def one_block(chunk):
        sums = [0.0] * n
        comps = [0.0] * n
        for l, p, m in chunk:
            b = b_at(p, m)
            u = math.log(p) * (b / l**half)
            lnl = math.log(l)
            w = u
            for j in range(n):
                # Kahan update keeps the serial order reproducible bit for bit
                y = w - comps[j]
                t = sums[j] + y
                comps[j] = (t - sums[j]) - y
                sums[j] = t
                w *= lnl
        return sums

    if threads <= 1:
        return [one_block(c) for c in blocks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one_block, blocks))


def _binom_weights(n: int) -> list[float]:
    """C(n,j) (-1)^{j-1} / (j-1)! for j = 1..n."""
    return [math.comb(n, j) * (-1) ** (j - 1) / math.factorial(j - 1) for j in range(1, n + 1)]


def _assemble(
    n: int,
    k: int,
    g: int,
    level_log: float,
    extra_level: float,
    powers,
    b_at,
    X: int,
    convention: str,
    threads: int,
) -> LiReport:
    gamma = euler_gamma().value
    c1 = archimedean_c1(k).value
    level = 0.5 * n * level_log
    if convention == "hadamard-corrected":
        level += 0.5 * n * extra_level
    elif convention != "paper":
        raise DomainError(f"unknown convention {convention!r}")
    arch = -n * g * (math.log(2 * math.pi) + gamma + 2.0 / (k + 1)) + n * g * c1
    tail = math.fsum(
        math.comb(n, j) * (-1) ** j * hurwitz_tail(j, k).value for j in range(2, n + 1)
    )
    weights = _binom_weights(n)

    block_sums = _prime_block_sums(powers, b_at, k, n, threads)

    def prime_sum_at(cut: int) -> float:
        s_j = _combine_prime_sum_exactcut(block_sums, powers, b_at, k, n, cut)
        return math.fsum(w * s for w, s in zip(weights, s_j))

    p_full = prime_sum_at(X)
    samples = [prime_sum_at(max(2, X // 10)), prime_sum_at(max(2, X // 5)),
               prime_sum_at(max(2, X // 2)), p_full]
    band = max(samples) - min(samples)
    tau = level + arch - p_full + tail
    return LiReport(
        n=n,
        tau=tau,
        cutoff=X,
        convention=convention,
        level_term=level,
        archimedean_term=arch,
        prime_sum=p_full,
        binomial_tail=tail,
        oscillation_band=band,
    )


def _combine_prime_sum_exactcut(block_sums, powers, b_at, k, n, cutoff):
    """Ordered reduction of whole blocks plus a serial boundary block."""
    half = (k + 1) / 2.0
    sums = [0.0] * n
    comps = [0.0] * n

    def fold(vals):
        for j in range(n):
            y = vals[j] - comps[j]
            t = sums[j] + y
            comps[j] = (t - sums[j]) - y
            sums[j] = t

    for bi, chunk_sums in enumerate(block_sums):
        lo = bi * _BLOCK
        hi = min(lo + _BLOCK, len(powers))
        if powers[lo][0] > cutoff:
            break
        if powers[hi - 1][0] <= cutoff:
            fold(chunk_sums)
            continue
        partial = [0.0] * n
        pcomp = [0.0] * n
        for l, p, m in powers[lo:hi]:
            if l > cutoff:
                break
            b = b_at(p, m)
            u = math.log(p) * (b / l**half)
            lnl = math.log(l)
            w = u
            for j in range(n):
                y = w - pcomp[j]
                t = partial[j] + y
                pcomp[j] = (t - partial[j]) - y
                partial[j] = t
                w *= lnl
        fold(partial)
        break
    return sums


# ---------------------------------------------------------------------
# tau_N and tau_f


def tau_N(
    space: HeckeSpace,
    n: int,
    X: int = 10_000,
    convention: str = "paper",
    threads: int = 1,
) -> LiReport:
    """The aggregate Li coefficient of S_k(N, chi) at cutoff X."""
    if n < 1:
        raise DomainError("n must be >= 1")
    g = space.g
    if g == 0:
        return LiReport(n, 0.0, X, convention, 0.0, 0.0, 0.0, 0.0, 0.0)
    table = nu_table(space)
    level_log = level_log_term(table)
    extra = linear_factor_log_sum(table)
    powers = _prime_powers(X, skip_level=space.N)
    bound_slack = 1.0 + 1e-9

    def b_at(p: int, m: int) -> float:
        tv = b_coefficient(space, p, m)
        if tv.snapped_integer is not None:
            val = float(tv.snapped_integer)
        else:
            val = tv.approx.real if abs(tv.approx.imag) < 1e-9 else abs(tv.approx)
        limit = 2.0 * g * p ** (m * (space.k - 1) / 2.0) * bound_slack
        if abs(val) > limit:
            warnings.warn(f"B({p}^{m}) = {val} exceeds the Deligne envelope {limit}")
        return val

    return _assemble(n, space.k, g, level_log, extra, powers, b_at, X, convention, threads)


def tau_f(eigen: EigenData, n: int, X: int = 10_000, threads: int = 1) -> LiReport:
    """The Li coefficient of a single normalized newform at cutoff X."""
    if n < 1:
        raise DomainError("n must be >= 1")
    powers = _prime_powers(X)
    missing = {p for _, p, _ in powers} - set(eigen.eigenvalues)
    if missing:
        raise DataError(
            f"eigenvalue data stops short of the cutoff: missing primes {sorted(missing)[:5]}..."
        )

    def b_at(p: int, m: int) -> float:
        b = b_f_prime_power(eigen, p, m)
        return b.real if abs(b.imag) < 1e-12 * (1 + abs(b)) else abs(b)

    return _assemble(
        n, eigen.k, 1, math.log(eigen.N), 0.0, powers, b_at, X, "paper", threads
    )


# ---------------------------------------------------------------------
# Euler-factor zero sums (the Hadamard-constant investigation)


def euler_factor_li_sum(alpha: complex, p: int, n: int) -> complex:
    """The prime-power route: binomial-weighted power sums of alpha/p."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if abs(alpha) > math.sqrt(p):
        raise DomainError("needs |alpha| <= sqrt(p) for convergence margin")
    lnp = math.log(p)
    x = alpha / p
    total = 0.0 + 0.0j
    for j in range(1, n + 1):
        coef = math.comb(n, j) * (-1) ** (j - 1) / math.factorial(j - 1) * lnp**j
        inner = 0.0 + 0.0j
        term = x
        m = 1
        while abs(term) * max(1.0, m ** (j - 1)) > 1e-18:
            inner += m ** (j - 1) * term
            m += 1
            term *= x
            if m > 10_000:
                break
        total += coef * inner
    return total


@dataclass(frozen=True)
class ZeroSumValue:
    value: complex
    error_bound: float


def euler_factor_zero_sum(alpha: complex, p: int, n: int, K: int) -> ZeroSumValue:
    """Direct sum of 1 - (1 - 1/rho)^{-n} over zeros of 1 - alpha p^{-s}.

    alpha must lie on the unit circle; the zeros are i(t + 2 pi k)/ln p.
    Zeros are paired symmetrically (k and -k) out to |k| = K, the rho = 0
    zero at alpha = 1 contributing 1.  A 1/k^2 integral tail estimated
    from the last computed pair is added; its magnitude bounds the error.
    """
    if n < 1 or K < 1:
        raise DomainError("need n >= 1 and K >= 1")
    if abs(abs(alpha) - 1.0) > 1e-12:
        raise DomainError("zero enumeration requires |alpha| = 1")
    t = cmath.phase(alpha) % (2 * math.pi)
    lnp = math.log(p)

    # 1 - (1 - 1/rho)^{-n} = 1 - (1 + d)^n with d = 1/(rho - 1); expanding
    # the binomial in d avoids the catastrophic "1 minus almost-1"
    # cancellation that would otherwise accumulate over 10^6 zeros.
    binoms = [math.comb(n, j) for j in range(1, n + 1)]

    def term_of(rho):
        d = 1.0 / (rho - 1.0)
        acc = np.zeros_like(d) if isinstance(d, np.ndarray) else 0.0 + 0.0j
        for c in reversed(binoms):
            acc = (acc + c) * d
        return -acc

    if abs(t) < 1e-15:
        center = 1.0 + 0.0j  # rho = 0: (1 - 1/rho)^{-n} interpreted as 0
    else:
        center = complex(term_of(1j * t / lnp))

    total = center
    last_pair = 0.0 + 0.0j
    chunk = 1 << 18
    k_start = 1
    while k_start <= K:
        k_end = min(K, k_start + chunk - 1)
        ks = np.arange(k_start, k_end + 1, dtype=np.float64)
        rp = 1j * (t + 2 * math.pi * ks) / lnp
        rm = 1j * (t - 2 * math.pi * ks) / lnp
        pair = term_of(rp) + term_of(rm)
        total += complex(np.sum(pair))
        last_pair = complex(pair[-1])
        k_start = k_end + 1
    # pair(k) ~ A / k^2; integral tail sum_{k>K} A/k^2 ~ A (1/K - 1/(2K^2))
    A = last_pair * K * K
    tail = A * (1.0 / K - 1.0 / (2.0 * K * K))
    return ZeroSumValue(total + tail, abs(A) / (K * K) + abs(A) * 2.0 / (K * K))


# ---------------------------------------------------------------------
# EigenData file format: line 1 "EIGEN v1 k N"; lines "p re [im]"


def save_eigen_data(eigen: EigenData, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"EIGEN v1 {eigen.k} {eigen.N}\n")
        for p in sorted(eigen.eigenvalues):
            v = complex(eigen.eigenvalues[p])
            if v.imag:
                fh.write(f"{p} {v.real!r} {v.imag!r}\n")
            else:
                fh.write(f"{p} {v.real!r}\n")


def load_eigen_data(path: str, chi: DirichletCharacter | None = None) -> EigenData:
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise DataError(f"cannot read eigenvalue file: {exc}") from exc
    if not lines:
        raise DataError("empty eigenvalue file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "EIGEN" or head[1] != "v1":
        raise DataError(f"bad eigenvalue header: {lines[0]!r}")
    try:
        k, N = int(head[2]), int(head[3])
    except ValueError as exc:
        raise DataError("non-integer weight/level in header") from exc
    eig: dict[int, complex] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise DataError(f"bad eigenvalue record: {ln!r}")
        try:
            p = int(parts[0])
            re = float(parts[1])
            im = float(parts[2]) if len(parts) == 3 else 0.0
        except ValueError as exc:
            raise DataError(f"bad eigenvalue record: {ln!r}") from exc
        if p in eig:
            raise DataError(f"duplicate prime {p}")
        eig[p] = complex(re, im)
    return EigenData(k, N, eig, chi)
