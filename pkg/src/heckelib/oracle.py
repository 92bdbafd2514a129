"""Independent ground truth for level 1 and Gamma_0(N) dimensions.

Exact q-expansion arithmetic on integer coefficient lists gives Hecke
traces on S_k(SL_2(Z)) by linear algebra, and a classical index/elliptic
point/cusp count gives dim S_k(Gamma_0(N)) for even k >= 4.  Used only by
tests and the `hecke oracle` subcommand; nothing in the production trace
path depends on this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arith import divisors, euler_phi, factorize, psi_index
from .errors import DomainError, InternalConsistencyError


@dataclass(frozen=True)
class QExpansion:
    """Integer q-series a_0 + a_1 q + ... + a_M q^M of a given weight."""

    weight: int
    coeffs: tuple[int, ...]

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "QExpansion") -> "QExpansion":
        m = min(self.precision, other.precision)
        return QExpansion(
            self.weight, tuple(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1]))
        )

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        m = min(self.precision, other.precision)
        return QExpansion(
            self.weight, tuple(a - b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1]))
        )

    def __mul__(self, other: "QExpansion") -> "QExpansion":
        m = min(self.precision, other.precision)
        out = [0] * (m + 1)
        for i, a in enumerate(self.coeffs[: m + 1]):
            if a:
                for j in range(0, m - i + 1):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return QExpansion(self.weight + other.weight, tuple(out))

    def scale_exact_div(self, d: int) -> "QExpansion":
        if any(c % d for c in self.coeffs):
            raise InternalConsistencyError(f"q-expansion not divisible by {d}")
        return QExpansion(self.weight, tuple(c // d for c in self.coeffs))


def _sigma(n: int, power: int) -> int:
    return sum(d**power for d in divisors(n))


def eisenstein_q(weight: int, M: int) -> QExpansion:
    """E4 or E6 normalized to constant term 1, to precision M."""
    if M < 1:
        raise DomainError("precision must be >= 1")
    if weight == 4:
        return QExpansion(4, tuple([1] + [240 * _sigma(n, 3) for n in range(1, M + 1)]))
    if weight == 6:
        return QExpansion(6, tuple([1] + [-504 * _sigma(n, 5) for n in range(1, M + 1)]))
    raise DomainError("only weights 4 and 6 are Eisenstein generators here")


def delta_q(M: int) -> QExpansion:
    """The discriminant cusp form (E4^3 - E6^2)/1728, exact."""
    e4 = eisenstein_q(4, M)
    e6 = eisenstein_q(6, M)
    num = e4 * e4 * e4 - e6 * e6
    return num.scale_exact_div(1728)


def delta_product_q(M: int) -> QExpansion:
    """Cross-check route: q * prod_{n>=1} (1 - q^n)^24 via Euler's pentagonal series."""
    # eta-quotient core prod (1 - q^n) as a sparse pentagonal series
    core = [0] * (M + 1)
    core[0] = 1
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        g2 = j * (3 * j + 1) // 2
        if g1 > M and g2 > M:
            break
        s = -1 if j % 2 else 1
        if g1 <= M:
            core[g1] += s
        if g2 <= M:
            core[g2] += s
        j += 1
    f = QExpansion(0, tuple(core))
    f2 = f * f
    f4 = f2 * f2
    f8 = f4 * f4
    f16 = f8 * f8
    f24 = f16 * f8
    shifted = (0,) + f24.coeffs[:M]
    return QExpansion(12, shifted)


def delta_coefficients(M: int) -> list[int]:
    """tau(1), ..., tau(M) in bulk, exact.

    Raises the pentagonal-number series to the 24th power by repeated
    squaring with numpy convolutions, working modulo four pairwise
    coprime 24-bit moduli and reconstructing the integer coefficients by
    the Chinese remainder theorem (|tau(n)| <= d(n) n^{11/2} fits well
    inside the product of moduli at desk scale).
    """
    import numpy as np

    if M < 1:
        raise DomainError("precision must be >= 1")
    if M > 200_000:
        raise DomainError("bulk tau precision capped at 200000")
    core = np.zeros(M, dtype=np.int64)
    core[0] = 1
    j = 1
    while j * (3 * j - 1) // 2 < M:
        s = -1 if j % 2 else 1
        core[j * (3 * j - 1) // 2] += s
        g2 = j * (3 * j + 1) // 2
        if g2 < M:
            core[g2] += s
        j += 1
    moduli = (1 << 24, (1 << 24) - 1, (1 << 24) - 3, (1 << 24) - 5)
    residues = []
    for m in moduli:
        f = core % m
        for _ in range(3):  # f -> f^2 -> f^4 -> f^8
            f = np.convolve(f, f)[:M] % m
        f16 = np.convolve(f, f)[:M] % m
        residues.append(np.convolve(f16, f)[:M] % m)
    # CRT lift to the symmetric range
    P = 1
    for m in moduli:
        P *= m
    basis = []
    for m in moduli:
        q = P // m
        basis.append(q * pow(q, -1, m))
    half = P // 2
    out = []
    for i in range(M):
        v = sum(int(r[i]) * b for r, b in zip(residues, basis)) % P
        out.append(v - P if v > half else v)
    return out  # out[i] = tau(i + 1) since Delta = q * (eta core)^24


def _cusp_monomials(k: int, M: int) -> list[QExpansion]:
    if k % 2 or k < 4:
        return []
    delta = delta_q(M)
    e4 = eisenstein_q(4, M)
    e6 = eisenstein_q(6, M)
    out = []
    for a in range(1, k // 12 + 1):
        rem = k - 12 * a
        for c in range(0, rem // 6 + 1):
            if (rem - 6 * c) % 4:
                continue
            b = (rem - 6 * c) // 4
            g = delta
            for _ in range(a - 1):
                g = g * delta
            for _ in range(b):
                g = g * e4
            for _ in range(c):
                g = g * e6
            out.append(g)
    return out


def cusp_dimension_level1(k: int) -> int:
    """dim S_k(SL_2(Z)) from the monomial count (echelon rank equals it)."""
    if k % 2 or k < 4:
        return 0
    # standard closed count: floor(k/12) minus 1 when k = 2 mod 12
    d = k // 12
    if k % 12 == 2:
        d -= 1
    return d


def basis_sk1(k: int, M: int) -> list[QExpansion]:
    """Reduced echelon basis of S_k(SL_2(Z)): b_i = q^i + O(q^{dim+1})."""
    if k % 2 or k < 4:
        raise DomainError("level-1 basis needs even k >= 4")
    mons = _cusp_monomials(k, M)
    dim = cusp_dimension_level1(k)
    if not mons:
        return []
    rows = [[Fraction(c) for c in m.coeffs] for m in mons]
    # Gauss-Jordan on columns 1..M (a_0 = 0 for all cusp monomials)
    pivots = []
    r = 0
    for col in range(1, M + 1):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    if r != dim or pivots != list(range(1, dim + 1)):
        raise InternalConsistencyError(
            f"level-1 echelon basis defect at k={k}: rank {r}, pivots {pivots}"
        )
    basis = []
    for i in range(dim):
        if any(x.denominator != 1 for x in rows[i]):
            raise InternalConsistencyError("echelon basis is not integral")
        basis.append(QExpansion(k, tuple(int(x) for x in rows[i])))
    return basis


def hecke_action(f: QExpansion, n: int, k: int) -> QExpansion:
    """T_n acting on a level-1 weight-k form, exact on coefficients.

    a_m(T_n f) = sum_{d | gcd(m, n)} d^{k-1} a_{m n / d^2}.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    M_out = f.precision // n
    if M_out < 1:
        raise DomainError(f"insufficient precision {f.precision} for T_{n}")
    out = [0] * (M_out + 1)
    # a_0(T_n f) = sigma_{k-1}(n) a_0; zero for cusp forms
    out[0] = sum(d ** (k - 1) for d in divisors(n)) * f.coeffs[0]
    for m in range(1, M_out + 1):
        acc = 0
        for d in divisors(n):
            if m % d == 0:
                acc += d ** (k - 1) * f.coeffs[m * n // (d * d)]
        out[m] = acc
    return QExpansion(k, tuple(out))


def trace_oracle(n: int, k: int, M: int | None = None) -> int:
    """Trace of T_n on S_k(SL_2(Z)) via the reduced echelon basis."""
    if k % 2 or k < 4:
        return 0
    dim = cusp_dimension_level1(k)
    if dim == 0:
        return 0
    if M is None:
        M = n * dim + 1
    basis = basis_sk1(k, max(M, n * dim + 1))
    tr = 0
    for i, b in enumerate(basis, start=1):
        tb = hecke_action(b, n, k)
        tr += tb.coeffs[i]
    return tr


def gamma0_dimension_oracle(N: int, k: int) -> int:
    """dim S_k(Gamma_0(N)) for even k >= 4, trivial character.

    Classical formula from the index psi(N), the elliptic point counts,
    the cusp count, and the genus of X_0(N).
    """
    if k % 2:
        raise DomainError("the Gamma_0 dimension oracle needs even k")
    if k < 4:
        raise DomainError("needs k >= 4")
    if N < 1:
        raise DomainError("level must be >= 1")
    psi = psi_index(N)
    fac = factorize(N) if N > 1 else []
    if N % 4 == 0:
        eps2 = 0
    else:
        eps2 = 1
        for p, _ in fac:
            if p == 2:
                continue
            eps2 *= 2 if p % 4 == 1 else 0
    if N % 9 == 0:
        eps3 = 0
    else:
        eps3 = 1
        for p, _ in fac:
            if p == 3:
                continue
            eps3 *= 2 if p % 3 == 1 else 0
    from math import gcd

    eps_inf = sum(euler_phi(gcd(d, N // d)) for d in divisors(N))
    genus = Fraction(1) + Fraction(psi, 12) - Fraction(eps2, 4) - Fraction(eps3, 3) - Fraction(
        eps_inf, 2
    )
    dim = (
        (k - 1) * (genus - 1)
        + Fraction(k // 4 * eps2)
        + Fraction(k // 3 * eps3)
        + (Fraction(k, 2) - 1) * eps_inf
    )
    if dim.denominator != 1 or dim < 0:
        raise InternalConsistencyError(f"dimension formula returned {dim} at N={N}, k={k}")
    return int(dim)
