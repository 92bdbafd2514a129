"""Exact Dirichlet characters mod N stored as root-of-unity exponent tables.

A character of order r maps each residue x coprime to N to an exponent
e(x) in Z/r, meaning chi(x) = zeta_r^{e(x)}; non-coprime residues are the
distinguished zero. Tables are full-size (N is desk scale), which keeps
evaluation O(1) and conductor/induction logic transparent.
"""

from __future__ import annotations

import hashlib
from math import gcd

from .arith import divisors, factorize
from .cyclotomic import CyclotomicRational
from .errors import DataError, DomainError


def kronecker_symbol(a: int, n: int) -> int:
    """The Kronecker symbol (a|n), defined for all integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    # factor out twos of n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol on odd n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def is_fundamental_discriminant(D: int) -> bool:
    if D == 0:
        return False
    if D % 4 == 1 or D % 4 == -3:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3, -2, -1) and _squarefree(m)
    return False


def _squarefree(n: int) -> bool:
    n = abs(n)
    if n == 1:
        return True
    return all(e == 1 for _, e in factorize(n))


class DirichletCharacter:
    """Exact character mod N with values as powers of a primitive r-th root."""

    def __init__(self, modulus: int, order: int, exponents: dict[int, int]):
        if modulus < 1:
            raise DomainError("modulus must be >= 1")
        self.modulus = modulus
        self.order = order
        self.exponents = dict(exponents)
        self._validate()
        self._conductor: int | None = None

    def _validate(self):
        N, r = self.modulus, self.order
        coprime = [x for x in range(1, N + 1) if gcd(x, N) == 1]
        if N == 1:
            coprime = [1]
        if sorted(self.exponents) != sorted(x % N for x in coprime) and not (
            N == 1 and sorted(self.exponents) == [0]
        ):
            raise DataError("exponent table must cover exactly the coprime residues")
        if self.exponents.get(1 % N, 0) % r != 0:
            raise DataError("chi(1) must be 1")
        residues = sorted(self.exponents)
        if len(residues) <= 300:
            pairs = [(x, y) for x in residues for y in residues]
        else:  # full quadratic check is wasteful at large N; sample instead
            import random

            rng = random.Random(0xD1CC)
            pairs = [(rng.choice(residues), rng.choice(residues)) for _ in range(5000)]
        for x, y in pairs:
            exy = self.exponents[(x * y) % N if N > 1 else 0]
            if (exy - self.exponents[x] - self.exponents[y]) % r != 0:
                raise DataError("character table is not multiplicative")
        from math import gcd as _g

        g = 0
        for e in self.exponents.values():
            g = _g(g, e % r)
        g = _g(g, r)
        if g != 1 and r > 1:
            raise DataError(f"declared order {r} is not exact (values generate index {g})")

    # --- evaluation ---------------------------------------------------
    def exponent(self, x: int) -> int | None:
        """e(x) with chi(x) = zeta_r^{e(x)}, or None when chi(x) = 0."""
        N = self.modulus
        if N == 1:
            return 0
        x %= N
        return self.exponents.get(x)

    def value(self, x: int) -> CyclotomicRational:
        e = self.exponent(x)
        if e is None:
            return CyclotomicRational.zero(self.order)
        return CyclotomicRational.root_of_unity(self.order, e)

    def __call__(self, x: int) -> CyclotomicRational:
        return self.value(x)

    def is_trivial(self) -> bool:
        return self.order == 1

    # --- conductor / induction ---------------------------------------
    def conductor(self) -> int:
        """Smallest f | N such that chi is induced by a character mod f."""
        if self._conductor is not None:
            return self._conductor
        N = self.modulus
        for f in divisors(N):
            # chi factors through f iff chi(x) = 1 whenever x = 1 (mod f)
            if all(
                self.exponents[x] % self.order == 0
                for x in self.exponents
                if N == 1 or (x - 1) % f == 0
            ):
                self._conductor = f
                return f
        raise DomainError("unreachable: N always works")  # pragma: no cover

    def primitive_exponent(self, x: int) -> int | None:
        """Exponent of the primitive character mod conductor(chi) at x."""
        f = self.conductor()
        if f == 1:
            return 0
        N = self.modulus
        x %= f
        if gcd(x, f) != 1:
            return None
        # lift x mod f to a residue coprime to N (possible since f | N)
        y = x
        while gcd(y, N) != 1:
            y += f
        return self.exponents[y % N]

    def induce(self, m: int) -> "DirichletCharacter":
        """The character mod m induced by the primitive character under chi."""
        f = self.conductor()
        if m % f != 0:
            raise DomainError(f"conductor {f} does not divide target modulus {m}")
        if m == 1:
            return DirichletCharacter(1, 1, {0: 0})
        exps: dict[int, int] = {}
        for x in range(1, m + 1):
            if gcd(x, m) == 1:
                e = self.primitive_exponent(x)
                assert e is not None
                exps[x % m] = e % self.order
        r = _exact_order(exps, self.order)
        if r != self.order:
            scale = self.order // r  # divides every exponent by construction
            exps = {x: e // scale for x, e in exps.items()}
        return DirichletCharacter(m, r, exps)

    def parity(self) -> int:
        """chi(-1), either +1 or -1."""
        e = self.exponent(self.modulus - 1 if self.modulus > 1 else 1)
        assert e is not None
        if e % self.order == 0:
            return 1
        if 2 * e % self.order == 0:
            return -1
        raise DomainError("chi(-1) is neither +1 nor -1; table corrupt")

    def check_weight_compat(self, k: int) -> bool:
        return self.parity() == (-1) ** k

    # --- sums and hashing ---------------------------------------------
    def char_sum(self, xs) -> CyclotomicRational:
        total = CyclotomicRational.zero(self.order)
        for x in xs:
            total = total + self.value(x)
        return total

    def stable_hash(self) -> str:
        h = hashlib.sha256()
        h.update(f"DIRCHAR {self.modulus} {self.order}".encode())
        for x in sorted(self.exponents):
            h.update(f" {x}:{self.exponents[x]}".encode())
        return h.hexdigest()[:16]

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.order == other.order
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash(self.stable_hash())

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, order {self.order})"


def _exact_order(exps: dict[int, int], r: int) -> int:
    """Exact order of a character given exponents in Z/r."""
    g = r
    for e in exps.values():
        g = gcd(g, e)
    return r // g if g else 1


def trivial_character(N: int) -> DirichletCharacter:
    if N < 1:
        raise DomainError("modulus must be >= 1")
    if N == 1:
        return DirichletCharacter(1, 1, {0: 0})
    exps = {x: 0 for x in range(1, N + 1) if gcd(x, N) == 1}
    return DirichletCharacter(N, 1, exps)


def quadratic_character(D: int, N: int) -> DirichletCharacter:
    """Kronecker-symbol character x -> (D|x) of modulus N, |D| dividing N."""
    if not is_fundamental_discriminant(D):
        raise DomainError(f"{D} is not a fundamental discriminant")
    if N % abs(D) != 0:
        raise DomainError(f"|D| = {abs(D)} must divide the modulus {N}")
    if N == 1:
        return trivial_character(1)
    exps: dict[int, int] = {}
    vals = set()
    for x in range(1, N + 1):
        if gcd(x, N) == 1:
            v = kronecker_symbol(D, x)
            if v == 0:
                raise DomainError("Kronecker symbol vanished on a coprime residue")
            vals.add(v)
            exps[x % N] = 0 if v == 1 else 1
    if vals == {1}:
        return DirichletCharacter(N, 1, {x: 0 for x in exps})
    return DirichletCharacter(N, 2, exps)


# --- character file format -------------------------------------------
# line 1: "DIRCHAR v1 N r"; then one "x e" line per coprime x in [1, N).


def save_character(chi: DirichletCharacter, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"DIRCHAR v1 {chi.modulus} {chi.order}\n")
        for x in sorted(chi.exponents):
            fh.write(f"{x} {chi.exponents[x]}\n")


def load_character(path: str) -> DirichletCharacter:
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise DataError(f"cannot read character file: {exc}") from exc
    if not lines:
        raise DataError("empty character file")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "DIRCHAR" or head[1] != "v1":
        raise DataError(f"bad character header: {lines[0]!r}")
    try:
        N, r = int(head[2]), int(head[3])
    except ValueError as exc:
        raise DataError("non-integer modulus/order in header") from exc
    exps: dict[int, int] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise DataError(f"bad character record: {ln!r}")
        x, e = int(parts[0]), int(parts[1])
        if not (0 <= e < r):
            raise DataError(f"exponent out of range in record: {ln!r}")
        if x in exps:
            raise DataError(f"duplicate residue {x}")
        exps[x] = e
    if N == 1 and not exps:
        exps = {0: 0}
    try:
        return DirichletCharacter(N, r, exps)
    except DataError:
        raise
    except DomainError as exc:
        raise DataError(str(exc)) from exc
