import math

import pytest

from heckelib.dirichlet import trivial_character
from heckelib.errors import DataError, DomainError
from heckelib.li import (
    EigenData,
    b_f_prime_power,
    euler_factor_li_sum,
    euler_factor_zero_sum,
    load_eigen_data,
    save_eigen_data,
    tau_N,
    tau_f,
)
from heckelib.oracle import delta_coefficients
from heckelib.arith import sieve_primes
from heckelib.trace import b_coefficient, trivial_space


def delta_eigen(limit: int) -> EigenData:
    tau = delta_coefficients(limit)
    return EigenData(12, 1, {p: complex(tau[p - 1]) for p in sieve_primes(limit)})


def test_b_f_matches_trace_route():
    eigen = delta_eigen(100)
    sp = trivial_space(12, 1)
    for p in (2, 3, 5, 7):
        for m in (1, 2, 3):
            got = b_f_prime_power(eigen, p, m)
            want = b_coefficient(sp, p, m).snapped_integer
            assert got == complex(want), (p, m)


def test_tau_breakdown_identity_is_exact():
    sp = trivial_space(12, 1)
    for n in (1, 3, 7):
        r = tau_N(sp, n, X=500)
        assert r.breakdown_residual() == 0.0


def test_tau_N_equals_tau_f_for_delta():
    sp = trivial_space(12, 1)
    eigen = delta_eigen(2000)
    for n in (1, 2, 5):
        a = tau_N(sp, n, X=2000)
        b = tau_f(eigen, n, X=2000)
        assert abs(a.tau - b.tau) < 1e-12, n


def test_empty_space_is_identically_zero():
    sp = trivial_space(4, 1)
    r = tau_N(sp, 3, X=1000)
    assert r.tau == 0.0 and r.prime_sum == 0.0 and r.oscillation_band == 0.0


def test_thread_count_is_invisible():
    sp = trivial_space(12, 1)
    a = tau_N(sp, 6, X=3000, threads=1)
    b = tau_N(sp, 6, X=3000, threads=8)
    assert a == b  # bit-identical dataclasses


def test_convention_shifts_level_term_only():
    sp = trivial_space(12, 2)
    a = tau_N(sp, 4, X=1000, convention="paper")
    b = tau_N(sp, 4, X=1000, convention="hadamard-corrected")
    assert b.level_term > a.level_term
    assert b.prime_sum == a.prime_sum
    assert b.archimedean_term == a.archimedean_term
    assert b.breakdown_residual() == 0.0
    with pytest.raises(DomainError):
        tau_N(sp, 4, X=1000, convention="nonsense")


def test_tau_f_missing_primes():
    eigen = delta_eigen(50)
    with pytest.raises(DataError):
        tau_f(eigen, 2, X=1000)


def test_euler_factor_li_sum_closed_form():
    # alpha = 1, n = 1: sum Lambda(2^m)/2^m = ln 2
    got = euler_factor_li_sum(1.0, 2, 1)
    assert got.real == pytest.approx(math.log(2), abs=1e-12)
    assert got.imag == 0
    with pytest.raises(DomainError):
        euler_factor_li_sum(3.0, 2, 1)


def test_euler_factor_zero_sum_closed_form():
    # (ln 2/2) coth(ln 2/2) = 1.5 ln 2 discrepancy route: value -> (3/2) ln 2
    zs = euler_factor_zero_sum(1.0, 2, 1, 200_000)
    assert abs(zs.value - 1.5 * math.log(2)) < 1e-9
    assert zs.error_bound < 1e-9
    with pytest.raises(DomainError):
        euler_factor_zero_sum(2.0, 2, 1, 10)


def test_zero_sum_discrepancy_against_li_sum():
    # the measured Hadamard-constant offset is n ln p / 2
    for alpha in (1.0, -1.0):
        for p in (2, 3):
            for n in (1, 2):
                zs = euler_factor_zero_sum(alpha, p, n, 100_000)
                direct = euler_factor_li_sum(alpha, p, n)
                gap = (zs.value - direct).real - n * math.log(p) / 2.0
                assert abs(gap) < 1e-7, (alpha, p, n)


def test_eigen_file_roundtrip(tmp_path):
    eigen = delta_eigen(60)
    path = tmp_path / "delta.eigen"
    save_eigen_data(eigen, str(path))
    back = load_eigen_data(str(path))
    assert back.k == 12 and back.N == 1
    assert back.eigenvalues == eigen.eigenvalues


def test_eigen_file_rejects_garbage(tmp_path):
    p = tmp_path / "bad.eigen"
    p.write_text("EIGEN v2 12 1\n2 -24\n")
    with pytest.raises(DataError):
        load_eigen_data(str(p))
    p.write_text("EIGEN v1 12 1\n2 -24\n2 -24\n")
    with pytest.raises(DataError):
        load_eigen_data(str(p))


def test_deligne_warning():
    with pytest.warns(UserWarning, match="Ramanujan-Deligne"):
        EigenData(12, 1, {2: complex(10**9)})
