import math

import pytest
from scipy.integrate import quad

from heckelib.errors import DomainError
from heckelib.series import (
    archimedean_c1,
    digamma,
    euler_gamma,
    f_n_profile,
    hurwitz_tail,
    phi_n,
)

EULER_GAMMA = 0.5772156649015328606


def test_digamma_known_values():
    assert digamma(1.0).value == pytest.approx(-EULER_GAMMA, abs=1e-13)
    assert digamma(2.0).value == pytest.approx(1.0 - EULER_GAMMA, abs=1e-13)
    assert digamma(0.5).value == pytest.approx(-EULER_GAMMA - 2 * math.log(2), abs=1e-13)
    with pytest.raises(DomainError):
        digamma(0.0)


def test_euler_gamma():
    assert euler_gamma().value == pytest.approx(EULER_GAMMA, abs=1e-13)


def test_archimedean_c1_closed_forms():
    # telescoping gives exactly 3/2 at k = 3
    assert archimedean_c1(3).value == pytest.approx(1.5, abs=1e-12)
    # at even k the digamma evaluates to odd-harmonic partial sums
    want = 2.0 * sum(1.0 / (2 * j + 1) for j in range(7)) - 2.0 * math.log(2)
    assert archimedean_c1(12).value == pytest.approx(want, abs=1e-10)


def test_archimedean_c1_dual_path_range():
    # the function raises internally if its two routes disagree > 1e-10
    for k in range(3, 41):
        v = archimedean_c1(k)
        assert v.error_bound <= 1e-10
        assert v.value > 0


def test_hurwitz_tail_closed_form():
    # k = 3: sum (l + 1)^{-2} = pi^2/6 - 1
    got = hurwitz_tail(2, 3)
    assert got.value == pytest.approx(math.pi**2 / 6 - 1, abs=1e-12)
    assert got.error_bound < 1e-12


def test_hurwitz_tail_monotone_in_m():
    vals = [hurwitz_tail(m, 12).value for m in range(2, 8)]
    assert all(a > b > 0 for a, b in zip(vals, vals[1:]))


def test_profile_edge_values():
    assert f_n_profile(3, 1.0) == 0.0
    assert f_n_profile(3, 0.0) == 1.5
    assert f_n_profile(1, -2.0) == pytest.approx(math.exp(-1.0))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("s", [0.7, 2.0, 1.0 + 1.0j])
def test_profile_transform_matches_phi(n, s):
    # integral over the support of f_n of f_n(x) e^{(s - 1/2) x} dx = phi_n(s)
    def integrand(x, part):
        v = f_n_profile(n, x) * complex(math.e) ** ((s - 0.5) * x)
        return v.real if part == "re" else v.imag

    re, _ = quad(lambda x: integrand(x, "re"), -60.0, 0.0, limit=200)
    im, _ = quad(lambda x: integrand(x, "im"), -60.0, 0.0, limit=200)
    want = phi_n(n, s)
    assert complex(re, im) == pytest.approx(want, abs=1e-6)


def test_phi_n_guard():
    with pytest.raises(DomainError):
        phi_n(2, 0)
