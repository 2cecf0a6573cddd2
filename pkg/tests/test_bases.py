import math

import numpy as np
from pytest import approx
from scipy.integrate import quad
from scipy.special import genlaguerre

try:
    from scipy.special import sph_harm_y

    def spherical_harmonic(m, l, phi, theta):
        return sph_harm_y(l, m, theta, phi)
except ImportError:  # older scipy
    from scipy.special import sph_harm as spherical_harmonic

from mickepler.bases import (
    angular_profile,
    angular_z,
    parabolic_profile,
    parabolic_state,
    psi_parabolic,
    psi_spherical,
    radial_r,
    spherical_state,
)
from mickepler.coords import SphericalPoint, spherical_to_parabolic
from mickepler.qnum import SystemParams, derive_constants
from mickepler.verify import (
    angular_gram_residual,
    parabolic_norm_residual,
    radial_gram_residual,
)

HYDROGEN = SystemParams(two_s=0)


def hydrogen_radial(n, l, r):
    """Textbook hydrogen radial function via scipy Laguerre polynomials."""
    rho = 2.0 * r / n
    norm = math.sqrt((2.0 / n) ** 3 * math.factorial(n - l - 1)
                     / (2.0 * n * math.factorial(n + l)))
    return norm * np.exp(-rho / 2.0) * rho**l * genlaguerre(n - l - 1, 2 * l + 1)(rho)


class TestAngular:
    def test_isotropic_state(self):
        state = spherical_state(HYDROGEN, 2, 0, 0)
        for theta in (0.0, 0.7, math.pi / 2, 3.0):
            for phi in (0.0, 1.0, 5.5):
                assert angular_z(state, theta, phi) == approx(
                    1.0 / math.sqrt(4.0 * math.pi), rel=1e-14)

    def test_equatorial_node(self):
        state = spherical_state(HYDROGEN, 4, 2, 0)   # j = 1, m = 0
        assert angular_z(state, math.pi / 2, 0.0) == approx(0.0, abs=1e-15)

    def test_perturbed_value_vs_normalization_quadrature(self):
        # j = m_plus = 0 state of the c1 = 0.75 system: compare the coded value
        # against the bare profile normalized by direct quadrature
        params = SystemParams(two_s=0, c1=0.75)
        dc = derive_constants(params, 0)
        state = spherical_state(params, 2, 0, 0)

        def bare(theta):
            return math.cos(theta / 2.0) ** dc.m1 * math.sin(theta / 2.0) ** dc.m2

        norm_sq, err = quad(lambda t: bare(t) ** 2 * math.sin(t) * 2.0 * math.pi,
                            0.0, math.pi, epsabs=1e-13, epsrel=1e-13)
        assert err < 1e-10
        theta = math.pi / 3.0
        assert angular_profile(state, theta) == approx(
            bare(theta) / math.sqrt(norm_sq), rel=1e-10)

    def test_hydrogen_matches_spherical_harmonics(self):
        rng = np.random.default_rng(5)
        for (n, l, m) in [(2, 1, 0), (3, 2, 1), (4, 3, -2), (3, 1, -1)]:
            state = spherical_state(HYDROGEN, 2 * n, 2 * l, 2 * m)
            for _ in range(10):
                theta = math.acos(rng.uniform(-1, 1))
                phi = rng.uniform(0, 2 * math.pi)
                ours = angular_z(state, theta, phi)
                ref = spherical_harmonic(m, l, phi, theta)
                assert abs(ours) == approx(abs(ref), rel=1e-10, abs=1e-12)

    def test_orthonormality_quadrature(self):
        for params, two_m in [(HYDROGEN, 0), (SystemParams(two_s=1, c1=0.3, c2=0.7), 1),
                              (SystemParams(two_s=0, c1=0.3, c2=0.7), -2)]:
            assert angular_gram_residual(params, two_m) <= 1e-8


class TestRadial:
    def test_hydrogen_ground_state(self):
        state = spherical_state(HYDROGEN, 2, 0, 0)
        for r in (0.1, 0.5, 1.0, 3.7):
            assert radial_r(state, r) == approx(2.0 * math.exp(-r), rel=1e-14)
        assert radial_r(state, 0.0) == approx(2.0, rel=1e-14)

    def test_bound_state_decay(self):
        state = spherical_state(SystemParams(two_s=1, c1=0.2), 7, 3, 1)
        assert abs(radial_r(state, 400.0)) < 1e-30

    def test_hydrogen_2p(self):
        state = spherical_state(HYDROGEN, 4, 2, 0)
        for r in (0.2, 1.0, 4.0):
            expected = r * math.exp(-r / 2.0) / (2.0 * math.sqrt(6.0))
            assert radial_r(state, r) == approx(expected, rel=1e-13)

    def test_vanishes_at_origin_for_positive_power(self):
        state = spherical_state(SystemParams(two_s=0, c1=0.4), 4, 0, 0)
        assert radial_r(state, 0.0) == 0.0

    def test_hydrogen_matches_textbook(self):
        rng = np.random.default_rng(9)
        for (n, l) in [(1, 0), (2, 0), (2, 1), (3, 1), (4, 2), (5, 0)]:
            state = spherical_state(HYDROGEN, 2 * n, 2 * l, 0)
            for _ in range(10):
                r = rng.uniform(0.05, 4.0 * n * n)
                assert radial_r(state, r) == approx(hydrogen_radial(n, l, r),
                                                    rel=1e-10, abs=1e-12)

    def test_orthonormality_quadrature(self):
        for params, two_m, two_j in [
            (HYDROGEN, 0, 0),
            (SystemParams(two_s=1, c1=0.3, c2=0.7), 1, 3),
            (SystemParams(two_s=0, c1=1.1, c2=0.2), 2, 4),
        ]:
            n_list = [two_j + 2 * k for k in range(1, 7)]   # n = j+1 .. j+6
            assert radial_gram_residual(params, two_m, two_j, n_list) <= 1e-8


class TestFullWavefunctions:
    def test_hydrogen_ground_state_everywhere(self):
        state = spherical_state(HYDROGEN, 2, 0, 0)
        rng = np.random.default_rng(1)
        for _ in range(20):
            p = SphericalPoint(rng.uniform(0.05, 5.0),
                               math.acos(rng.uniform(-1, 1)),
                               rng.uniform(0, 2 * math.pi))
            assert psi_spherical(state, p) == approx(
                math.exp(-p.r) / math.sqrt(math.pi), rel=1e-13)

    def test_parabolic_equals_spherical_for_nondegenerate_level(self):
        # d = 1: the single parabolic state IS the single spherical state
        sph = spherical_state(HYDROGEN, 2, 0, 0)
        par = parabolic_state(HYDROGEN, 0, 0, 0)
        rng = np.random.default_rng(2)
        for _ in range(50):
            p = SphericalPoint(rng.uniform(0.05, 6.0),
                               math.acos(rng.uniform(-1, 1)),
                               rng.uniform(0, 2 * math.pi))
            q = spherical_to_parabolic(p)
            assert psi_parabolic(par, q) == approx(psi_spherical(sph, p), rel=1e-12)

    def test_parabolic_normalization_quadrature(self):
        # includes the perturbed half-integer case
        for params, two_n, two_m in [
            (HYDROGEN, 6, 0),
            (SystemParams(two_s=1, c1=0.3), 5, 1),
            (SystemParams(two_s=2, c1=0.3, c2=0.7), 8, -2),
        ]:
            assert parabolic_norm_residual(params, two_n, two_m) <= 1e-8

    def test_profile_is_separable_product(self):
        params = SystemParams(two_s=1, c1=0.4, c2=0.2)
        state = parabolic_state(params, 1, 2, 1)
        xi = np.array([0.3, 1.7])
        eta = np.array([2.2, 0.9])
        grid = parabolic_profile(state, xi[:, None], eta[None, :])
        assert grid.shape == (2, 2)
        single = parabolic_profile(state, xi[0], eta[1])
        assert grid[0, 1] == approx(single, rel=1e-14)

    def test_azimuthal_winding(self):
        # phase advances as exp(i (m - s) phi)
        params = SystemParams(two_s=1)
        state = parabolic_state(params, 0, 1, 3)         # m = 3/2, s = 1/2
        from mickepler.coords import ParabolicPoint
        base = psi_parabolic(state, ParabolicPoint(1.0, 2.0, 0.0))
        rot = psi_parabolic(state, ParabolicPoint(1.0, 2.0, 0.25))
        assert rot == approx(base * np.exp(1j * 1 * 0.25), rel=1e-13)
