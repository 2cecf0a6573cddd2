"""Normalized spherical and parabolic bound-state wavefunctions.

Each full wavefunction is a real (r, theta) or (xi, eta) profile times
the azimuthal phase exp(i (m - s) phi); m - s is always an integer.  The
real profiles are exposed separately because every interbasis check
compares real amplitudes.

Exponential-times-power prefactors are evaluated as exp(log magnitude)
with the terminating polynomial factored out, so large gamma ratios
never meet small exponentials in linear arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numkernel import jacobi_p, kummer_terminating, ln_gamma
from .qnum import (
    DerivedConstants,
    ParabolicQN,
    SphericalQN,
    SystemParams,
    derive_constants,
    epsilon,
    n_effective,
    parabolic_qn,
    principal_two_n,
    spherical_qn,
)

__all__ = [
    "SphericalState",
    "ParabolicState",
    "spherical_state",
    "parabolic_state",
    "angular_profile",
    "angular_z",
    "radial_r",
    "psi_spherical",
    "psi_parabolic",
    "parabolic_factor",
    "parabolic_profile",
]

_LOG_4PI = math.log(4.0 * math.pi)


@dataclass(frozen=True)
class SphericalState:
    qn: SphericalQN
    dc: DerivedConstants
    two_s: int
    eps: float
    norm_angular: float       # N_jm
    norm_radial: float        # C_nj, includes the 2 eps^2 prefactor
    log_norm_radial: float


@dataclass(frozen=True)
class ParabolicState:
    qn: ParabolicQN
    dc: DerivedConstants
    two_s: int
    eps: float
    norms: tuple[float, float]  # gamma-ratio prefactors of the two 1D factors


def spherical_state(params: SystemParams, two_n: int, two_j: int, two_m: int
                    ) -> SphericalState:
    qn = spherical_qn(params, two_n, two_j, two_m)
    dc = derive_constants(params, two_m)
    eps = epsilon(n_effective(params, two_m, two_n))
    j = two_j / 2.0
    n = two_n / 2.0
    delta = dc.delta_total
    k = (two_j - dc.two_m_plus) // 2          # Jacobi degree j - m_plus
    n_r = (two_n - two_j - 2) // 2            # radial quantum number n - j - 1

    log_norm_ang = 0.5 * (
        math.log(2.0 * j + delta + 1.0)
        + ln_gamma(k + 1.0)
        + ln_gamma(j + dc.m_plus + delta + 1.0)
        - _LOG_4PI
        - ln_gamma(j - dc.m_minus + dc.delta1 + 1.0)
        - ln_gamma(j + dc.m_minus + dc.delta2 + 1.0)
    )
    log_norm_rad = (
        math.log(2.0 * eps * eps)
        - ln_gamma(2.0 * j + delta + 2.0)
        + 0.5 * (ln_gamma(n + j + delta + 1.0) - ln_gamma(n_r + 1.0))
    )
    return SphericalState(
        qn=qn,
        dc=dc,
        two_s=params.two_s,
        eps=eps,
        norm_angular=math.exp(log_norm_ang),
        norm_radial=math.exp(log_norm_rad),
        log_norm_radial=log_norm_rad,
    )


def parabolic_state(params: SystemParams, n1: int, n2: int, two_m: int
                    ) -> ParabolicState:
    qn = parabolic_qn(params, n1, n2, two_m)
    dc = derive_constants(params, two_m)
    two_n = principal_two_n(params, qn)
    eps = epsilon(n_effective(params, two_m, two_n))
    norms = tuple(
        math.exp(0.5 * (ln_gamma(ni + mi + 1.0) - ln_gamma(ni + 1.0)) - ln_gamma(mi + 1.0))
        for ni, mi in ((n1, dc.m1), (n2, dc.m2))
    )
    return ParabolicState(qn=qn, dc=dc, two_s=params.two_s, eps=eps, norms=norms)


def angular_profile(state: SphericalState, theta):
    """Real angular factor: the full Z without the azimuthal phase."""
    theta = np.asarray(theta, dtype=float)
    dc = state.dc
    k = (state.qn.two_j - dc.two_m_plus) // 2
    half = 0.5 * theta
    value = (
        state.norm_angular
        * np.cos(half) ** dc.m1
        * np.sin(half) ** dc.m2
        * jacobi_p(k, dc.m2, dc.m1, np.cos(theta))
    )
    return value if value.ndim else float(value)


def angular_z(state: SphericalState, theta: float, phi: float) -> complex:
    """Angular function including exp(i (m - s) phi)."""
    return angular_profile(state, theta) * np.exp(1j * _winding(state) * phi)


def radial_r(state: SphericalState, r):
    """Normalized radial function; returns an array if r is an array."""
    r = np.asarray(r, dtype=float)
    dc = state.dc
    j = state.qn.two_j / 2.0
    power = j + 0.5 * dc.delta_total
    n_r = (state.qn.two_n - state.qn.two_j - 2) // 2
    t = 2.0 * state.eps * r
    poly = kummer_terminating(n_r, 2.0 * j + dc.delta_total + 2.0, t)
    # log of a sentinel 1.0 where t == 0; that branch is overwritten below
    log_t = np.log(np.where(t > 0.0, t, 1.0))
    envelope = np.where(
        t > 0.0,
        np.exp(state.log_norm_radial + power * log_t - 0.5 * t),
        state.norm_radial if power == 0.0 else 0.0,
    )
    value = envelope * poly
    return value if value.ndim else float(value)


def psi_spherical(state: SphericalState, point) -> complex:
    """Full spherical wavefunction at a SphericalPoint."""
    return (
        radial_r(state, point.r)
        * angular_profile(state, point.theta)
        * np.exp(1j * _winding(state) * point.phi)
    )


def _phi_factor(n_i: int, m_i: float, norm: float, eps: float, x):
    """One-dimensional parabolic factor without the azimuthal phase."""
    x = np.asarray(x, dtype=float)
    t = eps * x
    poly = kummer_terminating(n_i, m_i + 1.0, t)
    log_t = np.log(np.where(t > 0.0, t, 1.0))
    envelope = np.where(
        t > 0.0,
        norm * np.exp(0.5 * m_i * log_t - 0.5 * t),
        norm if m_i == 0.0 else 0.0,
    )
    return envelope * poly


def parabolic_factor(state: ParabolicState, axis: int, x):
    """One of the two 1D factors of the parabolic profile (axis 0: xi, 1: eta)."""
    if axis == 0:
        return _phi_factor(state.qn.n1, state.dc.m1, state.norms[0], state.eps, x)
    return _phi_factor(state.qn.n2, state.dc.m2, state.norms[1], state.eps, x)


def parabolic_profile(state: ParabolicState, xi, eta):
    """Real profile sqrt(2) eps^2 Phi1(xi) Phi2(eta)."""
    dc = state.dc
    value = (
        math.sqrt(2.0)
        * state.eps**2
        * _phi_factor(state.qn.n1, dc.m1, state.norms[0], state.eps, xi)
        * _phi_factor(state.qn.n2, dc.m2, state.norms[1], state.eps, eta)
    )
    return value if np.asarray(value).ndim else float(value)


def psi_parabolic(state: ParabolicState, point) -> complex:
    """Full parabolic wavefunction at a ParabolicPoint."""
    return (
        parabolic_profile(state, point.xi, point.eta)
        * np.exp(1j * _winding(state) * point.phi)
        / math.sqrt(2.0 * math.pi)
    )


def _winding(state) -> int:
    """Integer azimuthal winding m - s."""
    return (state.qn.two_m - state.two_s) // 2
