"""Prolate spheroidal basis via the separation-constant eigenproblem.

At fixed level (n, m) the spheroidal states diagonalize the operator
combining the generalized angular momentum square with R times the
generalized Runge-Lenz z-component.  In the spherical basis this is a
symmetric tridiagonal matrix in j; in the parabolic basis a symmetric
tridiagonal matrix in n1.  Both representations share one spectrum
lambda_q(R), q = 0 .. d-1 ascending, and their eigenvector matrices are
related by the interbasis mixing matrix.

The parabolic-side matrix uses the closed form rederived from the
Clebsch-Gordan ladder relation; it is symmetric by construction and its
spectrum reproduces the angular eigenvalue list exactly (both facts are
enforced by the verification suite).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .interbasis import ExpansionMatrix, expansion_matrix
from .qnum import (
    ParabolicQN,
    QuantumNumberError,
    SystemParams,
    block_dimension,
    derive_constants,
    format_half_integer,
    parabolic_separation_constant,
)

__all__ = [
    "TridiagonalSystem",
    "SpheroidalSolution",
    "LimitReport",
    "angular_coupling",
    "runge_lenz_matrix_spherical",
    "angular_momentum_matrix_parabolic",
    "spherical_system",
    "parabolic_system",
    "solve",
    "limits",
    "sweep",
]


@dataclass(frozen=True)
class TridiagonalSystem:
    """Symmetric tridiagonal matrix of the separation operator."""

    dim: int
    diag: np.ndarray
    offdiag: np.ndarray
    basis_tag: str              # "spherical" or "parabolic"
    labels: tuple[str, ...]

    def matrix(self) -> np.ndarray:
        m = np.diag(self.diag)
        if self.dim > 1:
            m += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return m


@dataclass(frozen=True)
class SpheroidalSolution:
    """Eigenvalues and both coefficient matrices at one R."""

    R: float
    lambdas: np.ndarray                      # ascending; index is q
    spherical_coefficients: ExpansionMatrix  # rows j, columns q
    parabolic_coefficients: ExpansionMatrix  # rows n1, columns q


@dataclass(frozen=True)
class LimitReport:
    """Max deviations of the four limit relations, signs aligned per column."""

    r_small: float
    r_large: float
    u_identity_dev: float   # U(r_small) vs identity
    u_mixing_dev: float     # U(r_large) vs mixing matrix
    v_identity_dev: float   # V(r_large) vs identity
    v_mixing_dev: float     # V(r_small) vs transposed mixing matrix

    def max_deviation(self) -> float:
        return max(self.u_identity_dev, self.u_mixing_dev,
                   self.v_identity_dev, self.v_mixing_dev)


def angular_coupling(params: SystemParams, two_n: int, two_j: int, two_m: int) -> float:
    """Coupling strength between adjacent angular channels j-1 and j.

    Vanishes at the formal band ends j = m_plus and j = n; raises outside
    m_plus <= j <= n.
    """
    dc = derive_constants(params, two_m)
    if two_j < dc.two_m_plus or two_j > two_n or (two_j - dc.two_m_plus) % 2 != 0:
        raise QuantumNumberError(
            f"coupling defined for m_plus <= j <= n, got two_j={two_j}"
        )
    j = two_j / 2.0
    n = two_n / 2.0
    delta = dc.delta_total
    num = (
        (j - dc.m_plus)
        * (j + dc.m_plus + delta)
        * (j - dc.m_minus + dc.delta1)
        * (j + dc.m_minus + dc.delta2)
        * (n - j)
        * (n + j + delta)
    )
    if num == 0.0:
        return 0.0
    den = (j + 0.5 * delta) ** 2 * (2.0 * j + delta - 1.0) * (2.0 * j + delta + 1.0)
    return math.sqrt(num / den)


def _angular_eigenvalues(params: SystemParams, two_n: int, two_m: int) -> np.ndarray:
    dc = derive_constants(params, two_m)
    d = block_dimension(params, two_m, two_n)
    half_delta = 0.5 * dc.delta_total
    j0 = dc.two_m_plus / 2.0
    return np.array([(j0 + k + half_delta) * (j0 + k + half_delta + 1.0)
                     for k in range(d)])


def runge_lenz_matrix_spherical(params: SystemParams, two_n: int, two_m: int
                                ) -> np.ndarray:
    """Generalized Runge-Lenz z-component in the spherical basis.

    Symmetric tridiagonal d x d matrix; its eigenvalues are the parabolic
    separation constants of the block.
    """
    dc = derive_constants(params, two_m)
    d = block_dimension(params, two_m, two_n)
    delta = dc.delta_total
    n = two_n / 2.0
    diag = np.empty(d)
    for k in range(d):
        j = dc.m_plus + k
        num = (dc.m1 + dc.m2) * (dc.m1 - dc.m2)
        diag[k] = 0.0 if num == 0.0 else num / ((2.0 * j + delta) * (2.0 * j + delta + 2.0))
    off = np.array([
        -2.0 / (2.0 * n + delta)
        * angular_coupling(params, two_n, dc.two_m_plus + 2 * (k + 1), two_m)
        for k in range(d - 1)
    ])
    m = np.diag(diag)
    if d > 1:
        m += np.diag(off, 1) + np.diag(off, -1)
    return m


def angular_momentum_matrix_parabolic(params: SystemParams, two_n: int, two_m: int
                                      ) -> np.ndarray:
    """Generalized angular momentum square in the parabolic basis.

    Symmetric tridiagonal d x d matrix with eigenvalues
    (j + delta/2)(j + delta/2 + 1), j = m_plus .. n-1.
    """
    dc = derive_constants(params, two_m)
    d = block_dimension(params, two_m, two_n)
    half_delta = 0.5 * dc.delta_total
    base = (dc.m_plus + half_delta) * (dc.m_plus + half_delta + 1.0)
    diag = np.empty(d)
    off = np.empty(max(d - 1, 0))
    for n1 in range(d):
        n2 = d - 1 - n1
        diag[n1] = (2.0 * n1 * n2 + n1 * dc.m2 + n2 * dc.m1 + n1 + n2 + base)
        if n1 < d - 1:
            off[n1] = -math.sqrt((n1 + 1.0) * n2 * (n1 + dc.m1 + 1.0) * (n2 + dc.m2))
    m = np.diag(diag)
    if d > 1:
        m += np.diag(off, 1) + np.diag(off, -1)
    return m


def spherical_system(params: SystemParams, two_n: int, two_m: int, R: float
                     ) -> TridiagonalSystem:
    """Separation-operator matrix in the spherical basis at interfocus R."""
    if R < 0.0:
        raise ValueError("R must be nonnegative")
    dc = derive_constants(params, two_m)
    d = block_dimension(params, two_m, two_n)
    x = runge_lenz_matrix_spherical(params, two_n, two_m)
    diag = _angular_eigenvalues(params, two_n, two_m) + R * np.diag(x)
    off = R * np.diag(x, 1) if d > 1 else np.empty(0)
    labels = tuple(f"j={format_half_integer(dc.two_m_plus + 2 * k)}" for k in range(d))
    return TridiagonalSystem(dim=d, diag=diag, offdiag=np.asarray(off),
                             basis_tag="spherical", labels=labels)


def parabolic_system(params: SystemParams, two_n: int, two_m: int, R: float
                     ) -> TridiagonalSystem:
    """Separation-operator matrix in the parabolic basis at interfocus R."""
    if R < 0.0:
        raise ValueError("R must be nonnegative")
    d = block_dimension(params, two_m, two_n)
    m = angular_momentum_matrix_parabolic(params, two_n, two_m)
    betas = np.array([
        parabolic_separation_constant(params, ParabolicQN(n1, d - 1 - n1, two_m))
        for n1 in range(d)
    ])
    diag = np.diag(m) + R * betas
    off = np.diag(m, 1) if d > 1 else np.empty(0)
    labels = tuple(f"n1={n1}" for n1 in range(d))
    return TridiagonalSystem(dim=d, diag=diag, offdiag=np.asarray(off),
                             basis_tag="parabolic", labels=labels)


def _eigh_tridiagonal(system: TridiagonalSystem) -> tuple[np.ndarray, np.ndarray]:
    if system.dim == 1:
        return system.diag.copy(), np.ones((1, 1))
    try:
        return scipy.linalg.eigh_tridiagonal(system.diag, system.offdiag)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - library failure
        raise RuntimeError(
            f"tridiagonal eigensolver failed to converge for {system.basis_tag} "
            f"system of dimension {system.dim}"
        ) from exc


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    # first nonzero component of each column made positive
    for q in range(vectors.shape[1]):
        col = vectors[:, q]
        nz = np.nonzero(col)[0]
        if nz.size and col[nz[0]] < 0.0:
            vectors[:, q] = -col
    return vectors


def solve(params: SystemParams, two_n: int, two_m: int, R: float
          ) -> SpheroidalSolution:
    """Diagonalize both representations at one R.

    Eigenvalues ascend (defining q); eigenvectors are unit columns with
    the first nonzero component positive.  The two eigenvalue sets agree
    to solver accuracy since both matrices represent the same operator.
    """
    sph = spherical_system(params, two_n, two_m, R)
    par = parabolic_system(params, two_n, two_m, R)
    lam_s, u = _eigh_tridiagonal(sph)
    _, v = _eigh_tridiagonal(par)
    u = _fix_signs(u)
    v = _fix_signs(v)
    q_labels = tuple(f"q={q}" for q in range(sph.dim))
    return SpheroidalSolution(
        R=R,
        lambdas=lam_s,
        spherical_coefficients=ExpansionMatrix(
            dim=sph.dim, entries=u, row_labels=sph.labels, col_labels=q_labels),
        parabolic_coefficients=ExpansionMatrix(
            dim=par.dim, entries=v, row_labels=par.labels, col_labels=q_labels),
    )


def _aligned_deviation(actual: np.ndarray, target: np.ndarray) -> float:
    """Max entry deviation after flipping each column to best match the target."""
    dev = 0.0
    for q in range(actual.shape[1]):
        col = actual[:, q]
        if np.dot(col, target[:, q]) < 0.0:
            col = -col
        dev = max(dev, float(np.abs(col - target[:, q]).max()))
    return dev


def limits(params: SystemParams, two_n: int, two_m: int,
           r_small: float, r_large: float) -> LimitReport:
    """Deviations of the four limit relations at the probe R values.

    As R -> 0 the spherical-side eigenvectors approach unit vectors and
    the parabolic-side ones the transposed mixing matrix; as R -> inf the
    roles swap.  Deviations fall off linearly in R (or 1/R).
    """
    w = expansion_matrix(params, two_n, two_m).entries
    d = w.shape[0]
    small = solve(params, two_n, two_m, r_small)
    large = solve(params, two_n, two_m, r_large)
    return LimitReport(
        r_small=r_small,
        r_large=r_large,
        u_identity_dev=_aligned_deviation(
            small.spherical_coefficients.entries, np.eye(d)),
        u_mixing_dev=_aligned_deviation(
            large.spherical_coefficients.entries, w),
        v_identity_dev=_aligned_deviation(
            large.parabolic_coefficients.entries, np.eye(d)),
        v_mixing_dev=_aligned_deviation(
            small.parabolic_coefficients.entries, w.T),
    )


def sweep(params: SystemParams, two_n: int, two_m: int, r_grid) -> list[SpheroidalSolution]:
    """Solutions along an ascending R grid with sign-continued eigenvectors.

    Each eigenvector column keeps the sign that maximizes its overlap
    with the previous grid point, so lambda branches and coefficient
    curves are continuous along the grid.
    """
    r_grid = [float(r) for r in r_grid]
    if not r_grid:
        raise ValueError("R grid must contain at least one point")
    if any(b < a for a, b in zip(r_grid, r_grid[1:])):
        raise ValueError("R grid must be ascending")
    solutions = [solve(params, two_n, two_m, r) for r in r_grid]
    for prev, cur in zip(solutions, solutions[1:]):
        for mat_prev, mat_cur in (
            (prev.spherical_coefficients, cur.spherical_coefficients),
            (prev.parabolic_coefficients, cur.parabolic_coefficients),
        ):
            for q in range(mat_cur.dim):
                if np.dot(mat_prev.entries[:, q], mat_cur.entries[:, q]) < 0.0:
                    mat_cur.entries[:, q] *= -1.0
    return solutions
