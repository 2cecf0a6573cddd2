"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (run with -s to see them all).
The parameter grid is three monopole numbers {0, 1/2, 1} crossed with
ring strengths {(0, 0), (0.3, 0.7)}.  Tolerances are fixed here, not
calibrated.
"""

import math
import subprocess
import sys
import time

import numpy as np
from sympy import Rational
from sympy.physics.quantum.cg import CG

from conftest import blocks_by_dimension, blocks_up_to, grid_cases

from mickepler.interbasis import (
    expansion_coefficient,
    expansion_coefficient_cg,
    expansion_matrix,
    radial_overlap_closed_form,
    radial_overlap_integral,
)
from mickepler.qnum import (
    ParabolicQN,
    SystemParams,
    block_dimension,
    derive_constants,
    energy,
    parabolic_separation_constant,
)
from mickepler.spheroidal import (
    angular_coupling,
    angular_momentum_matrix_parabolic,
    limits,
    parabolic_system,
    runge_lenz_matrix_spherical,
    solve,
)
from mickepler.verify import (
    angular_gram_residual,
    overlap_matrix_quadrature,
    parabolic_norm_residual,
    radial_gram_residual,
)

GRID = grid_cases()


def _line(name: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")


def _aligned_dev(actual: np.ndarray, target: np.ndarray) -> float:
    dev = 0.0
    for q in range(target.shape[1]):
        col = actual[:, q]
        if np.dot(col, target[:, q]) < 0:
            col = -col
        dev = max(dev, float(np.abs(col - target[:, q]).max()))
    return dev


def test_criterion_1_biorthogonality():
    """Quadrature radial overlaps match the closed form on the full grid."""
    t0 = time.perf_counter()
    worst = 0.0
    for params in GRID:
        for two_n, two_m in blocks_up_to(params, 5):
            dc = derive_constants(params, two_m)
            d = block_dimension(params, two_m, two_n)
            for ka in range(d):
                for kb in range(ka, d):
                    two_j = dc.two_m_plus + 2 * ka
                    two_jp = dc.two_m_plus + 2 * kb
                    quad = radial_overlap_integral(params, two_n, two_m, two_j, two_jp)
                    closed = radial_overlap_closed_form(params, two_n, two_m,
                                                        two_j, two_jp)
                    worst = max(worst, abs(quad - closed))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and elapsed < 10.0
    _line("criterion-1 bi-orthogonality", ok,
          f"max residual {worst:.2e} (tol 1e-8), {elapsed:.1f}s (limit 10s)")
    assert worst <= 1e-8
    assert elapsed < 10.0


def test_criterion_2_interbasis_ground_truth():
    """Closed-form mixing coefficients equal brute-force overlap quadrature."""
    t0 = time.perf_counter()
    worst = 0.0
    for params in GRID:
        for two_n, two_m in blocks_up_to(params, 5, d_max=4):
            w = expansion_matrix(params, two_n, two_m).entries
            quad = overlap_matrix_quadrature(params, two_n, two_m)
            worst = max(worst, float(np.abs(quad - w).max()))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-7 and elapsed < 60.0
    _line("criterion-2 interbasis ground truth", ok,
          f"max residual {worst:.2e} (tol 1e-7), {elapsed:.1f}s (limit 60s)")
    assert worst <= 1e-7
    assert elapsed < 60.0


def test_criterion_3_cg_continuation():
    """Both closed forms agree; integer case matches the Racah oracle."""
    rng = np.random.default_rng(1234)
    worst_rel = 0.0
    checked = 0
    while checked < 500:
        two_s = int(rng.integers(-3, 4))
        params = SystemParams(two_s=two_s, c1=float(rng.uniform(0, 2)),
                              c2=float(rng.uniform(0, 2)))
        two_m = two_s + 2 * int(rng.integers(-3, 4))
        dc = derive_constants(params, two_m)
        d = int(rng.integers(1, 7))
        two_n = dc.two_m_plus + 2 * d
        n1 = int(rng.integers(0, d))
        two_j = dc.two_m_plus + 2 * int(rng.integers(0, d))
        direct = expansion_coefficient(params, two_n, two_j, n1, two_m)
        via_cg = expansion_coefficient_cg(params, two_n, two_j, n1, two_m)
        worst_rel = max(worst_rel, abs(direct - via_cg)
                        / max(abs(direct), abs(via_cg)))
        checked += 1

    worst_int = 0.0
    for n in range(1, 5):
        for m in range(-(n - 1), n):
            d = n - abs(m)
            for k in range(d):
                j = abs(m) + k
                for n1 in range(d):
                    n2 = d - 1 - n1
                    ours = expansion_coefficient_cg(
                        SystemParams(two_s=0), 2 * n, 2 * j, n1, 2 * m)
                    ref = float(
                        (-1) ** n1 * CG(
                            Rational(n - 1, 2), Rational(abs(m) + n2 - n1, 2),
                            Rational(n - 1, 2), Rational(abs(m) + n1 - n2, 2),
                            j, abs(m)).doit())
                    worst_int = max(worst_int, abs(ours - ref))
    ok = worst_rel <= 1e-10 and worst_int <= 1e-12
    _line("criterion-3 CG continuation", ok,
          f"500 random labels rel {worst_rel:.2e} (tol 1e-10), "
          f"integer case vs Racah {worst_int:.2e} (tol 1e-12)")
    assert worst_rel <= 1e-10
    assert worst_int <= 1e-12


def test_criterion_4_operator_spectrum_identities():
    """Runge-Lenz and angular-momentum matrices carry the exact spectra."""
    worst = 0.0
    for params in GRID:
        two_m_values = range(params.two_s - 6, params.two_s + 7, 2)
        for two_n, two_m in blocks_by_dimension(params, range(1, 11), two_m_values):
            dc = derive_constants(params, two_m)
            d = block_dimension(params, two_m, two_n)
            x_eigs = np.sort(np.linalg.eigvalsh(
                runge_lenz_matrix_spherical(params, two_n, two_m)))
            betas = np.sort([
                parabolic_separation_constant(params, ParabolicQN(n1, d - 1 - n1, two_m))
                for n1 in range(d)])
            worst = max(worst, float(np.abs(x_eigs - betas).max()))
            m_eigs = np.sort(np.linalg.eigvalsh(
                angular_momentum_matrix_parabolic(params, two_n, two_m)))
            half = 0.5 * dc.delta_total
            expected = np.sort([(dc.m_plus + k + half) * (dc.m_plus + k + half + 1)
                                for k in range(d)])
            worst = max(worst, float(np.abs(m_eigs - expected).max()))
    ok = worst <= 1e-10
    _line("criterion-4 operator spectra", ok, f"max deviation {worst:.2e} (tol 1e-10)")
    assert worst <= 1e-10


def test_criterion_5_cross_basis_spectrum_equality():
    """Both tridiagonal representations share eigenvalues; U = W V per column."""
    worst_lam = 0.0
    worst_uv = 0.0
    for params in GRID:
        two_m_values = range(params.two_s - 4, params.two_s + 5, 2)
        for two_n, two_m in blocks_by_dimension(params, range(1, 9), two_m_values):
            w = expansion_matrix(params, two_n, two_m).entries
            for R in (0.1, 1.0, 10.0, 100.0):
                sol = solve(params, two_n, two_m, R)
                lam_par = np.sort(np.linalg.eigvalsh(
                    parabolic_system(params, two_n, two_m, R).matrix()))
                worst_lam = max(worst_lam, float(
                    np.abs(np.sort(sol.lambdas) - lam_par).max()))
                worst_uv = max(worst_uv, _aligned_dev(
                    w @ sol.parabolic_coefficients.entries,
                    sol.spherical_coefficients.entries))
    ok = worst_lam <= 1e-10 and worst_uv <= 1e-9
    _line("criterion-5 cross-basis spectrum", ok,
          f"lambda sets {worst_lam:.2e} (tol 1e-10), U vs WV {worst_uv:.2e} (tol 1e-9)")
    assert worst_lam <= 1e-10
    assert worst_uv <= 1e-9


def test_criterion_6_limit_relations():
    """Limit deviations small at the probe R and shrinking 10x per decade.

    The absolute bound applies to the smallest nontrivial blocks (d = 2);
    the first-order deviation constant grows with the block dimension.
    """
    worst_dev = 0.0
    worst_ratio = 0.0
    for params in GRID:
        two_m_values = range(params.two_s - 2, params.two_s + 3, 2)
        for two_n, two_m in blocks_by_dimension(params, [2], two_m_values):
            inner = limits(params, two_n, two_m, 1e-6, 1e6)
            outer = limits(params, two_n, two_m, 1e-7, 1e7)
            worst_dev = max(worst_dev, inner.max_deviation())
            for field in ("u_identity_dev", "u_mixing_dev",
                          "v_identity_dev", "v_mixing_dev"):
                worst_ratio = max(worst_ratio,
                                  getattr(outer, field) / getattr(inner, field))
    ok = worst_dev <= 1e-5 and worst_ratio <= 0.101
    _line("criterion-6 limit relations", ok,
          f"max deviation {worst_dev:.2e} (tol 1e-5), "
          f"decade shrink ratio {worst_ratio:.4f} (limit 0.101)")
    assert worst_dev <= 1e-5
    assert worst_ratio <= 0.101


def test_criterion_7_normalization_orthonormality():
    """Quadrature normalization residuals across the grid, n <= 4."""
    worst = 0.0
    for params in GRID:
        blocks = blocks_up_to(params, 4)
        m_done = set()
        for two_n, two_m in blocks:
            worst = max(worst, parabolic_norm_residual(params, two_n, two_m))
            if two_m not in m_done:
                m_done.add(two_m)
                worst = max(worst, angular_gram_residual(params, two_m))
                dc = derive_constants(params, two_m)
                j_list = sorted({tj for tn, tm in blocks if tm == two_m
                                 for tj in range(dc.two_m_plus, tn - 1, 2)})
                for two_j in j_list:
                    n_list = [tn for tn, tm in blocks
                              if tm == two_m and tn >= two_j + 2]
                    worst = max(worst, radial_gram_residual(params, two_m,
                                                            two_j, n_list))
    ok = worst <= 1e-8
    _line("criterion-7 normalization/orthonormality", ok,
          f"max residual {worst:.2e} (tol 1e-8)")
    assert worst <= 1e-8


def test_criterion_8_hydrogen_reduction():
    """Every quantity reduces to independently coded hydrogen formulas."""
    params = SystemParams(two_s=0)
    worst = 0.0

    def coupling_ref(n, j, m):
        return math.sqrt((j * j - m * m) * (n * n - j * j) / (4.0 * j * j - 1.0))

    for n in range(1, 6):
        worst = max(worst, abs(energy(params, 0, 2 * n) + 1.0 / (2.0 * n * n)))
        for m in range(-(n - 1), n):
            d = n - abs(m)
            js = [abs(m) + k for k in range(d)]
            # couplings
            for j in js[1:]:
                worst = max(worst, abs(
                    angular_coupling(params, 2 * n, 2 * j, 2 * m)
                    - coupling_ref(n, j, m)))
            # mixing matrix against the exact Clebsch-Gordan table
            w = expansion_matrix(params, 2 * n, 2 * m).entries
            for k, j in enumerate(js):
                for n1 in range(d):
                    n2 = d - 1 - n1
                    ref = float((-1) ** n1 * CG(
                        Rational(n - 1, 2), Rational(abs(m) + n2 - n1, 2),
                        Rational(n - 1, 2), Rational(abs(m) + n1 - n2, 2),
                        j, abs(m)).doit())
                    worst = max(worst, abs(w[k, n1] - ref))
            # separation constants from the independently built tridiagonal
            for R in (0.5, 5.0):
                diag = np.array([j * (j + 1.0) for j in js])
                off = np.array([-(R / n) * coupling_ref(n, j + 1, m)
                                for j in js[:-1]])
                matrix = np.diag(diag)
                if d > 1:
                    matrix += np.diag(off, 1) + np.diag(off, -1)
                expected = np.sort(np.linalg.eigvalsh(matrix))
                sol = solve(params, 2 * n, 2 * m, R)
                worst = max(worst, float(np.abs(sol.lambdas - expected).max()))
    ok = worst <= 1e-10
    _line("criterion-8 hydrogen reduction", ok, f"max deviation {worst:.2e} (tol 1e-10)")
    assert worst <= 1e-10


def test_criterion_9_full_verify_suite():
    """The CLI verification run with default settings passes within budget."""
    t0 = time.perf_counter()
    result = subprocess.run(
        [sys.executable, "-m", "mickepler.cli", "verify"],
        capture_output=True, text=True,
    )
    elapsed = time.perf_counter() - t0
    ok = result.returncode == 0 and elapsed < 300.0
    _line("criterion-9 full verify suite", ok,
          f"exit {result.returncode}, {elapsed:.1f}s (limit 300s)")
    assert result.returncode == 0, result.stdout[-2000:]
    assert elapsed < 300.0
