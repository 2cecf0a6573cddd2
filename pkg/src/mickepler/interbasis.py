"""Expansion coefficients connecting the parabolic and spherical bases.

A parabolic bound state of the level (n, m) is a finite mixture of the
d = n - m_plus spherical states of the same level.  The mixing matrix is
real orthogonal; it is computed from a terminating 3F2 closed form and,
independently, from the analytic continuation of the SU(2) Clebsch-Gordan
closed form to real arguments.  The radial bi-orthogonality integral
(no r^2 weight) that underpins the derivation is exposed with both its
quadrature value and its closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numkernel import hyp3f2_unit_scaled, ln_gamma
from .qnum import (
    QuantumNumberError,
    SystemParams,
    block_dimension,
    derive_constants,
    format_half_integer,
    n_effective,
)

__all__ = [
    "ExpansionMatrix",
    "clebsch_gordan_continued",
    "expansion_coefficient",
    "expansion_coefficient_cg",
    "inverse_expansion_coefficient",
    "expansion_matrix",
    "inverse_expansion_matrix",
    "radial_overlap_closed_form",
    "radial_overlap_integral",
]


@dataclass(frozen=True)
class ExpansionMatrix:
    """Square coefficient matrix with printable row/column labels.

    Column k holds the expansion coefficients of the k-th expanded state
    over the basis labelling the rows.
    """

    dim: int
    entries: np.ndarray
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]


def _check_labels(params: SystemParams, two_n: int, two_j: int, n1: int, two_m: int):
    dc = derive_constants(params, two_m)
    d = block_dimension(params, two_m, two_n)
    jj = (two_j - dc.two_m_plus) // 2
    if (two_j - dc.two_m_plus) % 2 != 0 or not 0 <= jj <= d - 1:
        raise QuantumNumberError(
            f"two_j={two_j} outside the block j = m_plus .. n-1 "
            f"(two_m_plus={dc.two_m_plus}, two_n={two_n})"
        )
    if not 0 <= n1 <= d - 1:
        raise QuantumNumberError(f"n1={n1} outside 0 .. {d - 1}")
    return dc, d, jj


def expansion_coefficient(params: SystemParams, two_n: int, two_j: int,
                          n1: int, two_m: int) -> float:
    """Coefficient of the spherical state (n, j, m) in the parabolic
    state (n1, n2, m) of the same level.

    Evaluated from the terminating 3F2 closed form, with all gamma
    prefactors combined in log space before exponentiation.
    """
    dc, d, _ = _check_labels(params, two_n, two_j, n1, two_m)
    n = two_n / 2.0
    j = two_j / 2.0
    n2 = d - 1 - n1
    delta = dc.delta_total
    mp, mm = dc.m_plus, dc.m_minus

    log_pref = 0.5 * (
        math.log(2.0 * j + delta + 1.0)
        + ln_gamma(n1 + dc.m1 + 1.0)
        + ln_gamma(n2 + dc.m2 + 1.0)
        - ln_gamma(n1 + 1.0)
        - ln_gamma(n2 + 1.0)
        - ln_gamma(n - j)
        - ln_gamma(j - mp + 1.0)
        - ln_gamma(j + mm + dc.delta2 + 1.0)
        + ln_gamma(j - mm + dc.delta1 + 1.0)
        + ln_gamma(j + mp + delta + 1.0)
        - ln_gamma(n + j + delta + 1.0)
    ) + ln_gamma(n - mp) - ln_gamma(dc.m1 + 1.0)

    return hyp3f2_unit_scaled(
        -float(n1),
        -(j - mp),
        j + mp + delta + 1.0,
        dc.m1 + 1.0,
        -(n - mp - 1.0),
        log_pref,
    )


def clebsch_gordan_continued(a: float, alpha: float, b: float, beta: float,
                             c: float, gamma: float) -> float:
    """SU(2) Clebsch-Gordan closed form continued to real arguments.

    Requires gamma = alpha + beta and a - alpha a nonnegative integer
    (the terminating index of the 3F2 sum).  On genuine half-integer
    SU(2) labels this reproduces the tabulated coefficients.
    """
    if abs(gamma - (alpha + beta)) > 1e-12:
        raise ValueError("selection rule gamma = alpha + beta violated")
    k = a - alpha
    if abs(k - round(k)) > 1e-9 or round(k) < 0:
        raise ValueError(f"a - alpha must be a nonnegative integer, got {k}")
    log_pref = 0.5 * (
        math.log(2.0 * c + 1.0)
        + ln_gamma(a + alpha + 1.0)
        + ln_gamma(c + gamma + 1.0)
        - ln_gamma(a - alpha + 1.0)
        - ln_gamma(c - gamma + 1.0)
        - ln_gamma(a + b + c + 2.0)
        - ln_gamma(a + b - c + 1.0)
        - ln_gamma(a - b + c + 1.0)
        - ln_gamma(b - a + c + 1.0)
        - ln_gamma(b - beta + 1.0)
        - ln_gamma(b + beta + 1.0)
    ) + ln_gamma(a + b - gamma + 1.0) + ln_gamma(b + c - alpha + 1.0)
    phase = -1.0 if round(k) % 2 else 1.0
    return phase * hyp3f2_unit_scaled(
        -(a + b + c + 1.0),
        -a + alpha,
        -c + gamma,
        -a - b + gamma,
        -b - c + alpha,
        log_pref,
    )


def expansion_coefficient_cg(params: SystemParams, two_n: int, two_j: int,
                             n1: int, two_m: int) -> float:
    """Same coefficient through the continued Clebsch-Gordan closed form."""
    dc, d, _ = _check_labels(params, two_n, two_j, n1, two_m)
    n = two_n / 2.0
    j = two_j / 2.0
    n2 = d - 1 - n1
    half_delta = 0.5 * dc.delta_total
    a = 0.5 * (n + dc.m_minus + dc.delta2 - 1.0)
    alpha = 0.5 * (dc.m2 + n2 - n1)
    b = 0.5 * (n - dc.m_minus + dc.delta1 - 1.0)
    beta = 0.5 * (dc.m1 + n1 - n2)
    c = j + half_delta
    gamma = 0.5 * (dc.m1 + dc.m2)
    phase = -1.0 if n1 % 2 else 1.0
    return phase * clebsch_gordan_continued(a, alpha, b, beta, c, gamma)


def inverse_expansion_coefficient(params: SystemParams, two_n: int, two_j: int,
                                  n1: int, two_m: int) -> float:
    """Coefficient of the parabolic state n1 in the spherical state (n, j, m).

    The continued-CG labels of the inverse expansion reduce to exactly
    the forward labels, so the inverse matrix is the transpose of the
    forward one; both directions share one implementation.
    """
    return expansion_coefficient(params, two_n, two_j, n1, two_m)


def _block_labels(params: SystemParams, two_n: int, two_m: int):
    dc = derive_constants(params, two_m)
    d = block_dimension(params, two_m, two_n)
    j_labels = tuple(
        f"j={format_half_integer(dc.two_m_plus + 2 * k)}" for k in range(d)
    )
    n1_labels = tuple(f"n1={n1}" for n1 in range(d))
    return dc, d, j_labels, n1_labels


def expansion_matrix(params: SystemParams, two_n: int, two_m: int) -> ExpansionMatrix:
    """Orthogonal d x d matrix; rows are spherical j, columns parabolic n1."""
    dc, d, j_labels, n1_labels = _block_labels(params, two_n, two_m)
    entries = np.empty((d, d))
    for k in range(d):
        two_j = dc.two_m_plus + 2 * k
        for n1 in range(d):
            entries[k, n1] = expansion_coefficient(params, two_n, two_j, n1, two_m)
    return ExpansionMatrix(dim=d, entries=entries,
                           row_labels=j_labels, col_labels=n1_labels)


def inverse_expansion_matrix(params: SystemParams, two_n: int, two_m: int
                             ) -> ExpansionMatrix:
    """Transpose of :func:`expansion_matrix`; rows n1, columns j."""
    w = expansion_matrix(params, two_n, two_m)
    return ExpansionMatrix(dim=w.dim, entries=w.entries.T.copy(),
                           row_labels=w.col_labels, col_labels=w.row_labels)


def radial_overlap_closed_form(params: SystemParams, two_n: int, two_m: int,
                               two_j: int, two_jp: int) -> float:
    """Closed form of the unweighted radial overlap integral.

    Same-level radial functions in different angular channels are
    orthogonal without the r^2 weight; the diagonal value is
    2 / (n_eff^3 (2j + delta1 + delta2 + 1)).
    """
    if two_j != two_jp:
        return 0.0
    dc = derive_constants(params, two_m)
    n_eff = n_effective(params, two_m, two_n)
    j = two_j / 2.0
    return 2.0 / (n_eff**3 * (2.0 * j + dc.delta_total + 1.0))


def radial_overlap_integral(params: SystemParams, two_n: int, two_m: int,
                            two_j: int, two_jp: int, rule_order: int = 128) -> float:
    """Quadrature value of the unweighted radial overlap integral."""
    from .bases import radial_r, spherical_state
    from .verify import integrate_radial

    s1 = spherical_state(params, two_n, two_j, two_m)
    s2 = spherical_state(params, two_n, two_jp, two_m)
    dc = derive_constants(params, two_m)
    power = (two_j + two_jp) / 2.0 + dc.delta_total
    return integrate_radial(
        lambda r: radial_r(s1, r) * radial_r(s2, r),
        2.0 * s1.eps,
        rule_order=rule_order,
        singular_power=power,
    )
