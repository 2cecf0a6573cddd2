"""Quantum-number bookkeeping and derived constants.

Half-integer quantum numbers are stored as doubled integers (two_s,
two_m, two_j, two_n) so that parity checks and label ranges are exact.
All floating-point constants (delta shifts, effective azimuthal indices,
energies) derive from a :class:`SystemParams` and a doubled azimuthal
number through :func:`derive_constants`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "QuantumNumberError",
    "SystemParams",
    "DerivedConstants",
    "SphericalQN",
    "ParabolicQN",
    "derive_constants",
    "spherical_qn",
    "parabolic_qn",
    "block_dimension",
    "n_effective",
    "epsilon",
    "energy",
    "parabolic_separation_constant",
    "enumerate_basis",
    "enumerate_m_blocks",
    "parse_half_integer",
    "format_half_integer",
]


class QuantumNumberError(ValueError):
    """Raised for invalid or mutually inconsistent quantum numbers."""


@dataclass(frozen=True)
class SystemParams:
    """Monopole number (doubled) and the two ring-potential strengths."""

    two_s: int
    c1: float = 0.0
    c2: float = 0.0

    def __post_init__(self):
        if self.c1 < 0.0 or self.c2 < 0.0:
            raise ValueError("perturbation strengths c1, c2 must be nonnegative")

    @property
    def s(self) -> float:
        return self.two_s / 2.0


@dataclass(frozen=True)
class DerivedConstants:
    """Per-(m, s, c1, c2) constants entering every wavefunction formula.

    m1 and m2 are the effective azimuthal indices attached to the two
    half-angle (or xi/eta) factors; delta1 and delta2 are their shifts
    relative to |m - s| and |m + s|.
    """

    two_m: int
    two_m_plus: int
    two_m_minus: int
    delta1: float
    delta2: float
    m1: float
    m2: float

    @property
    def m(self) -> float:
        return self.two_m / 2.0

    @property
    def m_plus(self) -> float:
        return self.two_m_plus / 2.0

    @property
    def m_minus(self) -> float:
        return self.two_m_minus / 2.0

    @property
    def delta_total(self) -> float:
        return self.delta1 + self.delta2


@dataclass(frozen=True)
class SphericalQN:
    """Labels (n, j, m) of a spherical bound state, stored doubled."""

    two_n: int
    two_j: int
    two_m: int


@dataclass(frozen=True)
class ParabolicQN:
    """Labels (n1, n2, m) of a parabolic bound state."""

    n1: int
    n2: int
    two_m: int


def _check_parity(params: SystemParams, two_m: int) -> None:
    if (two_m - params.two_s) % 2 != 0:
        raise QuantumNumberError(
            f"m and s must share half-integrality: two_m={two_m}, two_s={params.two_s}"
        )


def derive_constants(params: SystemParams, two_m: int) -> DerivedConstants:
    """Compute delta1, delta2, m1, m2 and the m± combinations.

    The shifts are evaluated as 4c / (sqrt((m∓s)^2 + 4c) + |m∓s|) when
    |m∓s| > 0, which avoids the cancellation of sqrt(x^2 + eps) - x for
    small c.
    """
    _check_parity(params, two_m)
    two_sum = abs(two_m + params.two_s)
    two_dif = abs(two_m - params.two_s)
    abs_m_minus_s = two_dif / 2.0
    abs_m_plus_s = two_sum / 2.0

    m1 = math.sqrt(abs_m_minus_s**2 + 4.0 * params.c1)
    m2 = math.sqrt(abs_m_plus_s**2 + 4.0 * params.c2)
    delta1 = 4.0 * params.c1 / (m1 + abs_m_minus_s) if m1 + abs_m_minus_s > 0.0 else 0.0
    delta2 = 4.0 * params.c2 / (m2 + abs_m_plus_s) if m2 + abs_m_plus_s > 0.0 else 0.0

    return DerivedConstants(
        two_m=two_m,
        two_m_plus=(two_sum + two_dif) // 2,
        two_m_minus=(two_sum - two_dif) // 2,
        delta1=delta1,
        delta2=delta2,
        m1=m1,
        m2=m2,
    )


def block_dimension(params: SystemParams, two_m: int, two_n: int) -> int:
    """Degeneracy d = n - m_plus of the (n, m) level; validates the labels."""
    dc = derive_constants(params, two_m)
    gap = two_n - dc.two_m_plus
    if gap < 2 or gap % 2 != 0:
        raise QuantumNumberError(
            f"no bound states with two_n={two_n} in the two_m={two_m} block "
            f"(need n - m_plus a positive integer, m_plus={dc.m_plus})"
        )
    return gap // 2


def spherical_qn(params: SystemParams, two_n: int, two_j: int, two_m: int) -> SphericalQN:
    """Validated spherical labels: j >= m_plus, integer steps, n > j."""
    dc = derive_constants(params, two_m)
    if two_j < dc.two_m_plus or (two_j - dc.two_m_plus) % 2 != 0:
        raise QuantumNumberError(
            f"two_j={two_j} must exceed two_m_plus={dc.two_m_plus} by an even amount"
        )
    if abs(two_m) > two_j:
        raise QuantumNumberError(f"|m| <= j violated: two_m={two_m}, two_j={two_j}")
    if two_n - two_j < 2 or (two_n - two_j) % 2 != 0:
        raise QuantumNumberError(
            f"radial quantum number n - j - 1 must be a nonnegative integer: "
            f"two_n={two_n}, two_j={two_j}"
        )
    return SphericalQN(two_n=two_n, two_j=two_j, two_m=two_m)


def parabolic_qn(params: SystemParams, n1: int, n2: int, two_m: int) -> ParabolicQN:
    """Validated parabolic labels; n1, n2 nonnegative integers."""
    _check_parity(params, two_m)
    if n1 < 0 or n2 < 0:
        raise QuantumNumberError(f"n1, n2 must be nonnegative, got ({n1}, {n2})")
    return ParabolicQN(n1=n1, n2=n2, two_m=two_m)


def principal_two_n(params: SystemParams, pq: ParabolicQN) -> int:
    """Doubled principal quantum number n = n1 + n2 + m_plus + 1."""
    dc = derive_constants(params, pq.two_m)
    return 2 * (pq.n1 + pq.n2 + 1) + dc.two_m_plus


def n_effective(params: SystemParams, two_m: int, two_n: int) -> float:
    """Effective principal number n + (delta1 + delta2)/2."""
    dc = derive_constants(params, two_m)
    block_dimension(params, two_m, two_n)
    return two_n / 2.0 + dc.delta_total / 2.0


def epsilon(n_eff: float) -> float:
    """Inverse effective principal number, epsilon = sqrt(-2E)."""
    return 1.0 / n_eff


def energy(params: SystemParams, two_m: int, two_n: int) -> float:
    """Bound-state energy -1/(2 (n + (delta1+delta2)/2)^2).

    Note the m-dependence through delta1, delta2: each azimuthal block
    carries its own energy ladder.
    """
    eps = epsilon(n_effective(params, two_m, two_n))
    return -0.5 * eps * eps


def parabolic_separation_constant(params: SystemParams, pq: ParabolicQN) -> float:
    """Eigenvalue beta = epsilon (n1 - n2 + (m1 - m2)/2) of the axial integral."""
    dc = derive_constants(params, pq.two_m)
    two_n = principal_two_n(params, pq)
    eps = epsilon(n_effective(params, pq.two_m, two_n))
    return eps * (pq.n1 - pq.n2 + 0.5 * (dc.m1 - dc.m2))


def enumerate_basis(params: SystemParams, two_m: int, two_n: int
                    ) -> tuple[list[SphericalQN], list[ParabolicQN]]:
    """The d spherical labels j = m_plus..n-1 and d parabolic labels n1 = 0..d-1."""
    dc = derive_constants(params, two_m)
    d = block_dimension(params, two_m, two_n)
    spherical = [
        SphericalQN(two_n=two_n, two_j=dc.two_m_plus + 2 * k, two_m=two_m)
        for k in range(d)
    ]
    parabolic = [
        ParabolicQN(n1=n1, n2=d - 1 - n1, two_m=two_m) for n1 in range(d)
    ]
    return spherical, parabolic


def enumerate_m_blocks(params: SystemParams, two_n: int) -> list[int]:
    """All two_m values whose (n, m) block is nonempty, ascending."""
    out = []
    for two_m in range(-(two_n - 2), two_n - 1):
        if (two_m - params.two_s) % 2 != 0:
            continue
        dc = derive_constants(params, two_m)
        gap = two_n - dc.two_m_plus
        if gap >= 2 and gap % 2 == 0:
            out.append(two_m)
    return out


def parse_half_integer(text: str) -> int:
    """Parse '3/2', '-1/2', '2', '0.5' etc. into a doubled integer."""
    frac = Fraction(text.strip())
    doubled = frac * 2
    if doubled.denominator != 1:
        raise ValueError(f"{text!r} is not an integer or half-integer")
    return int(doubled)


def format_half_integer(two_x: int) -> str:
    """Render a doubled integer as '2' or '3/2'."""
    if two_x % 2 == 0:
        return str(two_x // 2)
    return f"{two_x}/2"
