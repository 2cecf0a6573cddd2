"""Bound-state spectral analysis of the generalized MIC-Kepler system.

A charge in the field of a Dirac dyon with two ring-shaped perturbation
terms stays exactly solvable: the level (n, m) carries a d-fold
degenerate multiplet that can be organized in spherical, parabolic, or
prolate spheroidal form.  This package evaluates all three bases, the
orthogonal coefficient matrices connecting them (analytic continuations
of SU(2) Clebsch-Gordan coefficients), the spheroidal
separation-constant eigenproblem, and a quadrature harness that verifies
every identity numerically.
"""

from .qnum import (
    DerivedConstants,
    ParabolicQN,
    QuantumNumberError,
    SphericalQN,
    SystemParams,
    derive_constants,
    energy,
    enumerate_basis,
    parabolic_separation_constant,
)
from .bases import (
    ParabolicState,
    SphericalState,
    parabolic_state,
    psi_parabolic,
    psi_spherical,
    spherical_state,
)
from .interbasis import (
    ExpansionMatrix,
    clebsch_gordan_continued,
    expansion_coefficient,
    expansion_coefficient_cg,
    expansion_matrix,
    inverse_expansion_matrix,
)
from .spheroidal import SpheroidalSolution, limits, solve, sweep
from .verify import CheckReport, run_suite

__all__ = [
    "CheckReport",
    "DerivedConstants",
    "ExpansionMatrix",
    "ParabolicQN",
    "ParabolicState",
    "QuantumNumberError",
    "SphericalQN",
    "SphericalState",
    "SpheroidalSolution",
    "SystemParams",
    "clebsch_gordan_continued",
    "derive_constants",
    "energy",
    "enumerate_basis",
    "expansion_coefficient",
    "expansion_coefficient_cg",
    "expansion_matrix",
    "inverse_expansion_matrix",
    "limits",
    "parabolic_separation_constant",
    "parabolic_state",
    "psi_parabolic",
    "psi_spherical",
    "run_suite",
    "solve",
    "spherical_state",
    "sweep",
]

__version__ = "0.1.0"
