import numpy as np
import pytest

from mickepler.qnum import SystemParams, derive_constants, enumerate_m_blocks

# parameter grid used by the acceptance criteria: three monopole numbers,
# unperturbed and perturbed ring strengths
GRID_TWO_S = (0, 1, 2)
GRID_C = ((0.0, 0.0), (0.3, 0.7))


def grid_cases():
    return [SystemParams(two_s=ts, c1=c1, c2=c2)
            for ts in GRID_TWO_S for (c1, c2) in GRID_C]


def blocks_up_to(params, n_max, d_max=None):
    """All (two_n, two_m) blocks with n <= n_max (optionally d <= d_max)."""
    out = []
    parity = params.two_s % 2
    for two_n in range(1, int(2 * n_max) + 1):
        if two_n % 2 != parity:
            continue
        for two_m in enumerate_m_blocks(params, two_n):
            d = (two_n - derive_constants(params, two_m).two_m_plus) // 2
            if d_max is None or d <= d_max:
                out.append((two_n, two_m))
    return out


def blocks_by_dimension(params, d_values, two_m_values):
    """Blocks (two_n, two_m) with prescribed dimensions at chosen m."""
    out = []
    for two_m in two_m_values:
        if (two_m - params.two_s) % 2 != 0:
            continue
        dc = derive_constants(params, two_m)
        for d in d_values:
            out.append((dc.two_m_plus + 2 * d, two_m))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
