"""Grid enumeration and integer-only level computation for large sweeps.

The exact Fraction pipeline is the source of truth but too slow for grids
like p, q <= 60 with every acting label.  fast_level computes the same
level N purely over machine integers: with M = 48 p q the exponents are
r_j = x_j / M for

    x_j = 12 (n_j p - m_j q)^2 - (n p - m q)^2 + (p - q)^2 - 2 p q,

so N = lcm_j (M / gcd(x_j, M)) = M / gcd(M, gcd_j x_j).  The test suite
cross-validates fast_level against the Fraction route on a subgrid.
"""

from math import gcd

import numpy as np

from .core import MinimalModel, ModuleLabel


def models(p_max, q_max):
    """All minimal models (p odd, q) with p <= p_max, q <= q_max."""
    for p in range(3, p_max + 1, 2):
        for q in range(2, q_max + 1):
            if q != p and gcd(p, q) == 1:
                yield MinimalModel(p, q)


def acting_labels(p, q):
    """Labels (m, n) with both indices odd, in (m, n) order."""
    for m in range(1, p, 2):
        for n in range(1, q, 2):
            yield ModuleLabel(m, n)


def canonical_labels(p, q):
    """All canonical labels (m odd, any n), in (m, n) order."""
    for m in range(1, p, 2):
        for n in range(1, q):
            yield ModuleLabel(m, n)


def fast_level(p, q, m, n):
    """Level of rho_{m,n} over machine integers (no Fractions)."""
    big = 48 * p * q
    k0 = -((n * p - m * q) ** 2) + (p - q) ** 2 - 2 * p * q
    mj = np.arange((p + 1) // 2, p - (m + 1) // 2 + 1, dtype=np.int64) * q
    nj = np.arange((n + 1) // 2, q - (n + 1) // 2 + 1, dtype=np.int64) * p
    a = nj[:, None] - mj[None, :]
    x = 12 * a * a + k0
    g = int(np.gcd.reduce(np.abs(x), axis=None))
    return big // gcd(big, g)
