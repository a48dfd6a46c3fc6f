"""Shared independent oracles used across the test modules.

Everything here deliberately avoids the code paths it is meant to check:
the supremum oracle scans a dense quantile grid, the eigenvalue oracle
discretizes the differential operator, and the quadrature oracle is scipy's
adaptive integrator.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import eigh_tridiagonal


def brute_force_weighted_sup(u_sorted: np.ndarray, a: float, b: float,
                             step: float = 1e-6) -> float:
    """Dense-grid supremum of sqrt(n) |F_hat(u) - u| / sqrt(u(1-u)) on [a, b].

    The grid is a uniform sweep of the window augmented with the jump
    locations and their immediate float predecessors, so both one-sided
    limits of the empirical cdf are sampled to machine accuracy.
    """
    u_sorted = np.asarray(u_sorted, dtype=float)
    n = u_sorted.size
    inside = u_sorted[(u_sorted >= a) & (u_sorted <= b)]
    grid = np.concatenate([
        np.arange(a, b, step), [a, b], inside,
        np.nextafter(inside, -np.inf),
    ])
    grid = grid[(grid >= a) & (grid <= b)]
    ecdf = np.searchsorted(u_sorted, grid, side="right") / n
    vals = np.abs(ecdf - grid) / np.sqrt(grid * (1.0 - grid))
    return math.sqrt(n) * float(vals.max())


def box_oscillator_levels(k: float, n_interior: int) -> np.ndarray:
    """Two smallest eigenvalues of -d^2/dz^2 + z^2/4 on [-k, k], Dirichlet.

    Central finite differences on n_interior points, eigenvalues of the
    symmetric tridiagonal matrix.
    """
    h = 2.0 * k / (n_interior + 1)
    z = -k + h * np.arange(1, n_interior + 1)
    diag = 2.0 / h ** 2 + 0.25 * z * z
    off = -np.ones(n_interior - 1) / h ** 2
    return eigh_tridiagonal(diag, off, select="i", select_range=(0, 1))[0]


def box_oscillator_levels_richardson(k: float, n_interior: int) -> np.ndarray:
    """Finite-difference levels extrapolated from n and 2n interior points.

    The two grids have step ratio r = (n+1)/(2n+1); the h^2 error term is
    eliminated exactly with that ratio.
    """
    coarse = box_oscillator_levels(k, n_interior)
    fine = box_oscillator_levels(k, 2 * n_interior)
    r = (n_interior + 1) / (2 * n_interior + 1)
    return (fine - r ** 2 * coarse) / (1.0 - r ** 2)
