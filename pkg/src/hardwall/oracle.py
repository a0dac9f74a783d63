"""Brute-force eigenvalues from a second-order finite-difference Hamiltonian.

Deliberately independent of the special-function path: a uniform grid on
[-q0, q_max] with Dirichlet ends, a symmetric tridiagonal matrix, and
Sturm-sequence bisection for the lowest few eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import GridTooCoarse
from .spectrum import WellConfig

__all__ = [
    "GridSpec",
    "default_grid",
    "fd_hamiltonian",
    "fd_eigenvalues",
    "fd_states",
    "fd_eigenvalues_richardson",
]

DEFAULT_POINTS = 4000
DEFAULT_SPAN = 12.0
# |E_h - E_{h/2}| above this means the grid does not resolve the state at all.
REFINEMENT_TOL = 1e-2


@dataclass(frozen=True)
class GridSpec:
    """Interior points of a uniform grid; spacing h = (q_max - q_min) / (points + 1)."""

    q_min: float
    q_max: float
    points: int

    def __post_init__(self):
        if self.points < 200:
            raise ValueError(f"need at least 200 interior points, got {self.points}")
        if self.q_max < -self.q_min + 8.0:
            raise ValueError(f"q_max = {self.q_max} must be at least q0 + 8 = {-self.q_min + 8.0}")

    @property
    def h(self) -> float:
        return (self.q_max - self.q_min) / (self.points + 1)

    def nodes(self) -> np.ndarray:
        return self.q_min + self.h * np.arange(1, self.points + 1)

    def refined(self) -> GridSpec:
        """Same interval, half the spacing."""
        return GridSpec(self.q_min, self.q_max, 2 * self.points + 1)


def default_grid(cfg: WellConfig, points: int = DEFAULT_POINTS) -> GridSpec:
    return GridSpec(-cfg.q0, cfg.q0 + DEFAULT_SPAN, points)


def fd_hamiltonian(grid: GridSpec):
    """Diagonal and off-diagonal of -1/2 d^2/dq^2 + q^2/2 on the grid."""
    h = grid.h
    q = grid.nodes()
    diag = 1.0 / h**2 + 0.5 * q * q
    off = np.full(grid.points - 1, -0.5 / h**2)
    return diag, off


def _check(cfg, grid):
    if grid.q_min != -cfg.q0:
        raise ValueError(f"grid starts at {grid.q_min}, wall is at {-cfg.q0}")


def fd_eigenvalues(cfg: WellConfig, n_max: int, grid: GridSpec | None = None) -> np.ndarray:
    """Lowest n_max + 1 eigenvalues of the finite-difference Hamiltonian."""
    grid = grid or default_grid(cfg)
    _check(cfg, grid)
    diag, off = fd_hamiltonian(grid)
    return eigh_tridiagonal(
        diag, off, eigvals_only=True, select="i", select_range=(0, n_max), lapack_driver="stebz"
    )


def fd_states(cfg: WellConfig, n_max: int, grid: GridSpec | None = None):
    """Eigenvalues and grid eigenvectors (one column per state)."""
    grid = grid or default_grid(cfg)
    _check(cfg, grid)
    diag, off = fd_hamiltonian(grid)
    return eigh_tridiagonal(diag, off, select="i", select_range=(0, n_max), lapack_driver="stebz")


def fd_eigenvalues_richardson(
    cfg: WellConfig, n_max: int, points: int = DEFAULT_POINTS
) -> np.ndarray:
    """Richardson-extrapolated eigenvalues, (4 E_{h/2} - E_h) / 3.

    Works for any q0 >= 0, including walls too far out for the closed form.

    Raises
    ------
    GridTooCoarse
        If the two resolutions disagree by more than ``REFINEMENT_TOL``.
    """
    coarse = default_grid(cfg, points)
    e_h = fd_eigenvalues(cfg, n_max, coarse)
    e_h2 = fd_eigenvalues(cfg, n_max, coarse.refined())
    jump = float(np.max(np.abs(e_h2 - e_h)))
    if jump > REFINEMENT_TOL:
        raise GridTooCoarse(f"refinement changed eigenvalues by {jump:.3g} (points={points})")
    return (4.0 * e_h2 - e_h) / 3.0
