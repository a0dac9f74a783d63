"""Exact spectrum of the harmonic oscillator with a hard wall at q = -q0.

Eigenvalues are eps = m + 1/2 where m runs over the roots of
D_m(-sqrt(2) q0) = 0.  Roots are found by scanning m on a fixed grid for
sign changes of the characteristic function and bisecting each bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._quad import gl_nodes
from .errors import DomainError, RootNotFound, UnsupportedRange
from .specfun import DEFAULT_SERIES, SQRT2, SQRT_PI, kummer_m, recip_gamma, weber_d, weber_d_prime

__all__ = [
    "Q0_MAX",
    "WellConfig",
    "EigenSolution",
    "ScanTable",
    "characteristic",
    "eigenvalue",
    "eigenvalues",
    "eigenfunction",
    "eigenfunction_prime",
    "asymptotic_epsilon0",
    "asymptotic_epsilon1",
    "spectrum_scan",
]

# Beyond this the two terms of the characteristic cancel catastrophically.
Q0_MAX = 4.0
DEFAULT_TOL = 1e-10

# Scan grid m_k = (k - 20) / 50: step 0.02 from -0.4, exact at every integer.
_SCAN_DEN = 50
_SCAN_OFFSET = 20
TAIL = 12.0


@dataclass(frozen=True)
class WellConfig:
    """Dimensionless problem: wall at q = -q0, potential minimum at q = 0."""

    q0: float

    def __post_init__(self):
        q0 = float(self.q0)
        if not math.isfinite(q0) or q0 < 0:
            raise ValueError(f"q0 must be finite and non-negative, got {self.q0}")
        object.__setattr__(self, "q0", q0)


@dataclass(frozen=True)
class EigenSolution:
    """One bound state.  ``epsilon`` is in units of hbar*omega."""

    n: int
    epsilon: float
    weber_order: float
    norm: float
    node_count: int


def _require_supported(cfg: WellConfig):
    if cfg.q0 > Q0_MAX:
        raise UnsupportedRange(
            f"q0 = {cfg.q0} > {Q0_MAX}: closed form loses its digits; "
            "use the asymptotic formulas or the finite-difference oracle"
        )


def characteristic(m: float, cfg: WellConfig) -> float:
    """Left side of the eigenvalue condition D_m(-sqrt(2) q0) = 0, up to a positive factor."""
    _require_supported(cfg)
    q0 = cfg.q0
    x = q0 * q0
    g1 = recip_gamma(0.5 * (1.0 - m))
    g2 = recip_gamma(-0.5 * m)
    first = g1 * kummer_m(-0.5 * m, 0.5, x, DEFAULT_SERIES) if g1 else 0.0
    second = 2.0 * q0 * g2 * kummer_m(0.5 * (1.0 - m), 1.5, x, DEFAULT_SERIES) if g2 and q0 else 0.0
    return first + second


def _bisect(f, lo, hi, flo, tol):
    while True:
        mid = 0.5 * (lo + hi)
        if hi - lo < tol or mid <= lo or mid >= hi:
            return mid
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid


def _roots(cfg: WellConfig, count: int, tol: float) -> list[float]:
    """Lowest ``count`` roots in m, ascending."""
    _require_supported(cfg)
    f = lambda m: characteristic(m, cfg)  # noqa: E731
    k_end = _SCAN_DEN * (2 * (count - 1) + 1) + _SCAN_OFFSET
    roots: list[float] = []
    m_prev = -_SCAN_OFFSET / _SCAN_DEN
    v_prev = f(m_prev)
    for k in range(1, k_end + 1):
        m = (k - _SCAN_OFFSET) / _SCAN_DEN
        v = f(m)
        if v == 0.0:
            roots.append(m)
        elif v_prev != 0.0 and (v > 0) != (v_prev > 0):
            roots.append(_bisect(f, m_prev, m, v_prev, tol))
        if len(roots) == count:
            return roots
        m_prev, v_prev = m, v
    raise RootNotFound(
        f"found {len(roots)} of {count} roots for q0={cfg.q0} scanning m up to {2 * count - 1}"
    )


def _count_sign_changes(values: np.ndarray) -> int:
    s = np.sign(values)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _solution(n: int, m: float, cfg: WellConfig) -> EigenSolution:
    eps = m + 0.5
    m = eps - 0.5
    nodes, weights = gl_nodes(-cfg.q0, cfg.q0 + TAIL)
    d = weber_d(m, SQRT2 * nodes)
    integral = float(np.dot(weights, d * d))
    sign = math.copysign(1.0, weber_d_prime(m, -SQRT2 * cfg.q0))
    norm = sign / math.sqrt(integral)
    q = np.linspace(-cfg.q0, cfg.q0 + 8.0, 4001)[1:]
    nodes_seen = _count_sign_changes(weber_d(m, SQRT2 * q))
    if nodes_seen != n:
        raise RootNotFound(
            f"root assigned to n={n} at q0={cfg.q0} has {nodes_seen} nodes; scan grid too coarse?"
        )
    if not (n + 0.5 < eps <= 2 * n + 1.5):
        raise RootNotFound(f"eps_{n}={eps} outside ({n + 0.5}, {2 * n + 1.5}] at q0={cfg.q0}")
    return EigenSolution(n=n, epsilon=eps, weber_order=m, norm=norm, node_count=nodes_seen)


def eigenvalue(n: int, cfg: WellConfig, tol: float = DEFAULT_TOL) -> EigenSolution:
    """The n-th bound state (n = 0 is the ground state).

    ``tol`` bounds the final bracket width in m; ``tol=0`` bisects to the
    last representable midpoint.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if tol < 0:
        raise ValueError(f"tol must be non-negative, got {tol}")
    m = _roots(cfg, n + 1, tol)[n]
    return _solution(n, m, cfg)


def eigenvalues(n_max: int, cfg: WellConfig, tol: float = DEFAULT_TOL) -> list[EigenSolution]:
    """States 0..n_max from a single scan."""
    return [_solution(n, m, cfg) for n, m in enumerate(_roots(cfg, n_max + 1, tol))]


def _check_domain(cfg, q):
    if np.any(np.asarray(q) < -cfg.q0):
        raise DomainError(f"wavefunction vanishes identically for q < -q0 = {-cfg.q0}")


def eigenfunction(sol: EigenSolution, cfg: WellConfig, q):
    """Normalized phi_n(q), with phi_n'(-q0) > 0."""
    _check_domain(cfg, q)
    return sol.norm * weber_d(sol.weber_order, SQRT2 * np.asarray(q, dtype=float))


def eigenfunction_prime(sol: EigenSolution, cfg: WellConfig, q):
    """d phi_n / dq."""
    _check_domain(cfg, q)
    return SQRT2 * sol.norm * weber_d_prime(sol.weber_order, SQRT2 * np.asarray(q, dtype=float))


def asymptotic_epsilon0(cfg: WellConfig) -> float:
    """Large-q0 ground-state energy, 1/2 + q0 exp(-q0^2) / (2 sqrt(pi))."""
    q0 = cfg.q0
    return 0.5 + q0 * math.exp(-q0 * q0) / (2.0 * SQRT_PI)


def asymptotic_epsilon1(cfg: WellConfig) -> float:
    """Large-q0 first excited energy, 3/2 + q0 (2 q0^2 - 1) exp(-q0^2) / (2 sqrt(pi))."""
    q0 = cfg.q0
    return 1.5 + q0 * (2.0 * q0 * q0 - 1.0) * math.exp(-q0 * q0) / (2.0 * SQRT_PI)


@dataclass(frozen=True)
class ScanTable:
    """Energies ``eps[i, n]`` and gaps ``gaps[i, n] = eps[i, n+1] - eps[i, n]`` over a q0 grid."""

    q0: np.ndarray
    eps: np.ndarray
    gaps: np.ndarray

    @property
    def columns(self) -> list[str]:
        n_levels = self.eps.shape[1]
        return (
            ["q0"]
            + [f"eps{n}" for n in range(n_levels)]
            + [f"gap{n}" for n in range(n_levels - 1)]
        )

    def rows(self) -> np.ndarray:
        return np.column_stack([self.q0, self.eps, self.gaps])


def spectrum_scan(q0_grid, n_max: int, tol: float = DEFAULT_TOL) -> ScanTable:
    """Eigenvalues eps_0..eps_{n_max} and their gaps at every q0 of an ascending grid."""
    grid = np.asarray(q0_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("q0_grid must be a non-empty 1-d sequence")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("q0_grid must be strictly ascending")
    if grid[0] < 0:
        raise ValueError(f"q0 must be non-negative, got {grid[0]}")
    if grid[-1] > Q0_MAX:
        raise UnsupportedRange(f"q0 = {grid[-1]} exceeds the supported maximum {Q0_MAX}")
    if not 0 <= n_max <= 6:
        raise ValueError(f"n_max must be in [0, 6], got {n_max}")
    eps = np.array([_roots(WellConfig(q0), n_max + 1, tol) for q0 in grid]) + 0.5
    return ScanTable(q0=grid, eps=eps, gaps=np.diff(eps, axis=1))
