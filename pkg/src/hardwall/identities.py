"""Exact relations obeyed by the wall-bounded oscillator.

The boundary formula d(eps)/d(q0) = -phi'(-q0)^2 / 2 (normalized phi) ties the
energy slope to the wavefunction at the wall.  With it the virial theorem
reads <D^2> + <q^2> = q0 d(eps)/d(q0) and the hypervirial relation
<q> = -d(eps)/d(q0).  Both are checked here by quadrature.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from ._quad import gl_nodes
from .errors import InvalidZeroIndex
from .spectrum import (
    TAIL,
    EigenSolution,
    WellConfig,
    eigenfunction,
    eigenfunction_prime,
    eigenvalue,
)
from .specfun import hermite

__all__ = [
    "Observable",
    "IdentityTag",
    "IdentityReport",
    "expectation",
    "depsilon_dq0",
    "depsilon_dq0_fd",
    "check_virial",
    "check_hypervirial",
    "check_boundary_derivative",
    "hermite_zeros",
    "hermite_zero_check",
]

# Bisect roots to the last representable midpoint: the identities compare
# quantities down to ~1e-9 and the finite-difference slope divides by 2h.
ROOT_TOL = 0.0
FD_STEP = 1e-4


class Observable(enum.Enum):
    Q = "q"
    Q2 = "q2"
    D2 = "D2"


class IdentityTag(enum.Enum):
    VIRIAL = "Virial"
    HYPERVIRIAL = "Hypervirial"
    BOUNDARY_DERIVATIVE = "BoundaryDerivative"


@dataclass(frozen=True)
class IdentityReport:
    n: int
    q0: float
    lhs: float
    rhs: float
    identity_tag: IdentityTag
    residual: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "residual", abs(self.lhs - self.rhs))


def expectation(sol: EigenSolution, cfg: WellConfig, observable: Observable) -> float:
    """<q>, <q^2> or <D^2> for one state, by Gauss-Legendre on [-q0, q0 + 12].

    <D^2> is evaluated as -int phi'^2, the boundary term vanishing at the wall.
    """
    q, w = gl_nodes(-cfg.q0, cfg.q0 + TAIL)
    phi = eigenfunction(sol, cfg, q)
    norm2 = float(np.dot(w, phi * phi))
    observable = Observable(observable)
    if observable is Observable.Q:
        num = np.dot(w, q * phi * phi)
    elif observable is Observable.Q2:
        num = np.dot(w, q * q * phi * phi)
    else:
        dphi = eigenfunction_prime(sol, cfg, q)
        num = -np.dot(w, dphi * dphi)
    return float(num) / norm2


def _slope(sol: EigenSolution, cfg: WellConfig) -> float:
    wall = eigenfunction_prime(sol, cfg, -cfg.q0)
    return -0.5 * wall * wall


def depsilon_dq0(n: int, cfg: WellConfig) -> float:
    """Energy slope from the wavefunction derivative at the wall; always negative."""
    return _slope(eigenvalue(n, cfg, tol=ROOT_TOL), cfg)


def depsilon_dq0_fd(n: int, cfg: WellConfig, h: float = FD_STEP) -> float:
    """Central finite difference of eps_n(q0).  Needs q0 >= h."""
    if cfg.q0 < h:
        raise ValueError(f"q0 = {cfg.q0} too close to 0 for a central difference with h = {h}")
    up = eigenvalue(n, WellConfig(cfg.q0 + h), tol=ROOT_TOL).epsilon
    down = eigenvalue(n, WellConfig(cfg.q0 - h), tol=ROOT_TOL).epsilon
    return (up - down) / (2.0 * h)


def check_virial(n: int, cfg: WellConfig) -> IdentityReport:
    """<D^2> + <q^2> against q0 d(eps)/d(q0)."""
    sol = eigenvalue(n, cfg, tol=ROOT_TOL)
    lhs = expectation(sol, cfg, Observable.D2) + expectation(sol, cfg, Observable.Q2)
    rhs = cfg.q0 * _slope(sol, cfg)
    return IdentityReport(n, cfg.q0, lhs, rhs, IdentityTag.VIRIAL)


def check_hypervirial(n: int, cfg: WellConfig) -> IdentityReport:
    """<q> against -d(eps)/d(q0)."""
    sol = eigenvalue(n, cfg, tol=ROOT_TOL)
    return IdentityReport(
        n, cfg.q0, expectation(sol, cfg, Observable.Q), -_slope(sol, cfg), IdentityTag.HYPERVIRIAL
    )


def check_boundary_derivative(n: int, cfg: WellConfig, h: float = FD_STEP) -> IdentityReport:
    """Wall-derivative slope (lhs) against the finite-difference slope (rhs)."""
    return IdentityReport(
        n, cfg.q0, depsilon_dq0(n, cfg), depsilon_dq0_fd(n, cfg, h), IdentityTag.BOUNDARY_DERIVATIVE
    )


def hermite_zeros(n: int) -> np.ndarray:
    """Zeros of H_n in ascending order."""
    if n < 1:
        raise InvalidZeroIndex(f"H_{n} has no zeros")
    coef = np.zeros(n + 1)
    coef[-1] = 1.0
    return np.sort(np.polynomial.hermite.hermroots(coef))


def hermite_zero_check(n: int, zero_index: int) -> tuple[IdentityReport, IdentityReport]:
    """Check the wall identities on a free oscillator state cut at one of its nodes.

    The Hermite function H_n(x) exp(-x^2/2) vanishes at every zero b of H_n, so
    restricted to [b, inf) it is an exact eigenstate (energy n + 1/2) of the
    oscillator with a wall at b.  Returns the reports for

    * virial:  int phi [H, x D] phi = -b phi'(b)^2 / 2, with [H, x D] = -D^2 - x^2,
    * hypervirial:  int phi^2 x = phi'(b)^2 / 2.

    ``zero_index`` counts the zeros of H_n from 1, in ascending order.
    The reports carry ``q0 = -b``.
    """
    zeros = hermite_zeros(n)
    if not 1 <= zero_index <= n:
        raise InvalidZeroIndex(f"H_{n} has zeros 1..{n}, got index {zero_index}")
    b = float(zeros[zero_index - 1])
    x, w = gl_nodes(b, max(b, 0.0) + TAIL)
    gauss = np.exp(-0.5 * x * x)
    h = hermite(n, x)
    dh = 2 * n * hermite(n - 1, x)
    d2h = 4 * n * (n - 1) * hermite(n - 2, x) if n >= 2 else np.zeros_like(x)
    phi = h * gauss
    norm = 1.0 / np.sqrt(np.dot(w, phi * phi))
    phi = norm * phi
    d2phi = norm * (d2h - 2 * x * dh + (x * x - 1) * h) * gauss
    wall_slope = norm * 2 * n * hermite(n - 1, b) * np.exp(-0.5 * b * b)

    commutator = float(np.dot(w, phi * (-d2phi - x * x * phi)))
    virial = IdentityReport(n, -b, commutator, -0.5 * b * wall_slope**2, IdentityTag.VIRIAL)
    force = float(np.dot(w, phi * phi * x))
    hyper = IdentityReport(n, -b, force, 0.5 * wall_slope**2, IdentityTag.HYPERVIRIAL)
    return virial, hyper
