"""Rayleigh-Ritz upper bounds in the basis f_j(q) = (q + q0) q^j exp(-q^2/2).

Every matrix element is a polynomial times exp(-q^2) integrated over
[-q0, inf), so it reduces exactly to the half-line Gaussian moments M_k(q0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.linalg import cholesky, eigh, solve_triangular

from .errors import IllConditioned
from .specfun import half_gaussian_moments

__all__ = [
    "MAX_BASIS",
    "MAX_CONDITION",
    "RitzProblem",
    "RitzResult",
    "basis_function",
    "overlap_matrix",
    "hamiltonian_matrix",
    "ritz_values",
]

MAX_BASIS = 20
MAX_CONDITION = 1e12


@dataclass(frozen=True)
class RitzProblem:
    basis_size: int
    q0: float

    def __post_init__(self):
        if not 1 <= self.basis_size <= MAX_BASIS:
            raise ValueError(f"basis_size must be in [1, {MAX_BASIS}], got {self.basis_size}")
        if not (math.isfinite(self.q0) and self.q0 >= 0):
            raise ValueError(f"q0 must be finite and non-negative, got {self.q0}")

    @cached_property
    def moments(self) -> np.ndarray:
        return half_gaussian_moments(2 * self.basis_size + 4, self.q0)


@dataclass(frozen=True)
class RitzResult:
    values: np.ndarray
    coefficients: np.ndarray
    overlap_condition: float


def basis_function(j: int, q0: float, q):
    """f_j(q) = (q + q0) q^j exp(-q^2/2)."""
    q = np.asarray(q, dtype=float)
    out = (q + q0) * q**j * np.exp(-0.5 * q * q)
    return out if out.ndim else float(out)


def _poly(j: int, q0: float) -> np.ndarray:
    """Coefficients (ascending powers) of (q + q0) q^j."""
    c = np.zeros(j + 2)
    c[j] = q0
    c[j + 1] = 1.0
    return c


def _dpoly(j: int, q0: float) -> np.ndarray:
    """Polynomial part of f_j': p' - q p."""
    p = _poly(j, q0)
    return P.polysub(P.polyder(p), P.polymulx(p))


def _gauss_integral(coeffs: np.ndarray, moments: np.ndarray) -> float:
    """int_{-q0}^inf poly(q) exp(-q^2) dq."""
    return float(np.dot(coeffs, moments[: len(coeffs)]))


def _overlap(p: RitzProblem) -> np.ndarray:
    n, q0, mom = p.basis_size, p.q0, p.moments
    s = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            k = i + j
            s[i, j] = s[j, i] = mom[k + 2] + 2.0 * q0 * mom[k + 1] + q0 * q0 * mom[k]
    return s


def _scaled_condition(s: np.ndarray) -> float:
    d = np.sqrt(np.diag(s))
    return float(np.linalg.cond(s / np.outer(d, d)))


def overlap_matrix(p: RitzProblem) -> np.ndarray:
    """S_ij = int f_i f_j over [-q0, inf).

    Raises
    ------
    IllConditioned
        If the condition number of S, after scaling every basis function to
        unit norm, exceeds ``MAX_CONDITION``.
    """
    s = _overlap(p)
    cond = _scaled_condition(s)
    if not cond <= MAX_CONDITION:
        raise IllConditioned(
            f"overlap condition number {cond:.3g} exceeds {MAX_CONDITION:g} "
            f"(N={p.basis_size}, q0={p.q0})"
        )
    return s


def hamiltonian_matrix(p: RitzProblem) -> np.ndarray:
    """H_ij in the symmetric form int (f_i' f_j' + q^2 f_i f_j) / 2.

    Equal to int f_i H f_j because f_j(-q0) = 0 and the Gaussian kills the
    boundary term at infinity.
    """
    n, q0, mom = p.basis_size, p.q0, p.moments
    polys = [_poly(j, q0) for j in range(n)]
    dpolys = [_dpoly(j, q0) for j in range(n)]
    h = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            kinetic = _gauss_integral(P.polymul(dpolys[i], dpolys[j]), mom)
            potential = _gauss_integral(P.polymulx(P.polymulx(P.polymul(polys[i], polys[j]))), mom)
            h[i, j] = h[j, i] = 0.5 * (kinetic + potential)
    return h


def ritz_values(p: RitzProblem) -> RitzResult:
    """All N roots of det(H - w S) = 0, ascending, with S-normalized coefficient columns."""
    s = overlap_matrix(p)
    h = hamiltonian_matrix(p)
    # power-of-two rescaling to roughly unit-norm functions, exact in floating point
    d = 2.0 ** np.round(0.5 * np.log2(np.diag(s)))
    scale = np.outer(d, d)
    # S = L L^T;  L^-1 H L^-T y = w y;  c = L^-T y
    low = cholesky(s / scale, lower=True)
    tmp = solve_triangular(low, h / scale, lower=True)
    reduced = solve_triangular(low, tmp.T, lower=True)
    reduced = 0.5 * (reduced + reduced.T)
    values, y = eigh(reduced)
    coeffs = solve_triangular(low.T, y, lower=False) / d[:, None]
    return RitzResult(values=values, coefficients=coeffs, overlap_condition=_scaled_condition(s))
