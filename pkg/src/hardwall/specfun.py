"""Special functions for the hard-wall oscillator.

Everything here works in double precision.  The Weber function is built
from two Kummer series; for large positive argument that combination loses
all its digits to cancellation, so the decaying branch is continued there
by Taylor-stepping the Weber equation inward from an asymptotic start.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NonConvergence

__all__ = [
    "SeriesControl",
    "DEFAULT_SERIES",
    "recip_gamma",
    "erf",
    "kummer_m",
    "weber_d",
    "weber_d_prime",
    "hermite",
    "half_gaussian_moment",
    "half_gaussian_moments",
]

SQRT_PI = math.sqrt(math.pi)
SQRT2 = math.sqrt(2.0)

# Above Z_SERIES the two Kummer terms cancel to worse than ~1e-14 relative.
Z_SERIES = 3.0
# At and beyond Z_ASYM the large-z expansion is accurate to machine precision
# for the orders used here (m <= ~20).
Z_ASYM = 16.0
_STEP = 0.25
_TAYLOR_TERMS = 32


@dataclass(frozen=True)
class SeriesControl:
    """Truncation settings for the Kummer series."""

    rel_tol: float = 1e-15
    max_terms: int = 500

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_SERIES = SeriesControl()


def recip_gamma(x: float) -> float:
    """Reciprocal gamma function 1/Gamma(x).

    Exactly zero at the poles of Gamma (x = 0, -1, -2, ...), which the
    characteristic equation relies on at q0 = 0.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"recip_gamma needs a finite argument, got {x}")
    if x <= 0.0 and x == math.floor(x):
        return 0.0
    if x > 171.0:
        return 0.0
    return 1.0 / math.gamma(x)


def erf(x: float) -> float:
    """Error function."""
    return math.erf(x)


def kummer_m(a: float, c: float, z, ctl: SeriesControl = DEFAULT_SERIES):
    """Kummer's confluent hypergeometric function M(a, c, z) by its power series.

    ``z`` may be a scalar or an array.  The sum stops once the latest term is
    below ``ctl.rel_tol`` times the partial sum and the terms are past the
    region where they can still grow.  A non-positive integer ``a`` gives a
    polynomial and the sum ends exactly.

    Raises
    ------
    NonConvergence
        If ``ctl.max_terms`` terms were summed without meeting the criterion.
    """
    if c <= 0 and c == math.floor(c):
        raise ValueError(f"c must not be a non-positive integer, got {c}")
    if np.ndim(z) == 0:
        return _kummer_scalar(a, c, float(z), ctl)
    zz = np.asarray(z, dtype=float)
    zmax = float(np.max(np.abs(zz))) if zz.size else 0.0
    term = np.ones_like(zz)
    total = np.ones_like(zz)
    for k in range(ctl.max_terms):
        if a + k == 0.0:
            break
        term = term * ((a + k) / (c + k)) * zz / (k + 1)
        total = total + term
        past_hump = a + k + 1 > 0 and k + 1 >= 2.0 * zmax
        if past_hump and np.all(np.abs(term) <= ctl.rel_tol * np.abs(total)):
            break
    else:
        raise NonConvergence(
            f"Kummer series M({a}, {c}, z<={zmax}) not converged in {ctl.max_terms} terms"
        )
    return total


def _kummer_scalar(a, c, z, ctl):
    term = total = 1.0
    zabs = abs(z)
    for k in range(ctl.max_terms):
        if a + k == 0.0:
            return total
        term *= (a + k) / (c + k) * z / (k + 1)
        total += term
        if a + k + 1 > 0 and k + 1 >= 2.0 * zabs and abs(term) <= ctl.rel_tol * abs(total):
            return total
    raise NonConvergence(f"Kummer series M({a}, {c}, {z}) not converged in {ctl.max_terms} terms")


def _kummer_pieces(m, z, ctl):
    """Prefactor and the two bracketed pieces of the Weber combination."""
    x = 0.5 * z * z
    g1 = recip_gamma(0.5 * (1.0 - m))
    g2 = recip_gamma(-0.5 * m)
    pref = 2.0 ** (0.5 * m) * SQRT_PI * np.exp(-0.25 * z * z)
    f1 = kummer_m(-0.5 * m, 0.5, x, ctl) if g1 else np.zeros_like(z)
    f2 = kummer_m(0.5 * (1.0 - m), 1.5, x, ctl) if g2 else np.zeros_like(z)
    return x, g1, g2, pref, f1, f2


def _weber_series(m, z, ctl):
    _, g1, g2, pref, f1, f2 = _kummer_pieces(m, z, ctl)
    return pref * (g1 * f1 - SQRT2 * z * g2 * f2)


def _weber_series_prime(m, z, ctl):
    x, g1, g2, pref, f1, f2 = _kummer_pieces(m, z, ctl)
    a1, a2 = -0.5 * m, 0.5 * (1.0 - m)
    bracket = g1 * f1 - SQRT2 * z * g2 * f2
    # d/dz M(a, c, z^2/2) = z (a/c) M(a+1, c+1, z^2/2)
    d1 = g1 * z * (a1 / 0.5) * kummer_m(a1 + 1.0, 1.5, x, ctl) if g1 else 0.0
    d2 = 0.0
    if g2:
        d2 = SQRT2 * g2 * (f2 + z * z * (a2 / 1.5) * kummer_m(a2 + 1.0, 2.5, x, ctl))
    return pref * (-0.5 * z * bracket + d1 - d2)


def _weber_asymptotic(m, z):
    """Large-z expansion of D_m and its derivative, z >= Z_ASYM."""
    z = np.asarray(z, dtype=float)
    inv = 1.0 / (2.0 * z * z)
    term = np.ones_like(z)
    s = np.ones_like(z)
    ds = np.zeros_like(z)  # z * dS/dz
    for k in range(200):
        ratio = -(m - 2 * k) * (m - 2 * k - 1) / (k + 1)
        new = term * ratio * inv
        if ratio == 0.0:
            break
        if np.any(np.abs(new) > np.abs(term)) and k > 0:
            # asymptotic series started to diverge; smallest term is the error
            if np.any(np.abs(term) > 1e-15 * np.abs(s)):
                raise NonConvergence(f"asymptotic Weber expansion too coarse for m={m}")
            break
        term = new
        s = s + term
        ds = ds - 2.0 * (k + 1) * term
        if np.all(np.abs(term) <= 1e-17 * np.abs(s)):
            break
    base = z**m * np.exp(-0.25 * z * z)
    d = base * s
    dp = d * (m / z - 0.5 * z) + base * ds / z
    return d, dp


@lru_cache(maxsize=128)
def _taylor_table(m: float):
    """Taylor coefficients of the decaying Weber solution on nodes from Z_ASYM down to Z_SERIES."""
    n_nodes = int(round((Z_ASYM - Z_SERIES) / _STEP)) + 1
    nodes = Z_ASYM - _STEP * np.arange(n_nodes)
    coeffs = np.empty((n_nodes, _TAYLOR_TERMS))
    d, dp = _weber_asymptotic(m, np.array(Z_ASYM))
    d, dp = float(d), float(dp)
    for i, z0 in enumerate(nodes):
        a = coeffs[i]
        a[0], a[1] = d, dp
        c0 = 0.25 * z0 * z0 - m - 0.5
        for k in range(_TAYLOR_TERMS - 2):
            acc = c0 * a[k]
            if k >= 1:
                acc += 0.5 * z0 * a[k - 1]
            if k >= 2:
                acc += 0.25 * a[k - 2]
            a[k + 2] = acc / ((k + 1) * (k + 2))
        if i + 1 < n_nodes:
            t = -_STEP
            powers = t ** np.arange(_TAYLOR_TERMS)
            d = float(np.dot(a, powers))
            dp = float(np.dot(a[1:] * np.arange(1, _TAYLOR_TERMS), powers[:-1]))
    return nodes, coeffs


def _weber_stepped(m, z):
    nodes, coeffs = _taylor_table(float(m))
    idx = np.clip(np.rint((Z_ASYM - z) / _STEP).astype(int), 0, len(nodes) - 1)
    t = z - nodes[idx]
    c = coeffs[idx]
    d = c[:, -1].copy()
    dp = (_TAYLOR_TERMS - 1) * c[:, -1]
    for k in range(_TAYLOR_TERMS - 2, -1, -1):
        d = d * t + c[:, k]
        if k >= 1:
            dp = dp * t + k * c[:, k]
    return d, dp


def _weber(m, z, ctl, want_prime):
    zz = np.asarray(z, dtype=float)
    flat = np.atleast_1d(zz).ravel()
    out = np.empty_like(flat)
    low = flat <= Z_SERIES
    high = flat >= Z_ASYM
    mid = ~low & ~high
    if np.any(low):
        f = _weber_series_prime if want_prime else _weber_series
        out[low] = f(m, flat[low], ctl)
    if np.any(mid):
        d, dp = _weber_stepped(m, flat[mid])
        out[mid] = dp if want_prime else d
    if np.any(high):
        d, dp = _weber_asymptotic(m, flat[high])
        out[high] = dp if want_prime else d
    if zz.ndim == 0:
        return float(out[0])
    return out.reshape(zz.shape)


def weber_d(m: float, z, ctl: SeriesControl = DEFAULT_SERIES):
    """Parabolic cylinder function D_m(z) for real order and argument.

    For ``z <= 3`` (all negative arguments included) this is the two-term
    Kummer representation

        D_m(z) = 2^{m/2} sqrt(pi) e^{-z^2/4} [ M(-m/2, 1/2, z^2/2) / Gamma((1-m)/2)
                 - sqrt(2) z M((1-m)/2, 3/2, z^2/2) / Gamma(-m/2) ].

    Larger ``z`` continues the same (decaying) solution of the Weber equation
    by Taylor steps started from its large-z expansion.

    Parameters
    ----------
    m : float
        Order.  Intended range is -1/2 < m <= ~20.
    z : float or array_like
        Argument.
    ctl : SeriesControl
        Truncation of the Kummer series.
    """
    return _weber(float(m), z, ctl, want_prime=False)


def weber_d_prime(m: float, z, ctl: SeriesControl = DEFAULT_SERIES):
    """Derivative dD_m/dz, differentiating the Kummer pieces term by term."""
    return _weber(float(m), z, ctl, want_prime=True)


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    x = np.asarray(x, dtype=float)
    h_prev, h = np.ones_like(x), 2.0 * x
    if n == 0:
        h = h_prev
    for k in range(1, n):
        h_prev, h = h, 2.0 * x * h - 2.0 * k * h_prev
    return h if x.ndim else float(h)


def half_gaussian_moments(n_max: int, q0: float) -> np.ndarray:
    """Moments M_k(q0) = int_{-q0}^inf q^k exp(-q^2) dq for k = 0..n_max.

    Uses upward recursion from M_0 and M_1; the boundary term comes from
    integrating by parts against q exp(-q^2).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    q0 = float(q0)
    w = math.exp(-q0 * q0)
    moments = np.empty(n_max + 1)
    moments[0] = 0.5 * SQRT_PI * (1.0 + math.erf(q0))
    if n_max >= 1:
        moments[1] = 0.5 * w
    for n in range(2, n_max + 1):
        moments[n] = 0.5 * (-q0) ** (n - 1) * w + 0.5 * (n - 1) * moments[n - 2]
    return moments


def half_gaussian_moment(n: int, q0: float) -> float:
    """Single moment M_n(q0); see :func:`half_gaussian_moments`."""
    return float(half_gaussian_moments(n, q0)[n])
