"""Quantum harmonic oscillator bounded by a hard wall.

A particle in the potential q^2/2 with an impenetrable wall at q = -q0: a
one-dimensional model of an atom adsorbed on a surface.
"""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DomainError,
    GridTooCoarse,
    HardWallError,
    IllConditioned,
    InvalidZeroIndex,
    NonConvergence,
    RootNotFound,
    UnsupportedRange,
)
from .spectrum import (  # noqa: E402
    EigenSolution,
    WellConfig,
    asymptotic_epsilon0,
    asymptotic_epsilon1,
    characteristic,
    eigenfunction,
    eigenvalue,
    eigenvalues,
    spectrum_scan,
)

__all__ = [
    "DomainError",
    "EigenSolution",
    "GridTooCoarse",
    "HardWallError",
    "IllConditioned",
    "InvalidZeroIndex",
    "NonConvergence",
    "RootNotFound",
    "UnsupportedRange",
    "WellConfig",
    "asymptotic_epsilon0",
    "asymptotic_epsilon1",
    "characteristic",
    "eigenfunction",
    "eigenvalue",
    "eigenvalues",
    "spectrum_scan",
]
