"""Exceptions raised by hardwall."""


class HardWallError(Exception):
    """Base class for all package errors."""


class NonConvergence(HardWallError, ArithmeticError):
    """A series did not meet its truncation criterion within ``max_terms``."""


class UnsupportedRange(HardWallError, ValueError):
    """Wall position outside the range where the closed form is trustworthy."""


class RootNotFound(HardWallError, ArithmeticError):
    """The root scan found fewer sign changes than requested."""


class DomainError(HardWallError, ValueError):
    """Evaluation requested outside the physical domain q >= -q0."""


class IllConditioned(HardWallError, ArithmeticError):
    """Overlap matrix too close to singular for a reliable Ritz solve."""


class GridTooCoarse(HardWallError, ArithmeticError):
    """Finite-difference refinement disagrees beyond tolerance."""


class InvalidZeroIndex(HardWallError, ValueError):
    """Requested Hermite zero does not exist."""
