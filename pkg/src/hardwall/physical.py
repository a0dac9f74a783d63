"""Physical adsorption parameters and their dimensionless wall position.

An atom of mass m in a harmonic well of force constant k whose minimum sits
a distance d from a hard wall maps onto the dimensionless problem through
the length L = (hbar^2 / (k m))^(1/4), the frequency omega = sqrt(k / m) and
q0 = d / L.  Energies come out in units of hbar*omega.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import UnsupportedRange
from .oracle import fd_eigenvalues_richardson
from .spectrum import Q0_MAX, WellConfig, eigenvalue

__all__ = [
    "HBAR",
    "ATOMIC_MASS_UNIT",
    "ELECTRON_VOLT",
    "ANGSTROM",
    "CONSTANTS",
    "AdsorptionSystem",
    "DimensionlessForm",
    "ZeroPointEnergy",
    "PRESETS",
    "preset",
    "dimensionless",
    "wall_distance_from_q0",
    "zero_point_energy",
]

# CODATA 2018
HBAR = 1.054571817e-34  # J s
ATOMIC_MASS_UNIT = 1.66053906660e-27  # kg
ELECTRON_VOLT = 1.602176634e-19  # J
ANGSTROM = 1e-10  # m

CONSTANTS = {
    "source": "CODATA 2018",
    "hbar_J_s": HBAR,
    "atomic_mass_unit_kg": ATOMIC_MASS_UNIT,
    "electron_volt_J": ELECTRON_VOLT,
}


@dataclass(frozen=True)
class AdsorptionSystem:
    """SI parameters: mass (kg), force constant (N/m), wall-to-minimum distance (m)."""

    mass: float
    force_constant: float
    wall_distance: float
    label: str = ""

    def __post_init__(self):
        if not self.mass > 0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if not self.force_constant > 0:
            raise ValueError(f"force constant must be positive, got {self.force_constant}")
        if not self.wall_distance >= 0:
            raise ValueError(f"wall distance must be non-negative, got {self.wall_distance}")

    @classmethod
    def from_lab_units(cls, mass_amu: float, k_npm: float, d_angstrom: float, label: str = ""):
        return cls(mass_amu * ATOMIC_MASS_UNIT, k_npm, d_angstrom * ANGSTROM, label)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DimensionlessForm:
    length_unit_L: float  # m
    omega: float  # rad/s
    q0: float
    energy_unit: float  # J, hbar*omega


@dataclass(frozen=True)
class ZeroPointEnergy:
    epsilon0: float  # hbar*omega
    E0_joule: float
    E0_meV: float


PRESETS = {
    "H-Pd100": AdsorptionSystem.from_lab_units(1.00784, 15.0, 0.40, "H-Pd100"),
    "D-Pd100": AdsorptionSystem.from_lab_units(2.01410, 15.0, 0.45, "D-Pd100"),
}


def preset(label: str) -> AdsorptionSystem:
    try:
        return PRESETS[label]
    except KeyError:
        raise KeyError(f"unknown preset {label!r}; known: {', '.join(PRESETS)}") from None


def dimensionless(sys: AdsorptionSystem) -> DimensionlessForm:
    length = (HBAR * HBAR / (sys.force_constant * sys.mass)) ** 0.25
    omega = math.sqrt(sys.force_constant / sys.mass)
    return DimensionlessForm(
        length_unit_L=length,
        omega=omega,
        q0=sys.wall_distance / length,
        energy_unit=HBAR * omega,
    )


def wall_distance_from_q0(form: DimensionlessForm) -> float:
    """Inverse map d = q0 L."""
    return form.q0 * form.length_unit_L


def zero_point_energy(sys: AdsorptionSystem) -> ZeroPointEnergy:
    """Ground-state energy of the adsorbed atom.

    Walls beyond the closed-form range fall back to the finite-difference
    solver.
    """
    form = dimensionless(sys)
    cfg = WellConfig(form.q0)
    try:
        eps0 = eigenvalue(0, cfg).epsilon
    except UnsupportedRange:
        if form.q0 <= Q0_MAX:
            raise
        eps0 = float(fd_eigenvalues_richardson(cfg, 0)[0])
    e0 = eps0 * form.energy_unit
    return ZeroPointEnergy(epsilon0=eps0, E0_joule=e0, E0_meV=1e3 * e0 / ELECTRON_VOLT)
