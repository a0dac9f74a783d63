"""Zero-point energy of hydrogen and deuterium on Pd(100).

An adsorbed atom vibrates in a roughly harmonic well, but the surface acts
as a hard wall a short distance d from the minimum.  The dimensionless wall
position q0 = d (k m / hbar^2)^(1/4) decides how much the wall raises the
zero-point energy above hbar omega / 2.

    python3 demos/02_adsorption.py
"""

import numpy as np

from hardwall.physical import (
    PRESETS,
    AdsorptionSystem,
    dimensionless,
    zero_point_energy,
)

print(f"{'system':10s} {'q0':>7s} {'eps0':>9s} {'E0 (meV)':>10s} {'hbar w/2 (meV)':>15s}")
for label, system in PRESETS.items():
    form = dimensionless(system)
    zpe = zero_point_energy(system)
    half = 0.5 * zpe.E0_meV / zpe.epsilon0
    print(f"{label:10s} {form.q0:7.4f} {zpe.epsilon0:9.6f} {zpe.E0_meV:10.3f} {half:15.3f}")

# The heavier isotope sits further from the wall in natural units, so its
# zero-point energy is closer to the free-oscillator value.
print()
print("hydrogen, sweeping the wall distance:")
for d in np.arange(0.1, 0.81, 0.1):
    system = AdsorptionSystem.from_lab_units(1.00784, 15.0, d)
    zpe = zero_point_energy(system)
    print(f"  d = {d:.1f} A  q0 = {dimensionless(system).q0:6.3f}  eps0 = {zpe.epsilon0:.6f}")
