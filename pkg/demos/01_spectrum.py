"""Energy levels of an oscillator next to a hard wall.

Reproduces the two standard pictures of the model: the lowest four levels
as the wall moves away from the potential minimum, and the excitation
energies eps_{n+1} - eps_n.  Writes levels.png and gaps.png next to this
script (or into the directory given as the first argument).

    python3 demos/01_spectrum.py [outdir]
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from hardwall import WellConfig, eigenvalues, spectrum_scan  # noqa: E402

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent / "out"
out.mkdir(parents=True, exist_ok=True)

# The two limits first: wall at the minimum (odd states of the full
# oscillator survive, 2n + 3/2) and wall far away (n + 1/2).
for q0 in (0.0, 4.0):
    levels = [s.epsilon for s in eigenvalues(3, WellConfig(q0))]
    print(f"q0 = {q0}: " + "  ".join(f"{e:.8f}" for e in levels))

table = spectrum_scan(np.linspace(0.0, 4.0, 161), 3)

fig, ax = plt.subplots(figsize=(5, 4))
for n in range(4):
    ax.plot(table.q0, table.eps[:, n], label=f"n = {n}")
    ax.axhline(n + 0.5, color="0.8", lw=0.8, ls="--")
ax.set_xlabel("q0")
ax.set_ylabel("energy / hbar omega")
ax.legend()
fig.tight_layout()
fig.savefig(out / "levels.png", dpi=120)

fig, ax = plt.subplots(figsize=(5, 4))
for n in range(3):
    ax.plot(table.q0, table.gaps[:, n], label=f"eps{n + 1} - eps{n}")
ax.set_xlabel("q0")
ax.set_ylabel("gap / hbar omega")
ax.legend()
fig.tight_layout()
fig.savefig(out / "gaps.png", dpi=120)

# Gaps start at 2 (half line) and fall to 1 (free oscillator); higher
# gaps stay larger because excited states feel the wall for longer.
mid = np.searchsorted(table.q0, 1.5)
print(f"gaps at q0 = {table.q0[mid]:.3f}: {np.round(table.gaps[mid], 6)}")
print(f"figures written to {out}")
