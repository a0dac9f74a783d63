"""Exact relations that tie expectation values to the wall slope.

With a wall at -q0 the energy depends on q0 through
d eps / d q0 = -phi'(-q0)^2 / 2, and two sum rules follow:

    <D^2> + <q^2> = q0 d eps / d q0     (virial)
    <q>           = -d eps / d q0       (hypervirial)

The script evaluates each side independently and prints the residuals.

    python3 demos/04_identities.py
"""

from hardwall import WellConfig
from hardwall.identities import (
    check_boundary_derivative,
    check_hypervirial,
    check_virial,
    hermite_zero_check,
)

print(f"{'q0':>5s} {'n':>2s} {'<q>':>12s} {'virial res':>11s} {'hyper res':>11s} {'slope vs FD':>12s}")
for q0 in (0.5, 1.0, 1.55, 2.0, 3.0):
    cfg = WellConfig(q0)
    for n in range(3):
        v = check_virial(n, cfg)
        h = check_hypervirial(n, cfg)
        b = check_boundary_derivative(n, cfg)
        print(
            f"{q0:5.2f} {n:2d} {h.lhs:12.8f} {v.residual:11.2e} {h.residual:11.2e} "
            f"{b.residual / abs(b.rhs):12.2e}"
        )

# A free oscillator state cut at a node of its Hermite polynomial is itself
# an exact wall state, which gives closed-form checks of both sum rules.
print()
for n, index in [(1, 1), (2, 1), (2, 2)]:
    virial, hyper = hermite_zero_check(n, index)
    print(f"H_{n}, zero {index} (q0 = {virial.q0:+.4f}): residuals {virial.residual:.1e}, {hyper.residual:.1e}")
