"""Rayleigh-Ritz upper bounds in a wall-adapted Gaussian basis.

The basis f_j(q) = (q + q0) q^j exp(-q^2/2) vanishes at the wall, so every
Ritz value is an upper bound that can only fall as functions are added.
The printout shows w_n^[N] - eps_n shrinking with N.

    python3 demos/03_ritz.py [q0]
"""

import sys

from hardwall import IllConditioned, WellConfig, eigenvalues
from hardwall.variational import RitzProblem, ritz_values

q0 = float(sys.argv[1]) if len(sys.argv) > 1 else 1.0
exact = [s.epsilon for s in eigenvalues(2, WellConfig(q0), tol=0)]
print(f"q0 = {q0}, exact: " + "  ".join(f"{e:.10f}" for e in exact))
print(f"{'N':>3s} {'w0 - eps0':>12s} {'w1 - eps1':>12s} {'w2 - eps2':>12s} {'cond(S)':>10s}")
for size in range(1, 13):
    try:
        result = ritz_values(RitzProblem(size, q0))
    except IllConditioned as exc:
        # monomials times one Gaussian become numerically dependent
        print(f"{size:3d} stop: {exc}")
        break
    gaps = [f"{w - e:12.3e}" for w, e in zip(result.values, exact)]
    gaps += [f"{'':12s}"] * (3 - len(gaps))
    print(f"{size:3d} {' '.join(gaps)} {result.overlap_condition:10.2e}")

# At q0 = 0 the basis contains the exact half-line states, so the gaps drop
# straight to rounding level: try `python3 demos/03_ritz.py 0`.
