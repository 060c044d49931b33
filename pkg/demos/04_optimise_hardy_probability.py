"""How large can the final coincidence probability get?

P depends only on the source angles.  It vanishes on the line
theta1 + theta2 = pi/2 (where S1S2 = C1C2) and at the edges, and peaks on
the diagonal theta1 = theta2.

Run:  python demos/04_optimise_hardy_probability.py
"""

import math

import numpy as np

from hardysim import optimize, sweep
from hardysim.hardy import hardy_probability

# %% Coarse map of P; every 16th point is checked by full simulation.
grid = sweep(12, verify_chain="sampled")
print("P on a 12x12 grid (rows theta1, columns theta2):")
for row in grid.values:
    print("  " + " ".join(f"{v:.3f}" for v in row))
print(f"chain verified at {grid.checked.sum()} points, all hold: {bool(grid.chain_flags[grid.checked].all())}")

# %% Refine.
res = optimize(64, 1e-10)
print(f"\nmaximum P = {res.p_star:.10f} at theta1 = {res.theta1_star:.8f}, theta2 = {res.theta2_star:.8f}")
print(f"in degrees: {math.degrees(res.theta1_star):.4f}")

# %% On the diagonal P depends on p = sin^2 cos^2 alone: p^2 (1 - 4p) / (1 - 3p)^2.
p = np.linspace(1e-6, 0.25, 200001)
f = p * p * (1 - 4 * p) / (1 - 3 * p) ** 2
k = int(np.argmax(f))
print(f"1-D maximum over p: p = {p[k]:.6f}, P = {f[k]:.10f}")
print(f"closed form at the optimum: {float(hardy_probability(res.theta1_star, res.theta2_star)):.10f}")
