"""Boson evolution through a linear network, checked two ways.

Multi-photon amplitudes are permanents of submatrices of the single-particle
unitary.  For two photons the same output can be obtained by multiplying
out the two creation operators, which is how the permanent route is tested.

Run:  python demos/02_hong_ou_mandel_and_permanents.py
"""

import math

import numpy as np

from hardysim import (BeamSplitter, FockState, apply_creation, compose, element_unitary, evolve,
                      evolve_two_photon_direct, norm_sq, permanent, vacuum)
from hardysim.optics import random_network

# %% Hong-Ou-Mandel: one photon in each input of a balanced splitter.
V = element_unitary(BeamSplitter(0, 1, math.pi / 4), 2)
print("balanced splitter:\n", np.round(V, 4))
out = evolve(V, FockState.basis((1, 1)))
for occ in [(2, 0), (1, 1), (0, 2)]:
    print(f"  {occ}: {out.get(occ):.6f}")
print("the |1,1> amplitude cancels: both photons leave together")

# %% Sweep the splitting angle: the coincidence probability dips to zero at pi/4.
for theta in np.linspace(0, math.pi / 2, 7):
    V = element_unitary(BeamSplitter(0, 1, theta), 2)
    p11 = abs(evolve(V, FockState.basis((1, 1))).get((1, 1))) ** 2
    print(f"  theta={theta:.3f}  P(1,1)={p11:.4f}")

# %% Permanents: Ryser's formula against the definition.
A = np.ones((4, 4))
print("\nperm(ones(4)) =", permanent(A).real, "= 4! =", math.factorial(4))

# %% Random four-mode network: permanent route against direct expansion.
rng = np.random.default_rng(1)
V = compose(random_network(rng, 4, 12))
state = apply_creation(apply_creation(vacuum(4), 0), 2)
a, b = evolve(V, state), evolve_two_photon_direct(V, (0, 2))
print("\nmax difference between the two routes:", max(abs(a.get(k) - b.get(k)) for k in set(a) | set(b)))
print("norm after evolution:", norm_sq(a))
