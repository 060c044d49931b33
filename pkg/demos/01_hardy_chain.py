"""The Hardy chain, step by step, at theta1 = theta2 = pi/3.

Two photons from independent sources enter modes a and c.  Each source
beam splitter leaks its photon towards both detectors, and the detector
beam splitters are tuned (tau, tau') so that three of the four settings give
all-or-nothing predictions while the fourth leaves a small positive
probability.

Run:  python demos/01_hardy_chain.py
"""

import math

from hardysim import (CanonicalCase, Event, HardyAngles, canonical_setting, closed_form_P,
                      conditional_probability, event_probability, hardy_report, norm_sq,
                      output_state, psi_split, tau, tau_prime)
from hardysim.hardy import OUTPUT_MODES

angles = HardyAngles(math.pi / 3, math.pi / 3)
print(f"S1S2 = {angles.ss:.4f}, C1C2 = {angles.cc:.4f}")
print(f"tau = {tau(angles):.6f}, tau' = {tau_prime(angles):.6f}  (1/sqrt(28) = {1 / math.sqrt(28):.6f})")

# %% Coincidence amplitudes for each canonical setting.
# The output modes are read as g=0, e=1, f=2, h=3.
label = {v: k for k, v in OUTPUT_MODES.items()}


def describe(occ):
    return "".join(label[m] * n for m, n in enumerate(occ))


for case in CanonicalCase:
    setting = canonical_setting(case, angles)
    state = output_state(angles, setting)
    psi1, psi2 = psi_split(state)
    print(f"\ncase {case.value}: S3={setting.S3:.4f} phi3={setting.phi3:.4f} "
          f"S4={setting.S4:.4f} phi4={setting.phi4:.4f}")
    print(f"  |psi1|^2 = {norm_sq(psi1):.4f}, |psi2|^2 = {norm_sq(psi2):.4f}, total {norm_sq(state):.15f}")
    for occ, amp in sorted(psi1.items(), key=lambda kv: describe(kv[0])):
        print(f"  |{describe(occ)}>  {amp.real:+.6f} {amp.imag:+.6f}i")

# %% The four probabilities that make up the chain.
state_a = output_state(angles, canonical_setting("A", angles))
state_b = output_state(angles, canonical_setting("B", angles))
state_c = output_state(angles, canonical_setting("C", angles))
state_d = output_state(angles, canonical_setting("D", angles))
print()
print("A: P(F and G)   =", event_probability(state_a, Event.F_bar, Event.G_bar))
print("B: P(F | G)     =", conditional_probability(state_b, Event.F_bar, Event.G_bar))
print("C: P(G | F)     =", conditional_probability(state_c, Event.G_bar, Event.F_bar))
print("D: P(F and G)   =", event_probability(state_d, Event.F_bar, Event.G_bar))
print("closed form     =", closed_form_P(angles), " 9/196 =", 9 / 196)

# %% Same thing in one call.
print()
print(hardy_report(angles))
