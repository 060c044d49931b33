"""Simulation of Hardy nonlocality with two independent photon sources."""

from .fock import FockState, apply_creation, inner_product, norm_sq, vacuum
from .hardy import (CanonicalCase, DetectorSetting, Event, HardyAngles, HardyReport,
                    build_network, canonical_setting, closed_form_P, conditional_probability,
                    event_probability, hardy_probability, hardy_report, input_state,
                    output_state, psi_split, tau, tau_prime)
from .lhv import (ChainConstraints, LocalStrategy, enumerate_satisfying, lhv_max_case_d,
                  satisfies)
from .optics import (BeamSplitter, InterferometerNetwork, PhaseShifter, compose,
                     element_unitary, evolve, evolve_two_photon_direct, permanent)
from .optimize import OptimumResult, SweepGrid, optimize, sweep

__version__ = "0.1.0"
