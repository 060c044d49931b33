"""Two independent photon sources, four beam splitters: the Hardy chain.

Mode map of the apparatus.  Inputs ``a, b, c, d`` are modes 0-3; source 1
feeds ``a`` and source 2 feeds ``c`` while ``b`` and ``d`` carry vacuum.  After
the detector beam splitters the same four modes are read as counters::

    g = 0, e = 1, f = 2, h = 3

Detector 1 (counters E, F) is phase shifter phi3 on ``b'`` followed by B3
mixing ``b'`` and ``c'``; detector 2 (counters G, H) is phase shifter phi4 on
``d'`` followed by B4 mixing ``a'`` and ``d'``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fock import FockState, apply_creation, vacuum
from .optics import BeamSplitter, InterferometerNetwork, PhaseShifter, compose, evolve

MODE_A, MODE_B, MODE_C, MODE_D = 0, 1, 2, 3
MODE_E, MODE_F, MODE_G, MODE_H = 1, 2, 0, 3
OUTPUT_MODES = {"e": MODE_E, "f": MODE_F, "g": MODE_G, "h": MODE_H}

CHAIN_TOL = 1e-10
UNDEFINED_BELOW = 1e-14


@dataclass(frozen=True)
class HardyAngles:
    """Source beam-splitter angles; ``S_i = sin(theta_i)``, ``C_i = cos(theta_i)``."""

    theta1: float
    theta2: float

    @property
    def S1(self) -> float:
        return math.sin(self.theta1)

    @property
    def C1(self) -> float:
        return math.cos(self.theta1)

    @property
    def S2(self) -> float:
        return math.sin(self.theta2)

    @property
    def C2(self) -> float:
        return math.cos(self.theta2)

    @property
    def ss(self) -> float:
        """S1 * S2"""
        return self.S1 * self.S2

    @property
    def cc(self) -> float:
        """C1 * C2"""
        return self.C1 * self.C2


@dataclass(frozen=True)
class DetectorSetting:
    theta3: float
    phi3: float
    theta4: float
    phi4: float

    @property
    def S3(self) -> float:
        return math.sin(self.theta3)

    @property
    def S4(self) -> float:
        return math.sin(self.theta4)


class CanonicalCase(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


class Event(enum.Enum):
    """Single-click events: one counter fires once, its partner stays dark."""

    E_bar = ("e", "f")
    F_bar = ("f", "e")
    G_bar = ("g", "h")
    H_bar = ("h", "g")

    @property
    def detector(self) -> int:
        return 1 if self.value[0] in "ef" else 2

    def occurs(self, occupation) -> bool:
        fired, dark = self.value
        return occupation[OUTPUT_MODES[fired]] == 1 and occupation[OUTPUT_MODES[dark]] == 0


def build_network(angles: HardyAngles, setting: DetectorSetting) -> InterferometerNetwork:
    return InterferometerNetwork(4, (
        BeamSplitter(MODE_A, MODE_B, angles.theta1),
        BeamSplitter(MODE_C, MODE_D, angles.theta2),
        PhaseShifter(MODE_B, setting.phi3),
        BeamSplitter(MODE_B, MODE_C, setting.theta3),
        PhaseShifter(MODE_D, setting.phi4),
        BeamSplitter(MODE_A, MODE_D, setting.theta4),
    ))


def input_state() -> FockState:
    """One photon in ``a`` and one in ``c``: a† c† |0>."""
    return apply_creation(apply_creation(vacuum(4), MODE_A), MODE_C)


def output_state(angles: HardyAngles, setting: DetectorSetting) -> FockState:
    return evolve(compose(build_network(angles, setting)), input_state())


def tau(angles: HardyAngles) -> float:
    """Detector amplitude sqrt(C1C2 / (C1C2 + S1S2)) that kills F-G coincidences."""
    cc, ss = angles.cc, angles.ss
    if cc + ss <= 0:
        raise ValueError(f"tau undefined at {angles}: C1C2 + S1S2 = 0")
    return math.sqrt(cc / (cc + ss))


def tau_prime(angles: HardyAngles) -> float:
    cc3, ss3 = angles.cc ** 3, angles.ss ** 3
    if cc3 + ss3 <= 0:
        raise ValueError(f"tau' undefined at {angles}")
    return math.sqrt(cc3 / (ss3 + cc3))


def canonical_setting(case: CanonicalCase | str, angles: HardyAngles) -> DetectorSetting:
    case = CanonicalCase(case)
    t, tp = tau(angles), tau_prime(angles)
    # (S3, phi3, S4, phi4)
    table = {
        CanonicalCase.A: (t, math.pi / 2, t, math.pi / 2),
        CanonicalCase.B: (t, math.pi / 2, tp, 3 * math.pi / 2),
        CanonicalCase.C: (tp, 3 * math.pi / 2, t, math.pi / 2),
        CanonicalCase.D: (tp, 3 * math.pi / 2, tp, 3 * math.pi / 2),
    }
    s3, phi3, s4, phi4 = table[case]
    return DetectorSetting(math.asin(min(s3, 1.0)), phi3, math.asin(min(s4, 1.0)), phi4)


def event_probability(state: FockState, *events: Event) -> float:
    """Probability that all ``events`` occur (at most one per detector).

    A detector without an event is left unconstrained.
    """
    if not events:
        raise ValueError("at least one event is required")
    detectors = [ev.detector for ev in events]
    if len(set(detectors)) != len(detectors):
        raise ValueError("events on the same detector are mutually exclusive")
    return math.fsum(abs(amp) ** 2 for occ, amp in state.items()
                     if all(ev.occurs(occ) for ev in events))


def conditional_probability(state: FockState, target: Event, given: Event) -> Optional[float]:
    """P(target | given), or ``None`` when ``given`` has (numerically) zero probability."""
    if target.detector == given.detector:
        raise ValueError("target and condition must be on different detectors")
    p_given = event_probability(state, given)
    if p_given < UNDEFINED_BELOW:
        return None
    return event_probability(state, target, given) / p_given


def psi_split(state: FockState) -> tuple[FockState, FockState]:
    """Split into coincidence terms (one photon per detector) and the rest."""
    if state.n_modes != 4:
        raise ValueError("psi_split expects the 4 output modes")
    if state and state.photon_numbers() != {2}:
        raise ValueError("psi_split expects a two-photon state")

    def coincidence(occ):
        return occ[MODE_E] + occ[MODE_F] == 1 and occ[MODE_G] + occ[MODE_H] == 1

    return state.filter(coincidence), state.filter(lambda occ: not coincidence(occ))


def hardy_probability(theta1, theta2):
    """Case-D coincidence probability in closed form, vectorised over angles.

    (S1S2 C1C2)^2 (S1S2 - C1C2)^2 / [(S1S2)^2 + (C1C2)^2 - S1S2 C1C2]^2
    """
    x = np.sin(theta1) * np.sin(theta2)
    y = np.cos(theta1) * np.cos(theta2)
    return (x * y) ** 2 * (x - y) ** 2 / (x * x + y * y - x * y) ** 2


def closed_form_P(angles: HardyAngles) -> float:
    if angles.ss == 0 and angles.cc == 0:
        raise ValueError(f"P undefined at {angles}")
    return float(hardy_probability(angles.theta1, angles.theta2))


@dataclass(frozen=True)
class HardyReport:
    p_joint_a: float
    p_f_given_g_b: Optional[float]
    p_g_given_f_c: Optional[float]
    p_joint_d: float
    p_closed_form: float
    chain_holds: bool

    @property
    def undefined(self) -> bool:
        return self.p_f_given_g_b is None or self.p_g_given_f_c is None

    @property
    def degenerate(self) -> bool:
        """True when the final coincidence probability vanishes (S1S2 == C1C2)."""
        return self.p_closed_form <= 1e-12

    def as_dict(self) -> dict:
        return {
            "p_joint_a": self.p_joint_a,
            "p_f_given_g_b": self.p_f_given_g_b,
            "p_g_given_f_c": self.p_g_given_f_c,
            "p_joint_d": self.p_joint_d,
            "p_closed_form": self.p_closed_form,
            "chain_holds": self.chain_holds,
            "degenerate": self.degenerate,
        }


def hardy_report(angles: HardyAngles) -> HardyReport:
    """Simulate all four canonical settings and assemble the Hardy chain."""
    states = {case: output_state(angles, canonical_setting(case, angles))
              for case in CanonicalCase}
    p_a = event_probability(states[CanonicalCase.A], Event.F_bar, Event.G_bar)
    p_b = conditional_probability(states[CanonicalCase.B], Event.F_bar, Event.G_bar)
    p_c = conditional_probability(states[CanonicalCase.C], Event.G_bar, Event.F_bar)
    p_d = event_probability(states[CanonicalCase.D], Event.F_bar, Event.G_bar)
    p_closed = closed_form_P(angles)
    holds = (
        p_b is not None and p_c is not None
        and p_a <= CHAIN_TOL
        and p_b >= 1 - CHAIN_TOL
        and p_c >= 1 - CHAIN_TOL
        and abs(p_d - p_closed) <= CHAIN_TOL
    )
    return HardyReport(p_a, p_b, p_c, p_d, p_closed, holds)
