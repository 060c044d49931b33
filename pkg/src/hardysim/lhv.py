"""Deterministic local hidden-variable strategies for the Hardy chain.

Each detector has two settings, ``(tau, pi/2)`` and ``(tau', 3pi/2)``.  A
deterministic local strategy fixes, for every setting, whether the
single-click event fires (F-bar at detector 1, G-bar at detector 2); its
outcome at one detector cannot depend on the setting at the other.  There
are 2**4 = 16 of them.

Stochastic local models are convex mixtures of deterministic ones, so the
largest case-D coincidence over the deterministic strategies that respect
the constraints bounds every local model.  No linear program is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple


class LocalStrategy(NamedTuple):
    f_at_tau: int
    f_at_tau_prime: int
    g_at_tau: int
    g_at_tau_prime: int


@dataclass(frozen=True)
class ChainConstraints:
    """Which quantum facts a local strategy must reproduce.

    forbid_joint_a
        F and G never fire together at (tau, tau).
    implication_b
        G at tau' implies F at tau.
    implication_c
        F at tau' implies G at tau.
    """

    forbid_joint_a: bool = True
    implication_b: bool = True
    implication_c: bool = True

    @classmethod
    def none(cls) -> "ChainConstraints":
        return cls(False, False, False)

    @classmethod
    def from_report(cls, report) -> "ChainConstraints":
        """Constraints a local model must obey to reproduce a HardyReport.

        Only logical facts are used: a constraint is on when its quantum
        probability is exactly 0 (or 1) within the chain tolerance.
        """
        from .hardy import CHAIN_TOL

        def is_one(p):
            return p is not None and p >= 1 - CHAIN_TOL

        return cls(
            forbid_joint_a=report.p_joint_a <= CHAIN_TOL,
            implication_b=is_one(report.p_f_given_g_b),
            implication_c=is_one(report.p_g_given_f_c),
        )

    def as_dict(self) -> dict:
        return {
            "forbid_joint_a": self.forbid_joint_a,
            "implication_b": self.implication_b,
            "implication_c": self.implication_c,
        }


ALL_STRATEGIES = tuple(LocalStrategy(*bits) for bits in itertools.product((0, 1), repeat=4))


def satisfies(strategy: LocalStrategy, constraints: ChainConstraints) -> bool:
    s = strategy
    if constraints.forbid_joint_a and s.f_at_tau and s.g_at_tau:
        return False
    if constraints.implication_b and s.g_at_tau_prime and not s.f_at_tau:
        return False
    if constraints.implication_c and s.f_at_tau_prime and not s.g_at_tau:
        return False
    return True


def enumerate_satisfying(constraints: ChainConstraints) -> list[LocalStrategy]:
    """All satisfying strategies, in lexicographic bit order."""
    return [s for s in ALL_STRATEGIES if satisfies(s, constraints)]


def lhv_max_case_d(constraints: ChainConstraints) -> Fraction:
    """Largest case-D (tau', tau') coincidence any allowed local strategy produces."""
    return max(
        (Fraction(s.f_at_tau_prime & s.g_at_tau_prime) for s in enumerate_satisfying(constraints)),
        default=Fraction(0),
    )
