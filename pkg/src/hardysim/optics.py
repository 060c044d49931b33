"""Beam splitters, phase shifters and boson evolution through linear networks.

Conventions (used everywhere in the package):

* ``BeamSplitter(p, q, theta)`` mixes modes ``p`` and ``q`` with the block
  ``[[S, iC], [iC, S]]``, ``S = sin(theta)`` the transmission amplitude and
  ``C = cos(theta)``.
* ``PhaseShifter(m, phi)`` multiplies mode ``m`` by ``exp(-i phi)``.
* A single-particle unitary ``V`` sends one photon entering mode ``j`` to
  ``sum_k V[k, j] |1_k>``.  Networks compose first-element-first, so
  ``V = V_last @ ... @ V_first``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .fock import FockState


@dataclass(frozen=True)
class BeamSplitter:
    p: int
    q: int
    theta: float

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("beam splitter needs two distinct modes")
        if self.p < 0 or self.q < 0:
            raise ValueError("negative mode index")

    @property
    def S(self) -> float:
        return math.sin(self.theta)

    @property
    def C(self) -> float:
        return math.cos(self.theta)

    @property
    def transmittance(self) -> float:
        return self.S ** 2

    @property
    def reflectivity(self) -> float:
        return self.C ** 2

    @property
    def modes(self) -> tuple[int, ...]:
        return (self.p, self.q)


@dataclass(frozen=True)
class PhaseShifter:
    mode: int
    phi: float

    def __post_init__(self):
        if self.mode < 0:
            raise ValueError("negative mode index")

    @property
    def modes(self) -> tuple[int, ...]:
        return (self.mode,)


Element = Union[BeamSplitter, PhaseShifter]


@dataclass(frozen=True)
class InterferometerNetwork:
    """Ordered optical elements acting on ``n_modes`` modes."""

    n_modes: int
    elements: tuple[Element, ...]

    def __post_init__(self):
        if self.n_modes < 1:
            raise ValueError("n_modes must be >= 1")
        object.__setattr__(self, "elements", tuple(self.elements))
        for el in self.elements:
            _check_modes(el, self.n_modes)


def _check_modes(element: Element, n_modes: int) -> None:
    if any(m >= n_modes for m in element.modes):
        raise ValueError(f"{element} references a mode outside 0..{n_modes - 1}")


def element_unitary(element: Element, n_modes: int) -> np.ndarray:
    _check_modes(element, n_modes)
    U = np.eye(n_modes, dtype=complex)
    if isinstance(element, BeamSplitter):
        p, q = element.p, element.q
        s, c = element.S, element.C
        U[p, p] = U[q, q] = s
        U[p, q] = U[q, p] = 1j * c
    elif isinstance(element, PhaseShifter):
        U[element.mode, element.mode] = np.exp(-1j * element.phi)
    else:
        raise TypeError(f"unknown optical element {element!r}")
    return U


def compose(network: InterferometerNetwork) -> np.ndarray:
    """Single-particle unitary of the whole network."""
    if not network.elements:
        raise ValueError("cannot compose an empty network")
    V = np.eye(network.n_modes, dtype=complex)
    for el in network.elements:
        V = element_unitary(el, network.n_modes) @ V
    return V


def permanent(matrix) -> complex:
    """Matrix permanent by Ryser's formula with Gray-code subset order.

    Cost is O(2**n * n).  Each step toggles one column in or out of the
    subset and updates the row sums incrementally.
    """
    A = np.asarray(matrix, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"permanent needs a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if n == 0:
        raise ValueError("permanent needs dimension >= 1")

    row_sums = np.zeros(n, dtype=complex)
    in_subset = [False] * n
    size = 0
    total = 0j
    for k in range(1, 2 ** n):
        j = (k & -k).bit_length() - 1
        if in_subset[j]:
            row_sums -= A[:, j]
            size -= 1
        else:
            row_sums += A[:, j]
            size += 1
        in_subset[j] = not in_subset[j]
        term = np.prod(row_sums)
        total += -term if (n - size) % 2 else term
    return complex(total)


def _factorial_prod(occ) -> int:
    return math.prod(math.factorial(n) for n in occ)


def _check_unitary_shape(V: np.ndarray, n_modes: int) -> np.ndarray:
    V = np.asarray(V, dtype=complex)
    if V.shape != (n_modes, n_modes):
        raise ValueError(f"unitary of shape {V.shape} does not act on {n_modes} modes")
    return V


def evolve(V, state: FockState) -> FockState:
    """Propagate a Fock state through the single-particle unitary ``V``.

    Output amplitudes come from permanents of row/column-repeated
    submatrices of ``V``.
    """
    V = _check_unitary_shape(V, state.n_modes)
    n_modes = state.n_modes
    out: dict[tuple[int, ...], complex] = {}
    for occ_in, amp in state.items():
        n_photons = sum(occ_in)
        if n_photons == 0:
            out[occ_in] = out.get(occ_in, 0j) + amp
            continue
        cols = [j for j, n in enumerate(occ_in) for _ in range(n)]
        norm_in = _factorial_prod(occ_in)
        for rows in itertools.combinations_with_replacement(range(n_modes), n_photons):
            occ_out = tuple(rows.count(k) for k in range(n_modes))
            sub = V[np.ix_(rows, cols)]
            value = permanent(sub) / math.sqrt(norm_in * _factorial_prod(occ_out))
            out[occ_out] = out.get(occ_out, 0j) + amp * value
    return FockState(n_modes, out)


def evolve_two_photon_direct(V, input_modes: Sequence[int]) -> FockState:
    """Evolve ``a_p† a_q† |0>`` by expanding both creation operators.

    Independent of :func:`evolve`; the input is the unnormalised operator
    product, so two photons in one mode carry amplitude sqrt(2).
    """
    V = np.asarray(V, dtype=complex)
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        raise ValueError("V must be square")
    n_modes = V.shape[0]
    if len(input_modes) != 2:
        raise ValueError("exactly two input modes are required")
    p, q = input_modes
    if not (0 <= p < n_modes and 0 <= q < n_modes):
        raise ValueError(f"input modes {input_modes} out of range for {n_modes} modes")

    # k† l† |0> = |1_k 1_l> for k != l, sqrt(2) |2_k> for k == l
    out: dict[tuple[int, ...], complex] = {}
    for k in range(n_modes):
        for l in range(n_modes):
            occ = [0] * n_modes
            occ[k] += 1
            occ[l] += 1
            factor = math.sqrt(2) if k == l else 1.0
            key = tuple(occ)
            out[key] = out.get(key, 0j) + V[k, p] * V[l, q] * factor
    return FockState(n_modes, out)


def random_network(rng: np.random.Generator, n_modes: int, n_elements: int) -> InterferometerNetwork:
    """Random network: theta in (0, pi), phi in (0, 2 pi), random mode pairs."""
    elements: list[Element] = []
    for _ in range(n_elements):
        if n_modes > 1 and rng.random() < 0.6:
            p, q = rng.choice(n_modes, size=2, replace=False)
            elements.append(BeamSplitter(int(p), int(q), float(rng.uniform(0, np.pi))))
        else:
            elements.append(PhaseShifter(int(rng.integers(n_modes)), float(rng.uniform(0, 2 * np.pi))))
    return InterferometerNetwork(n_modes, tuple(elements))


__all__ = [
    "BeamSplitter", "PhaseShifter", "InterferometerNetwork", "Element",
    "element_unitary", "compose", "permanent", "evolve",
    "evolve_two_photon_direct", "random_network",
]
