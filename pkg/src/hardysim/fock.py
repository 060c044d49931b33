"""Sparse multi-mode bosonic Fock states.

A state is a map from occupation vectors (tuples of photon counts, one per
mode) to complex amplitudes.  Values are treated as immutable: every
operation returns a new :class:`FockState`.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Mapping

Occupation = tuple[int, ...]

PRUNE_THRESHOLD = 1e-15


def _check_occupation(occ: Iterable[int], n_modes: int) -> Occupation:
    occ = tuple(int(n) for n in occ)
    if len(occ) != n_modes:
        raise ValueError(f"occupation {occ} does not have {n_modes} modes")
    if any(n < 0 for n in occ):
        raise ValueError(f"negative photon count in {occ}")
    return occ


class FockState(Mapping[Occupation, complex]):
    """Superposition of Fock basis states on ``n_modes`` modes.

    Behaves as a read-only mapping ``occupation -> amplitude``.  Terms with
    modulus below ``PRUNE_THRESHOLD`` are dropped at construction.
    """

    __slots__ = ("n_modes", "_terms")

    def __init__(self, n_modes: int, terms: Mapping[Iterable[int], complex] | None = None,
                 prune: bool = True):
        if n_modes < 1:
            raise ValueError("n_modes must be >= 1")
        self.n_modes = int(n_modes)
        clean: dict[Occupation, complex] = {}
        for occ, amp in (terms or {}).items():
            key = _check_occupation(occ, self.n_modes)
            clean[key] = clean.get(key, 0j) + complex(amp)
        if prune:
            clean = {k: v for k, v in clean.items() if abs(v) >= PRUNE_THRESHOLD}
        self._terms = clean

    @classmethod
    def basis(cls, occupation: Iterable[int], amplitude: complex = 1.0) -> "FockState":
        occ = tuple(occupation)
        return cls(len(occ), {occ: amplitude})

    def __getitem__(self, occ: Iterable[int]) -> complex:
        return self._terms[tuple(occ)]

    def get(self, occ, default=0j):
        return self._terms.get(tuple(occ), default)

    def __iter__(self) -> Iterator[Occupation]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v:.6g}" for k, v in sorted(self._terms.items()))
        return f"FockState({self.n_modes}, {{{body}}})"

    def __add__(self, other: "FockState") -> "FockState":
        _check_same_modes(self, other)
        out = dict(self._terms)
        for k, v in other.items():
            out[k] = out.get(k, 0j) + v
        return FockState(self.n_modes, out)

    def __mul__(self, scalar: complex) -> "FockState":
        return FockState(self.n_modes, {k: scalar * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def photon_numbers(self) -> set[int]:
        """Distinct total photon numbers present in the superposition."""
        return {sum(k) for k in self._terms}

    def filter(self, predicate) -> "FockState":
        """Sub-state of the terms whose occupation satisfies ``predicate``."""
        return FockState(self.n_modes, {k: v for k, v in self._terms.items() if predicate(k)},
                         prune=False)


def _check_same_modes(lhs: FockState, rhs: FockState) -> None:
    if lhs.n_modes != rhs.n_modes:
        raise ValueError(f"mode count mismatch: {lhs.n_modes} != {rhs.n_modes}")


def vacuum(n_modes: int) -> FockState:
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    return FockState(n_modes, {(0,) * n_modes: 1.0})


def apply_creation(state: FockState, mode: int) -> FockState:
    """Apply the creation operator of ``mode``: a†|n> = sqrt(n+1)|n+1>."""
    if not 0 <= mode < state.n_modes:
        raise ValueError(f"mode {mode} out of range for {state.n_modes} modes")
    out = {}
    for occ, amp in state.items():
        n = occ[mode]
        new = occ[:mode] + (n + 1,) + occ[mode + 1:]
        out[new] = amp * math.sqrt(n + 1)
    return FockState(state.n_modes, out)


def norm_sq(state: FockState) -> float:
    return math.fsum(abs(a) ** 2 for a in state.values())


def inner_product(lhs: FockState, rhs: FockState) -> complex:
    """<lhs|rhs>, conjugate-linear in ``lhs``."""
    _check_same_modes(lhs, rhs)
    small, large = (lhs, rhs) if len(lhs) <= len(rhs) else (rhs, lhs)
    total = 0j
    for occ in small:
        if occ in large:
            total += lhs[occ].conjugate() * rhs[occ]
    return total
