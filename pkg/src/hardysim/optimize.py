"""Grid sweeps and deterministic maximisation of the Hardy probability.

The objective is the closed-form case-D probability over the source angles
``(theta1, theta2)``.  A coarse grid picks a starting point which is then
refined by coordinate-wise golden-section search.  Nothing here is random,
so repeated runs are bitwise identical.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .hardy import HardyAngles, hardy_probability, hardy_report

HALF_PI = math.pi / 2
INSET = 1e-6
SAMPLE_EVERY = 16
INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class SweepGrid:
    """P on a grid; ``values[i, j]`` is at ``(theta1_samples[i], theta2_samples[j])``.

    ``chain_flags`` holds the full-simulation chain result where ``checked``
    is true and False elsewhere.
    """

    theta1_samples: np.ndarray
    theta2_samples: np.ndarray
    values: np.ndarray
    chain_flags: np.ndarray
    checked: np.ndarray

    def rows(self):
        """(theta1, theta2, P, chain_ok) in row-major order; chain_ok is None if unchecked."""
        for i, t1 in enumerate(self.theta1_samples):
            for j, t2 in enumerate(self.theta2_samples):
                ok = bool(self.chain_flags[i, j]) if self.checked[i, j] else None
                yield float(t1), float(t2), float(self.values[i, j]), ok


@dataclass(frozen=True)
class OptimumResult:
    theta1_star: float
    theta2_star: float
    p_star: float
    iterations: int
    grid_resolution: int


def grid_samples(resolution: int) -> np.ndarray:
    """``resolution`` equally spaced interior points of (0, pi/2)."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    return np.linspace(0.0, HALF_PI, resolution + 2)[1:-1]


def _chain_ok(point: tuple[float, float]) -> bool:
    return hardy_report(HardyAngles(*point)).chain_holds


def sweep(resolution: int, verify_chain: str = "sampled", jobs: int | None = 1) -> SweepGrid:
    """Evaluate P on a ``resolution`` x ``resolution`` grid.

    ``verify_chain`` is ``"all"``, ``"sampled"`` (every 16th point in
    row-major order) or ``"none"``.  ``jobs`` > 1 spreads the chain checks
    over worker processes; ``None`` uses every available processor.
    """
    samples = grid_samples(resolution)
    T1, T2 = np.meshgrid(samples, samples, indexing="ij")
    values = hardy_probability(T1, T2)

    checked = np.zeros(values.shape, dtype=bool)
    if verify_chain == "all":
        checked[:] = True
    elif verify_chain == "sampled":
        checked.flat[::SAMPLE_EVERY] = True
    elif verify_chain != "none":
        raise ValueError(f"verify_chain must be all, sampled or none, not {verify_chain!r}")

    flags = np.zeros(values.shape, dtype=bool)
    idx = np.flatnonzero(checked)
    points = [(float(T1.flat[k]), float(T2.flat[k])) for k in idx]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_chain_ok, points, chunksize=max(1, len(points) // (4 * jobs))))
    else:
        results = [_chain_ok(p) for p in points]
    flags.flat[idx] = results
    return SweepGrid(samples, samples.copy(), values, flags, checked)


def golden_section_max(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Maximise a unimodal ``f`` on [a, b] until the bracket is shorter than ``tol``.

    Returns the best probed point and its value.
    """
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def optimize(initial_resolution: int = 64, tolerance: float = 1e-10,
             max_cycles: int = 500) -> OptimumResult:
    """Maximise P over (theta1, theta2).

    Coarse grid scan, then alternate golden-section line searches on each
    angle (bracket: one grid step either side, kept inside the inset
    domain) until neither coordinate moves by more than ``tolerance``.
    """
    if tolerance < 1e-12:
        raise ValueError("tolerance must be >= 1e-12")
    grid = sweep(initial_resolution, verify_chain="none")
    i, j = np.unravel_index(np.argmax(grid.values), grid.values.shape)
    x = [float(grid.theta1_samples[i]), float(grid.theta2_samples[j])]
    best = float(grid.values[i, j])
    step = float(grid.theta1_samples[1] - grid.theta1_samples[0])
    lo, hi = INSET, HALF_PI - INSET

    cycles = 0
    while cycles < max_cycles:
        cycles += 1
        moved = 0.0
        for axis in (0, 1):
            def line(t, axis=axis):
                p = list(x)
                p[axis] = t
                return float(hardy_probability(*p))

            centre = x[axis]
            t, val = golden_section_max(line, max(lo, centre - step), min(hi, centre + step), tolerance)
            if val > best:
                moved = max(moved, abs(t - centre))
                x[axis], best = t, val
        if moved <= tolerance:
            break
    return OptimumResult(x[0], x[1], best, cycles, initial_resolution)
