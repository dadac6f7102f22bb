"""Low-temperature closed forms for the fermion engine.

With N = 4un + k particles (u = s + 1/2), the n lowest levels of each half
are completely filled and only the k remainder particles on level n+1 carry
statistical weight. For k < 2u the particles on that level are counted
directly; for k >= 2u the unoccupied states (holes) are counted instead.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .combinatorics import binomial, binomial_ratio
from .core import (
    BOLTZMANN,
    HBAR,
    MeasurementDistribution,
    ThermalPoint,
    WellGeometry,
    WorkDecomposition,
)
from .equilibrium import fermion_eq_ratio, level_split, wall_position


class FillingCase(enum.Enum):
    PARTICLE = "particle"
    HOLE = "hole"


@dataclass(frozen=True)
class FermionFilling:
    """Decomposition N = 4 u n + k with 0 <= k < 4u."""

    N: int
    u: int
    n: int
    k: int

    @property
    def case(self) -> FillingCase:
        return FillingCase.PARTICLE if self.k < 2 * self.u else FillingCase.HOLE

    @property
    def support(self) -> range:
        """m values with nonzero probability after measurement."""
        base = 2 * self.u * self.n
        if self.case is FillingCase.PARTICLE:
            return range(base, base + self.k + 1)
        top = 2 * self.u * (self.n + 1)
        return range(base + self.k - 2 * self.u, top + 1)


def decompose(N: int, u: int) -> FermionFilling:
    """Split a particle count into filled shells and remainder, N = 4un + k."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    if u < 1:
        raise ValueError(f"u must be >= 1, got {u}")
    n, k = divmod(N, 4 * u)
    return FermionFilling(N=N, u=u, n=n, k=k)


def _hole_count(filling: FermionFilling) -> int:
    """Remainder size in the active representation (k, or 4u-k for holes)."""
    if filling.case is FillingCase.PARTICLE:
        return filling.k
    return 4 * filling.u - filling.k


def _active_index(filling: FermionFilling, m: int) -> int:
    """p (particles left) or q (holes left) on the partly filled level."""
    if filling.case is FillingCase.PARTICLE:
        return m - 2 * filling.u * filling.n
    return 2 * filling.u * (filling.n + 1) - m


def _weight(filling: FermionFilling, idx: int) -> float:
    """f_m as a ratio of binomials; idx is p or q depending on the case."""
    u2 = 2 * filling.u
    kk = _hole_count(filling)
    return binomial_ratio([(u2, idx), (u2, kk - idx)], [(2 * u2, kk)])


def _delta_e(filling: FermionFilling, idx: int, geometry: WellGeometry) -> float:
    """Exact splitting of level n+1 at the equilibrium position for this outcome."""
    if filling.case is FillingCase.PARTICLE:
        p = idx
    else:
        p = 2 * filling.u - idx
    ratio = fermion_eq_ratio(filling.u, filling.n, filling.k, p)
    wall = wall_position(ratio, geometry)
    return level_split(filling.n + 1, wall, geometry).delta_e


def measurement_distribution(filling: FermionFilling) -> MeasurementDistribution:
    """Probabilities f_m over the ground-state support after wall insertion."""
    support = np.array(list(filling.support), dtype=np.int64)
    probs = np.array([_weight(filling, _active_index(filling, int(m))) for m in support])
    return MeasurementDistribution(support=support, probabilities=probs)


def log_post_expansion_weight(
    filling: FermionFilling,
    m: int,
    geometry: WellGeometry,
    thermal: ThermalPoint,
) -> float:
    """ln f_m*; log-domain so deep low-T exponents do not underflow."""
    if m not in filling.support:
        raise ValueError(f"m={m} is outside the ground-state support {filling.support}")
    beta = thermal.beta
    u2 = 2 * filling.u
    kk = _hole_count(filling)
    idx = _active_index(filling, m)
    if kk % 2 == 0 and idx * 2 == kk:
        # symmetric loading: the wall stays at L/2 and no tunnelling bias exists
        return math.log(binomial_ratio([(u2, kk // 2), (u2, kk // 2)], [(2 * u2, kk)]))
    mu = min(idx, kk - idx)
    log_weight = math.log(binomial_ratio([(u2, idx), (u2, kk - idx)], [(u2, kk)]))
    if mu == 0:
        # the wall reaches a box end; the combinatorial ratio is already 1
        return log_weight
    return log_weight - mu * beta * _delta_e(filling, idx, geometry)


def post_expansion_weight(
    filling: FermionFilling,
    m: int,
    geometry: WellGeometry,
    thermal: ThermalPoint,
) -> float:
    """Relative weight f_m* of the m-outcome with the wall at its equilibrium position."""
    return math.exp(log_post_expansion_weight(filling, m, geometry, thermal))


def work_coefficients(filling: FermionFilling, geometry: WellGeometry) -> WorkDecomposition:
    """Slope D_F and zero-temperature absorbed work W_0F of the affine work law."""
    u2 = 2 * filling.u
    kk = _hole_count(filling)
    log_ratio = 0.0 if kk == 0 else math.log(binomial(2 * u2, kk) / binomial(u2, kk))
    if kk % 2 == 1:
        slope = log_ratio
        upper = (kk - 1) // 2
    else:
        central = 0.0
        if kk > 0:
            central = binomial_ratio([(u2, kk // 2), (u2, kk // 2)], [(2 * u2, kk)])
        slope = (1.0 - central) * log_ratio
        upper = kk // 2 - 1
    absorbed = 0.0
    for idx in range(1, upper + 1):
        absorbed += idx * _weight(filling, idx) * _delta_e(filling, idx, geometry)
    absorbed *= 2.0
    return WorkDecomposition(slope=slope, absorbed=absorbed)


def total_work(filling: FermionFilling, geometry: WellGeometry, thermal: ThermalPoint) -> float:
    """Total cycle work D_F k_B T - W_0F (affine in T, valid at T = 0)."""
    return work_coefficients(filling, geometry).total_work(thermal)


def relative_entropy_work(
    filling: FermionFilling, geometry: WellGeometry, thermal: ThermalPoint
) -> float:
    """Direct -k_B T sum f_m ln(f_m / f_m*) evaluation, for cross-checking."""
    dist = measurement_distribution(filling)
    acc = 0.0
    for m, f in zip(dist.support, dist.probabilities):
        if f <= 0:
            continue
        log_fstar = log_post_expansion_weight(filling, int(m), geometry, thermal)
        acc += f * (math.log(f) - log_fstar)
    return -BOLTZMANN * thermal.temperature * acc


def average_absorbed_work(filling: FermionFilling, geometry: WellGeometry) -> float:
    """Absorbed work per particle, W_0F / N."""
    if filling.N < 1:
        raise ValueError("average absorbed work requires N >= 1")
    return work_coefficients(filling, geometry).absorbed / filling.N


def average_absorbed_work_limit(u: int, k: int, geometry: WellGeometry) -> float:
    """Filled-shell limit of the average absorbed work; depends on (u, k) only.

    Periodic in the particle number with period 4u and symmetric about k = 2u.
    """
    if u < 1:
        raise ValueError(f"u must be >= 1, got {u}")
    if not 0 <= k < 4 * u:
        raise ValueError(f"require 0 <= k < 4u, got k={k}, u={u}")
    filling = FermionFilling(N=k, u=u, n=0, k=k)
    u2 = 2 * u
    kk = _hole_count(filling)
    upper = (kk - 1) // 2 if kk % 2 == 1 else kk // 2 - 1
    total = 0.0
    for idx in range(1, upper + 1):
        total += idx * _weight(filling, idx) * (kk - 2 * idx)
    scale = math.pi**2 * HBAR**2 / (u * u * geometry.mass * geometry.length**2)
    return scale * total
