"""Critical temperatures and (N, T) work grids for the phase diagrams.

A configuration with positive slope D has a single sign change of the
total work at T_c = W_0 / (D k_B). Configurations with D = 0 (fermion
k = 0, boson N = 0) have no transition; they are carried as explicit
``None`` markers, never NaN, so file consumers can tell "no transition"
from numeric failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import boson, fermion
from .core import (
    BOLTZMANN,
    ParticleKind,
    SpinStatistics,
    ThermalPoint,
    WellGeometry,
    WorkDecomposition,
)


class UndefinedQuantityError(ValueError):
    """A requested quantity has no definition for this configuration."""


@dataclass(frozen=True)
class PhasePoint:
    N: int
    critical_temperature: float | None

    @property
    def defined(self) -> bool:
        return self.critical_temperature is not None


@dataclass(frozen=True)
class WorkGrid:
    """Total work on an (N, T) lattice; cell [i, j] belongs to (N[i], T[j])."""

    n_values: np.ndarray
    temperatures: np.ndarray
    work: np.ndarray


def _coefficients(spin: SpinStatistics, N: int, geometry: WellGeometry) -> WorkDecomposition:
    if spin.kind is ParticleKind.FERMION:
        return fermion.work_coefficients(fermion.decompose(N, spin.u), geometry)
    return boson.work_coefficients(boson.BosonFilling(N=N, s=spin.s), geometry)


def critical_temperature(coeffs: WorkDecomposition) -> float:
    """Temperature where the affine work law changes sign, W_0 / (D k_B)."""
    if coeffs.slope == 0.0:
        raise UndefinedQuantityError("no transition: the work slope D is zero")
    return coeffs.absorbed / (coeffs.slope * BOLTZMANN)


def phase_curve(
    spin: SpinStatistics, geometry: WellGeometry, n_values: Iterable[int]
) -> list[PhasePoint]:
    """One PhasePoint per particle number, in the given order."""
    n_list = list(n_values)
    if not n_list:
        raise ValueError("n_values must be non-empty")
    points = []
    for N in n_list:
        coeffs = _coefficients(spin, N, geometry)
        if coeffs.slope == 0.0:
            points.append(PhasePoint(N=N, critical_temperature=None))
        else:
            points.append(PhasePoint(N=N, critical_temperature=critical_temperature(coeffs)))
    return points


def work_grid(
    spin: SpinStatistics,
    geometry: WellGeometry,
    n_values: Sequence[int],
    temperatures: Sequence[float],
) -> WorkGrid:
    """Total work over the (N, T) lattice, cell-independent and deterministic."""
    if len(n_values) == 0 or len(temperatures) == 0:
        raise ValueError("n_values and temperatures must be non-empty")
    if any(t < 0 for t in temperatures):
        raise ValueError("temperatures must be >= 0")
    n_arr = np.asarray(n_values, dtype=np.int64)
    t_arr = np.asarray(temperatures, dtype=np.float64)
    work = np.empty((n_arr.size, t_arr.size))
    for i, N in enumerate(n_arr):
        coeffs = _coefficients(spin, int(N), geometry)
        work[i, :] = coeffs.slope * BOLTZMANN * t_arr - coeffs.absorbed
    return WorkGrid(n_values=n_arr, temperatures=t_arr, work=work)
