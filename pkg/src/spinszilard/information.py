"""Erasure work, net cycle work, and the information-work efficiency.

Entropies are kept in nats throughout (one bit = ln 2 nats); the erasure
cost k_B T H(f) is identical either way and nats avoid conversion factors
in the W_net = W_tot - W_eras identity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import boson, fermion
from .core import (
    BOLTZMANN,
    MeasurementDistribution,
    ParticleKind,
    SpinStatistics,
    ThermalPoint,
    WellGeometry,
)

Filling = fermion.FermionFilling | boson.BosonFilling


class UndefinedEfficiencyError(ValueError):
    """Measurement outcome is deterministic: zero erasure work, no efficiency."""


def _module_of(filling: Filling):
    return fermion if isinstance(filling, fermion.FermionFilling) else boson


def erasure_work(distribution: MeasurementDistribution, thermal: ThermalPoint) -> float:
    """Landauer cost of resetting the measurement record: k_B T H(f) in joules."""
    total = distribution.total()
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"distribution is not normalized: sum = {total!r}")
    if thermal.temperature <= 0:
        raise ValueError("erasure work requires T > 0")
    return BOLTZMANN * thermal.temperature * distribution.entropy()


def net_work(filling: Filling, geometry: WellGeometry, thermal: ThermalPoint) -> float:
    """Net cycle work after paying erasure: k_B T sum f_m ln f_m* (always <= 0)."""
    mod = _module_of(filling)
    dist = mod.measurement_distribution(filling)
    acc = 0.0
    for m, f in zip(dist.support, dist.probabilities):
        if f <= 0:
            continue
        acc += f * mod.log_post_expansion_weight(filling, int(m), geometry, thermal)
    return BOLTZMANN * thermal.temperature * acc


def info_work_efficiency(
    filling: Filling, geometry: WellGeometry, thermal: ThermalPoint
) -> float:
    """Ratio of extracted work to erasure cost, in (-inf, 1]."""
    mod = _module_of(filling)
    w_eras = erasure_work(mod.measurement_distribution(filling), thermal)
    if w_eras == 0.0:
        raise UndefinedEfficiencyError(
            "deterministic measurement outcome: erasure work is zero"
        )
    w_tot = mod.total_work(filling, geometry, thermal)
    return w_tot / w_eras


def second_highest_efficiency(alpha: float) -> float:
    """Efficiency of the runner-up configurations, as a function of one weight.

    alpha = (2u-1)/(4u-1) covers the fermion k = 2 and 4u-2 engines;
    alpha = (2s+2)/(4s+3) covers the boson N = 2 engine.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    return 1.0 / (1.0 + (1.0 - alpha) * math.log(1.0 - alpha) / (alpha * math.log(alpha / 2.0)))


@dataclass(frozen=True)
class ExtremalReport:
    """Zero-absorption sets and the extremal-work/efficiency configurations."""

    species: ParticleKind
    zero_absorption: tuple[int, ...]
    max_work_configs: tuple[int, ...]
    max_work_per_kbt: float
    unit_efficiency_configs: tuple[int, ...]
    boson_beats_fermion_max_work: bool = field(default=True)


def extremal_report(spin: SpinStatistics, geometry: WellGeometry) -> ExtremalReport:
    """Summarize where the engine extracts most, absorbs nothing, or runs reversibly.

    Fermion entries index the remainder k in [0, 4u); boson entries index N.
    The boson-over-fermion maximum-work comparison is evaluated, not assumed.
    """
    ln2 = math.log(2.0)
    if spin.kind is ParticleKind.FERMION:
        u = spin.u
        zero = tuple(
            k
            for k in range(4 * u)
            if fermion.work_coefficients(
                fermion.decompose(k, u), geometry
            ).absorbed == 0.0
        )
        max_cfg = tuple(sorted({1, 4 * u - 1}))
        # weakest boson competitor in the scan: the spinless N=2 engine
        boson_best = (2.0 / 3.0) * math.log(3.0)
        return ExtremalReport(
            species=spin.kind,
            zero_absorption=zero,
            max_work_configs=max_cfg,
            max_work_per_kbt=ln2,
            unit_efficiency_configs=max_cfg,
            boson_beats_fermion_max_work=boson_best > ln2,
        )
    s = spin.s
    zero = tuple(
        N
        for N in range(0, 3)
        if boson.work_coefficients(boson.BosonFilling(N=N, s=s), geometry).absorbed == 0.0
    )
    best = (2.0 * s + 2.0) / (4.0 * s + 3.0) * math.log((4.0 * s + 3.0) / (s + 1.0))
    return ExtremalReport(
        species=spin.kind,
        zero_absorption=zero,
        max_work_configs=(2,),
        max_work_per_kbt=best,
        unit_efficiency_configs=(1,),
        boson_beats_fermion_max_work=best > ln2,
    )
