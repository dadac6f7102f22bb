"""Sweep total work against particle number to show the generalized parity effect.

For spin-1/2 fermions the engine alternates between working (odd N) and idle
(even N) cycles. Larger spins stretch that alternation into a period-4u
oscillation, and bosons show no period at all, only a slow drift.
"""
import math

from spinszilard import boson, fermion
from spinszilard.boson import BosonFilling
from spinszilard.core import BOLTZMANN, ThermalPoint, WellGeometry
from spinszilard.fermion import decompose

geometry = WellGeometry(length=1e-9, mass=1e-26)
e0 = geometry.reference_energy
thermal = ThermalPoint(0.05 * e0 / BOLTZMANN)
kbt = BOLTZMANN * thermal.temperature

print(f"T = {thermal.temperature:.4f} K  (k_B T = 0.05 E0)")
print()
print(" N | u=1 fermion | u=5 fermion | s=1 boson   (W_tot / k_B T)")
print("---+-------------+-------------+-----------")
for N in range(1, 25):
    w_half = fermion.total_work(decompose(N, 1), geometry, thermal) / kbt
    w_big = fermion.total_work(decompose(N, 5), geometry, thermal) / kbt
    w_bose = boson.total_work(BosonFilling(N=N, s=1), geometry, thermal) / kbt
    print(f"{N:2d} | {w_half:11.4f} | {w_big:11.4f} | {w_bose:9.4f}")

print()
print("u=1 repeats with period 4, u=5 with period 20: the closed shells at")
print("N = 4un extract nothing, and the best cycles sit at N = 4un +/- 1 where")
print(f"W_tot = k_B T ln 2 = {math.log(2):.4f} k_B T exactly.")
