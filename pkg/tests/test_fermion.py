import math

import pytest

from spinszilard import fermion
from spinszilard.core import BOLTZMANN, ThermalPoint, WellGeometry
from spinszilard.fermion import FermionFilling, FillingCase, decompose

GEOM = WellGeometry(length=1e-9, mass=1e-26)
E0 = GEOM.reference_energy


def thermal_at(kbt_over_e0: float) -> ThermalPoint:
    return ThermalPoint(kbt_over_e0 * E0 / BOLTZMANN)


def test_decompose():
    f = decompose(23, 5)
    assert (f.n, f.k) == (1, 3)
    assert f.case is FillingCase.PARTICLE
    g = decompose(37, 5)
    assert (g.n, g.k) == (1, 17)
    assert g.case is FillingCase.HOLE
    with pytest.raises(ValueError):
        decompose(-1, 5)
    with pytest.raises(ValueError):
        decompose(3, 0)


def test_support_particle_case():
    f = decompose(23, 5)  # n=1, k=3: 10..13
    assert list(f.support) == [10, 11, 12, 13]


def test_support_hole_case():
    f = decompose(3, 1)  # u=1, k=3 >= 2u: support {1, 2}
    assert list(f.support) == [1, 2]
    g = decompose(37, 5)  # n=1, k=17: 10+7 .. 20
    assert list(g.support) == list(range(17, 21))


def test_distribution_normalized_and_symmetric():
    for N, u in [(3, 5), (23, 5), (37, 5), (3, 1), (120, 3)]:
        dist = fermion.measurement_distribution(decompose(N, u))
        assert dist.total() == pytest.approx(1.0, abs=1e-12)
        probs = dist.probabilities
        for i in range(len(probs)):
            assert probs[i] == pytest.approx(probs[len(probs) - 1 - i], rel=1e-12)


def test_distribution_spot_values():
    # u=5, N=3: f over m in 0..3 is [120, 450, 450, 120] / 1140
    dist = fermion.measurement_distribution(decompose(3, 5))
    assert dist.probability(0) == pytest.approx(120 / 1140, rel=1e-14)
    assert dist.probability(1) == pytest.approx(450 / 1140, rel=1e-14)
    # u=1, N=3 (hole case, one hole): uniform over {1, 2}
    dist = fermion.measurement_distribution(decompose(3, 1))
    assert dist.probability(1) == pytest.approx(0.5, rel=1e-14)
    assert dist.probability(2) == pytest.approx(0.5, rel=1e-14)


def test_post_expansion_boundary_outcomes_are_unity():
    filling = decompose(3, 5)
    t = thermal_at(0.1)
    assert fermion.post_expansion_weight(filling, 0, GEOM, t) == pytest.approx(1.0)
    assert fermion.post_expansion_weight(filling, 3, GEOM, t) == pytest.approx(1.0)


def test_post_expansion_known_value():
    """u=5, N=3, m=1 at the temperature where beta*deltaE = 1: 3.75/e."""
    filling = decompose(3, 5)
    delta_e = 1.0371860388828955e-23
    t = ThermalPoint(delta_e / BOLTZMANN)
    value = fermion.post_expansion_weight(filling, 1, GEOM, t)
    assert value == pytest.approx(3.75 * math.exp(-1.0), rel=1e-9)


def test_post_expansion_central_branch_is_temperature_free():
    filling = decompose(2, 1)  # k=2, central outcome m=1
    a = fermion.post_expansion_weight(filling, 1, GEOM, thermal_at(0.01))
    b = fermion.post_expansion_weight(filling, 1, GEOM, thermal_at(1.0))
    assert a == b == pytest.approx(4 / 6, rel=1e-14)


def test_log_post_expansion_survives_deep_low_temperature():
    filling = decompose(3, 5)
    log_star = fermion.log_post_expansion_weight(filling, 1, GEOM, thermal_at(1e-4))
    assert math.isfinite(log_star)
    assert log_star < -1e3


def test_post_expansion_rejects_off_support():
    with pytest.raises(ValueError):
        fermion.post_expansion_weight(decompose(3, 1), 0, GEOM, thermal_at(0.1))


def test_work_coefficients_spot_u5_n3():
    coeffs = fermion.work_coefficients(decompose(3, 5), GEOM)
    assert coeffs.slope == pytest.approx(2.2512917986064953, rel=1e-12)
    assert coeffs.absorbed == pytest.approx(8.188310833286018e-24, rel=1e-12)


def test_work_coefficients_single_hole():
    # u=1, N=3: one hole, D = ln 2, no absorption
    coeffs = fermion.work_coefficients(decompose(3, 1), GEOM)
    assert coeffs.slope == pytest.approx(math.log(2), rel=1e-14)
    assert coeffs.absorbed == 0.0


def test_work_coefficients_closed_shell():
    coeffs = fermion.work_coefficients(decompose(20, 5), GEOM)
    assert coeffs.slope == 0.0
    assert coeffs.absorbed == 0.0


def test_hole_particle_coefficient_symmetry():
    for u in (1, 2, 5):
        for k in range(4 * u):
            a = fermion.work_coefficients(decompose(k, u), GEOM)
            b = fermion.work_coefficients(decompose(4 * u - k, u), GEOM)
            assert a.slope == b.slope
    # absorbed work differs between k and 4u-k at n=0 (different well loads),
    # but the slope is an exact mirror


def test_total_work_matches_relative_entropy_form():
    for N, u in [(3, 5), (5, 2), (23, 5), (7, 1), (37, 5)]:
        filling = decompose(N, u)
        for kbt in (0.01, 0.05):
            t = thermal_at(kbt)
            closed = fermion.total_work(filling, GEOM, t)
            direct = fermion.relative_entropy_work(filling, GEOM, t)
            assert direct == pytest.approx(closed, rel=1e-10, abs=1e-40)


def test_average_absorbed_work():
    filling = decompose(23, 5)
    coeffs = fermion.work_coefficients(filling, GEOM)
    assert fermion.average_absorbed_work(filling, GEOM) == pytest.approx(
        coeffs.absorbed / 23, rel=1e-14
    )
    with pytest.raises(ValueError):
        fermion.average_absorbed_work(decompose(0, 5), GEOM)


def test_average_limit_symmetry_and_zeroes():
    for u in (1, 3, 5):
        for k in range(1, 4 * u):
            assert fermion.average_absorbed_work_limit(
                u, k, GEOM
            ) == fermion.average_absorbed_work_limit(u, (4 * u - k) % (4 * u), GEOM)
    assert fermion.average_absorbed_work_limit(5, 0, GEOM) == 0.0
    assert fermion.average_absorbed_work_limit(5, 1, GEOM) == 0.0
    assert fermion.average_absorbed_work_limit(5, 2, GEOM) == 0.0


def test_average_limit_spot_value():
    # frozen from the closed form at u=5, k=3
    assert fermion.average_absorbed_work_limit(5, 3, GEOM) == pytest.approx(
        1.733084430746778e-25, rel=1e-12
    )


def test_average_limit_domain():
    with pytest.raises(ValueError):
        fermion.average_absorbed_work_limit(0, 1, GEOM)
    with pytest.raises(ValueError):
        fermion.average_absorbed_work_limit(5, 20, GEOM)
