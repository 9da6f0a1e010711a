import math

import numpy as np
import pytest

from conftest import random_chamber_chart, random_spectrum
from ncdist import (
    MetricConvention,
    NoConvergence,
    OutOfChamber,
    QutritChart,
    Region,
    Spectrum,
    bruteforce_project,
    chart_from_spectrum,
    distance_general,
    kernel_from_spectrum,
    project_to_classical,
    qutrit_distance,
    qutrit_kernel,
    random_kernel,
    spectrum_from_chart,
    wigner_floor,
)
from ncdist.distance import _dykstra

SQRT3 = math.sqrt(3.0)
ZETA_MAX = math.pi / 3.0


def frobenius_gap(a: Spectrum, b: Spectrum) -> float:
    return math.sqrt(math.fsum((x - y) ** 2 for x, y in zip(a.values, b.values)))


class TestQutritDistance:
    def test_classical_origin(self):
        res = qutrit_distance(QutritChart(0.0, 0.0), 0.4)
        assert res.distance_paper == 0.0
        assert res.region is Region.OQR
        assert res.classical

    def test_corner_b_at_zeta_zero(self):
        res = qutrit_distance(QutritChart(SQRT3 / 2, 0.5), 0.0)
        assert res.distance_paper == pytest.approx(0.75, abs=1e-12)
        assert res.region is Region.BRS
        assert (res.nearest_chart.xi3, res.nearest_chart.xi8) == pytest.approx(
            (SQRT3 / 8, 0.125), abs=1e-12
        )

    def test_band_point_at_zeta_zero(self):
        c = chart_from_spectrum(Spectrum((0.7, 0.2, 0.1)))
        res = qutrit_distance(c, 0.0)
        assert res.distance_paper == pytest.approx(0.3, abs=1e-12)
        assert res.region is Region.QRST
        assert (res.nearest_chart.xi3, res.nearest_chart.xi8) == pytest.approx(
            (0.1732051, 0.2), abs=1e-6
        )
        assert res.nearest.values == pytest.approx((0.5, 0.3, 0.2), abs=1e-12)

    def test_corner_a_at_zeta_pi_third(self):
        res = qutrit_distance(QutritChart(0.0, 0.5), ZETA_MAX)
        assert res.distance_paper == pytest.approx(0.25, abs=1e-12)
        assert res.region is Region.AQT
        assert (res.nearest_chart.xi3, res.nearest_chart.xi8) == pytest.approx(
            (0.0, 0.25), abs=1e-12
        )

    def test_conventions_scale_by_metric_factor(self):
        rng = np.random.default_rng(51)
        for _ in range(200):
            res = qutrit_distance(random_chamber_chart(rng), float(rng.random()) * ZETA_MAX)
            assert res.distance_paper == pytest.approx(
                math.sqrt(1.5) * res.distance_frobenius, abs=1e-12
            )

    def test_classical_iff_zero_distance_iff_floor(self):
        rng = np.random.default_rng(52)
        for _ in range(2000):
            res = qutrit_distance(random_chamber_chart(rng), float(rng.random()) * ZETA_MAX)
            assert res.classical == (res.distance_paper == 0.0)
            assert res.classical == (res.floor >= -1e-12)

    def test_rejects_out_of_chamber(self):
        with pytest.raises(OutOfChamber):
            qutrit_distance(QutritChart(0.5, 0.1), 0.2)


class TestProjectToClassical:
    def test_classical_input_returned_exactly(self):
        r = Spectrum((0.4, 0.35, 0.25))
        k = qutrit_kernel(0.0)
        assert wigner_floor(r, k) >= 0
        assert project_to_classical(r, k) is r

    def test_band_point_lands_on_closed_form_foot(self):
        r = Spectrum((0.7, 0.2, 0.1))
        got = project_to_classical(r, qutrit_kernel(0.0))
        assert got.values == pytest.approx((0.5, 0.3, 0.2), abs=1e-8)

    def test_pure_state_lands_on_r_corner(self):
        got = project_to_classical(Spectrum((1.0, 0.0, 0.0)), qutrit_kernel(0.0))
        assert got.values == pytest.approx((0.5, 0.25, 0.25), abs=1e-8)
        brute = bruteforce_project(Spectrum((1.0, 0.0, 0.0)), qutrit_kernel(0.0))
        assert got.values == pytest.approx(brute.values, abs=1e-8)

    def test_result_is_feasible(self):
        rng = np.random.default_rng(53)
        for _ in range(300):
            n = int(rng.integers(2, 6))
            r = random_spectrum(rng, n)
            k = random_kernel(n, int(rng.integers(0, 1 << 30)))
            x = project_to_classical(r, k)
            assert wigner_floor(x, k) >= -1e-9
            assert all(a >= b for a, b in zip(x.values, x.values[1:]))

    def test_raises_with_tiny_cycle_cap(self):
        with pytest.raises(NoConvergence):
            project_to_classical(
                Spectrum((1.0, 0.0, 0.0)), qutrit_kernel(0.0), max_cycles=1
            )

    def test_dykstra_loop_agrees_with_closed_form_without_shortcuts(self):
        """Exercise the raw iteration on band points, bypassing the
        classical fast return."""
        rng = np.random.default_rng(54)
        checked = 0
        while checked < 50:
            c = random_chamber_chart(rng)
            z = float(rng.random()) * ZETA_MAX
            closed = qutrit_distance(c, z)
            if closed.region is not Region.QRST:
                continue
            checked += 1
            r = spectrum_from_chart(c)
            k = qutrit_kernel(z)
            x = _dykstra(r.values, k.values[::-1], 1e-12, 100_000)
            assert x == pytest.approx(closed.nearest.values, abs=1e-9)


class TestBruteforceProject:
    def test_classical_input_is_fixed_point(self):
        r = Spectrum((0.4, 0.35, 0.25))
        assert bruteforce_project(r, qutrit_kernel(0.0)).values == pytest.approx(
            r.values, abs=1e-12
        )

    def test_matches_dykstra_on_band_example(self):
        r = Spectrum((0.7, 0.2, 0.1))
        k = qutrit_kernel(0.0)
        assert bruteforce_project(r, k).values == pytest.approx(
            project_to_classical(r, k).values, abs=1e-10
        )

    def test_matches_dykstra_on_pure_state(self):
        r = Spectrum((1.0, 0.0, 0.0))
        k = qutrit_kernel(ZETA_MAX)
        assert bruteforce_project(r, k).values == pytest.approx(
            project_to_classical(r, k).values, abs=1e-10
        )

    def test_oracle_equivalence_across_dimensions(self):
        rng = np.random.default_rng(55)
        for n in (2, 3, 4, 5):
            for _ in range(50):
                r = random_spectrum(rng, n)
                k = random_kernel(n, int(rng.integers(0, 1 << 30)))
                d1 = frobenius_gap(r, project_to_classical(r, k))
                d2 = frobenius_gap(r, bruteforce_project(r, k))
                assert abs(d1 - d2) <= 1e-8


class TestDistanceGeneral:
    def test_maximally_mixed_is_classical(self):
        for n in range(2, 7):
            res = distance_general(Spectrum((1.0 / n,) * n), random_kernel(n, n))
            assert res.distance_paper == 0.0
            assert res.classical

    def test_qutrit_band_example(self):
        res = distance_general(Spectrum((0.7, 0.2, 0.1)), qutrit_kernel(0.0))
        assert res.distance_paper == pytest.approx(0.3, abs=1e-9)
        assert res.region is Region.QRST
        assert res.floor == pytest.approx(-0.4, abs=1e-12)

    def test_pure_qubit_state(self):
        k = kernel_from_spectrum(((1 + SQRT3) / 2, (1 - SQRT3) / 2), 2)
        res = distance_general(Spectrum((1.0, 0.0)), k, MetricConvention.FROBENIUS)
        expected = math.sqrt(2.0) * (3 - SQRT3) / 6  # gap to the tangent state
        assert res.distance_frobenius == pytest.approx(expected, abs=1e-9)
        assert res.distance_frobenius > 0
        brute = bruteforce_project(Spectrum((1.0, 0.0)), k)
        assert res.nearest.values == pytest.approx(brute.values, abs=1e-8)
        assert res.distance is res.distance_frobenius

    def test_agrees_with_closed_form(self):
        rng = np.random.default_rng(56)
        for _ in range(500):
            c = random_chamber_chart(rng)
            z = float(rng.random()) * ZETA_MAX
            d1 = qutrit_distance(c, z).distance_paper
            d2 = distance_general(spectrum_from_chart(c), qutrit_kernel(z)).distance_paper
            assert abs(d1 - d2) <= 1e-8

    def test_zero_exactly_on_classical_set(self):
        rng = np.random.default_rng(57)
        for _ in range(500):
            n = int(rng.integers(2, 6))
            r = random_spectrum(rng, n)
            k = random_kernel(n, int(rng.integers(0, 1 << 30)))
            res = distance_general(r, k)
            assert res.classical == (res.floor >= -1e-12)
            assert res.classical == (res.distance_paper == 0.0)

    def test_nearest_point_is_classical(self):
        rng = np.random.default_rng(58)
        for _ in range(300):
            n = int(rng.integers(2, 6))
            r = random_spectrum(rng, n)
            k = random_kernel(n, int(rng.integers(0, 1 << 30)))
            res = distance_general(r, k)
            assert wigner_floor(res.nearest, k) >= -1e-9

    def test_one_lipschitz(self):
        rng = np.random.default_rng(59)
        for _ in range(300):
            n = int(rng.integers(2, 6))
            r1 = random_spectrum(rng, n)
            r2 = random_spectrum(rng, n)
            k = random_kernel(n, int(rng.integers(0, 1 << 30)))
            d1 = distance_general(r1, k).distance_frobenius
            d2 = distance_general(r2, k).distance_frobenius
            assert abs(d1 - d2) <= frobenius_gap(r1, r2) + 1e-9

    def test_continuity_in_zeta(self):
        c = QutritChart(0.4, 0.45)
        steps = 400
        h = ZETA_MAX / steps
        prev = qutrit_distance(c, 0.0).distance_paper
        for i in range(1, steps + 1):
            cur = qutrit_distance(c, i * h).distance_paper
            assert abs(cur - prev) <= 10 * h
            prev = cur

    def test_region_consistency_between_paths(self):
        rng = np.random.default_rng(60)
        for _ in range(500):
            c = random_chamber_chart(rng)
            z = float(rng.random()) * ZETA_MAX
            closed = qutrit_distance(c, z)
            general = distance_general(spectrum_from_chart(c), qutrit_kernel(z))
            assert closed.region is general.region
