import math
import random
from fractions import Fraction

import pytest

from sixj import (
    KParityError,
    Parity,
    SpinSextuple,
    asym_alpha,
    asym_beta,
    asym_for_scaled,
    asym_gamma,
    asym_standard,
    beta_decompose,
    dihedral_phase,
    saddle_coeff_a,
    saddle_coeff_b,
    saddle_coeff_c,
    shift_from_components,
    shift_pair,
    tet_from_spins,
    triangle_sums,
)
from oracles import random_admissible

HALF = Fraction(1, 2)
REGULAR_EXT = math.pi - math.acos(1.0 / 3.0)

ALL_ONES = SpinSextuple.of(1, 1, 1, 1, 1, 1)
ALL_HALVES = SpinSextuple.of(*([HALF] * 6))
BETA_EUCLIDEAN = SpinSextuple.of(1, Fraction(3, 2), Fraction(3, 2), Fraction(3, 2), Fraction(3, 2), 1)


class TestSaddleCoefficients:
    def test_all_ones(self):
        t = triangle_sums(ALL_ONES)
        assert saddle_coeff_a(ALL_ONES) == 6
        assert saddle_coeff_b(ALL_ONES) == 44
        assert saddle_coeff_c(t) == 81

    def test_all_halves(self):
        t = triangle_sums(ALL_HALVES)
        assert saddle_coeff_a(ALL_HALVES) == Fraction(3, 2)
        assert saddle_coeff_b(ALL_HALVES) == Fraction(11, 2)
        assert saddle_coeff_c(t) == Fraction(81, 16)

    def test_zero_spin_drops_terms(self):
        s = SpinSextuple.of(1, 1, 1, 0, 1, 1)
        j1, j2, j3, J1, J2, J3 = (x.as_fraction() for x in s.spins)
        p_total = 2 * (j1 + j2 + j3 + J1 + J2 + J3)
        expected = (j2 * J2 + j3 * J3) * p_total + 2 * (j1 * j2 * j3 + j1 * J2 * J3)
        assert saddle_coeff_b(s) == expected


class TestShiftPair:
    def test_alpha_all_ones(self):
        sp = shift_pair(Parity.ALPHA, ALL_ONES)
        assert sp.magnitude == pytest.approx(math.sqrt(1944.0), rel=1e-12)
        assert sp.phase == pytest.approx(math.atan2(math.sqrt(8.0), 44.0), rel=1e-12)

    def test_gamma_negates_alpha_phase(self):
        sp_a = shift_pair(Parity.ALPHA, ALL_HALVES)
        sp_g = shift_pair(Parity.GAMMA, ALL_HALVES)
        assert sp_g.magnitude == sp_a.magnitude
        assert sp_g.phase == -sp_a.phase

    def test_beta_sine_free_case_gives_zero_or_pi(self):
        # with pbar*pbar' == v*v' the sine coefficient vanishes
        sp = shift_from_components(-12.5, 0.0)
        assert sp.phase in (0.0, math.pi)

    def test_shift_identity_on_grid(self):
        rng = random.Random(71)
        for _ in range(50):
            a = rng.uniform(-50, 50)
            b = rng.uniform(-50, 50)
            if a == 0 and b == 0:
                continue
            sp = shift_from_components(a, b)
            for i in range(100):
                x = -6.0 + 12.0 * i / 99.0
                lhs = a * math.cos(x) + b * math.sin(x)
                rhs = sp.magnitude * math.cos(x - sp.phase)
                assert abs(lhs - rhs) <= 1e-12 * sp.magnitude


class TestDihedralPhase:
    def test_regular_standard(self):
        geo = tet_from_spins(ALL_ONES)
        for k in (1, 5, 20):
            assert dihedral_phase("standard", ALL_ONES, k, geo) == pytest.approx(
                (6 * k + 3) * REGULAR_EXT, rel=1e-12
            )

    def test_gamma_no_half_offsets(self):
        geo = tet_from_spins(ALL_HALVES)
        for k in (1, 7, 33):
            assert dihedral_phase("gamma", ALL_HALVES, k, geo) == pytest.approx(
                3 * k * REGULAR_EXT, rel=1e-12
            )

    def test_gamma_angle_step_matches_standard_step(self):
        # both angles advance by 2 sum(j theta + J theta) per k -> k+2
        geo = tet_from_spins(ALL_HALVES)
        spins = [float(x) for x in ALL_HALVES.spins]
        step = 2.0 * sum(j * t for j, t in zip(spins, geo.theta_ext))
        for k in (1, 11, 101):
            d_std = dihedral_phase("standard", ALL_HALVES, k + 2, geo) - dihedral_phase(
                "standard", ALL_HALVES, k, geo
            )
            d_gam = dihedral_phase("gamma", ALL_HALVES, k + 2, geo) - dihedral_phase(
                "gamma", ALL_HALVES, k, geo
            )
            assert d_std == pytest.approx(step, rel=1e-9)
            assert d_gam == pytest.approx(step, rel=1e-9)

    def test_gamma_offset_from_standard_is_half_theta_sum(self):
        rng = random.Random(72)
        for s in random_admissible(rng, parity="gamma", n=40, require_euclidean=True, min_twice=1):
            geo = tet_from_spins(s)
            half_sum = 0.5 * sum(geo.theta_ext)
            for k in (1, 9, 101):
                diff = dihedral_phase("standard", s, k, geo) - dihedral_phase("gamma", s, k, geo)
                assert diff == pytest.approx(half_sum, rel=1e-9)

    def test_beta_offset_is_half_jstar_angle(self):
        rng = random.Random(73)
        for s in random_admissible(rng, parity="beta", n=40, require_euclidean=True, min_twice=1):
            geo = tet_from_spins(s)
            bd = beta_decompose(s, triangle_sums(s))
            for k in (1, 11, 101):
                diff = dihedral_phase("beta", s, k, geo, bd.jstar_slot) - dihedral_phase(
                    "standard", s, k, geo
                )
                assert abs(diff - 0.5 * geo.theta_ext[bd.jstar_slot]) <= 1e-12


class TestAsymStandard:
    def test_regular_amplitude(self):
        geo = tet_from_spins(ALL_ONES)
        res = asym_standard(ALL_ONES, 1, geo)
        assert res.amplitude == pytest.approx(
            1.0 / math.sqrt(12.0 * math.pi * geo.volume), rel=1e-12
        )

    def test_power_law(self):
        geo = tet_from_spins(ALL_ONES)
        a10 = asym_standard(ALL_ONES, 10, geo).amplitude
        for k in (20, 50, 160):
            ak = asym_standard(ALL_ONES, k, geo).amplitude
            assert ak / a10 == pytest.approx((k / 10.0) ** -1.5, rel=1e-12)

    def test_angle_step_linear_in_k(self):
        geo = tet_from_spins(ALL_ONES)
        spins = [float(x) for x in ALL_ONES.spins]
        step = 2.0 * sum(j * t for j, t in zip(spins, geo.theta_ext))
        for k in (3, 10, 40):
            d = asym_standard(ALL_ONES, k + 2, geo).angle - asym_standard(ALL_ONES, k, geo).angle
            assert d == pytest.approx(step, rel=1e-9)

    def test_value_is_amplitude_times_cos(self):
        res = asym_standard(ALL_ONES, 17)
        assert res.value == res.amplitude * math.cos(res.angle)


class TestAsymAlpha:
    def test_two_term_form_equivalence(self):
        rng = random.Random(74)
        for s in random_admissible(rng, parity="alpha", n=30, require_euclidean=True, min_twice=1):
            geo = tet_from_spins(s)
            t = triangle_sums(s)
            b = float(saddle_coeff_b(s))
            v24 = 24.0 * geo.volume
            for k in (1, 5, 12):
                res = asym_alpha(s, k, geo)
                x = 0.25 * math.pi + dihedral_phase("alpha", s, k, geo)
                direct = (b * math.cos(x) + v24 * math.sin(x)) / (
                    math.sqrt(48.0 * math.pi * k * geo.volume)
                    * math.sqrt(float(saddle_coeff_c(t)))
                )
                assert res.value == pytest.approx(direct, rel=1e-12)

    def test_inverse_sqrt_power_law(self):
        geo = tet_from_spins(ALL_ONES)
        a7 = asym_alpha(ALL_ONES, 7, geo).amplitude
        for k in (14, 63, 175):
            assert asym_alpha(ALL_ONES, k, geo).amplitude / a7 == pytest.approx(
                (k / 7.0) ** -0.5, rel=1e-12
            )

    def test_regular_amplitude_value(self):
        geo = tet_from_spins(ALL_ONES)
        res = asym_alpha(ALL_ONES, 1, geo)
        expected = math.sqrt(1944.0) / (math.sqrt(48.0 * math.pi * geo.volume) * 9.0)
        assert res.amplitude == pytest.approx(expected, rel=1e-12)

    def test_odd_k_requires_alpha(self):
        with pytest.raises(KParityError):
            asym_alpha(ALL_HALVES, 3)


class TestAsymGamma:
    def test_sign_from_quadrangle_sum(self):
        geo = tet_from_spins(ALL_HALVES)
        res = asym_gamma(ALL_HALVES, 21, geo)
        # sum p = 6, so the sign is negative: angle carries a pi offset
        base = 0.25 * math.pi + dihedral_phase("gamma", ALL_HALVES, 21, geo) + shift_pair(
            Parity.ALPHA, ALL_HALVES, geo=geo
        ).phase
        assert res.angle == pytest.approx(base + math.pi, rel=1e-12)

    def test_amplitude_uses_triangle_product(self):
        geo = tet_from_spins(ALL_HALVES)
        t = triangle_sums(ALL_HALVES)
        res = asym_gamma(ALL_HALVES, 9, geo)
        n_alpha = shift_pair(Parity.ALPHA, ALL_HALVES, geo=geo).magnitude
        expected = n_alpha / (
            math.sqrt(48.0 * math.pi * 9 * geo.volume) * math.sqrt(float(saddle_coeff_c(t)))
        )
        assert res.amplitude == pytest.approx(expected, rel=1e-12)

    def test_even_k_rejected(self):
        with pytest.raises(KParityError):
            asym_gamma(ALL_HALVES, 4)

    def test_power_law(self):
        geo = tet_from_spins(ALL_HALVES)
        a21 = asym_gamma(ALL_HALVES, 21, geo).amplitude
        for k in (63, 189):
            assert asym_gamma(ALL_HALVES, k, geo).amplitude / a21 == pytest.approx(
                (k / 21.0) ** -0.5, rel=1e-12
            )


class TestAsymBeta:
    def test_even_k_rejected(self):
        with pytest.raises(KParityError):
            asym_beta(BETA_EUCLIDEAN, 8)

    def test_sign_parity(self):
        t = triangle_sums(BETA_EUCLIDEAN)
        bd = beta_decompose(BETA_EUCLIDEAN, t)
        assert int(bd.v + bd.v_prime - bd.p) % 2 == 1  # 4 + 4 - 5
        geo = tet_from_spins(BETA_EUCLIDEAN)
        res = asym_beta(BETA_EUCLIDEAN, 21, geo)
        sp = shift_pair(Parity.BETA, BETA_EUCLIDEAN, t, bd, geo=geo)
        base = (
            0.25 * math.pi
            + dihedral_phase("beta", BETA_EUCLIDEAN, 21, geo, bd.jstar_slot)
            - sp.phase
        )
        assert res.angle == pytest.approx(base + math.pi, rel=1e-12)

    def test_pre_shift_two_term_form(self):
        geo = tet_from_spins(BETA_EUCLIDEAN)
        t = triangle_sums(BETA_EUCLIDEAN)
        bd = beta_decompose(BETA_EUCLIDEAN, t)
        w = bd.pbar.as_fraction() * bd.pbar_prime.as_fraction() - bd.v.as_fraction() * bd.v_prime.as_fraction()
        u = bd.v.as_fraction() + bd.v_prime.as_fraction() - bd.pbar.as_fraction() - bd.pbar_prime.as_fraction()
        a = 2.0 * float(saddle_coeff_c(t)) * float(u) + float(saddle_coeff_b(BETA_EUCLIDEAN)) * float(w)
        b = 24.0 * geo.volume * float(w)
        sp = shift_pair(Parity.BETA, BETA_EUCLIDEAN, t, bd, geo=geo)
        for x in (0.3, 1.7, 4.1):
            assert a * math.cos(x) + b * math.sin(x) == pytest.approx(
                sp.magnitude * math.cos(x - sp.phase), rel=1e-11
            )

    def test_power_law(self):
        geo = tet_from_spins(BETA_EUCLIDEAN)
        a21 = asym_beta(BETA_EUCLIDEAN, 21, geo).amplitude
        for k in (63, 189):
            assert asym_beta(BETA_EUCLIDEAN, k, geo).amplitude / a21 == pytest.approx(
                (k / 21.0) ** -0.5, rel=1e-12
            )


class TestRouting:
    def test_even_k_routes_to_alpha(self):
        for s in (ALL_HALVES, BETA_EUCLIDEAN):
            res = asym_for_scaled(s, 6)
            assert res.parity_used == "alpha"

    def test_odd_k_keeps_parity(self):
        assert asym_for_scaled(ALL_HALVES, 7).parity_used == "gamma"
        assert asym_for_scaled(BETA_EUCLIDEAN, 7).parity_used == "beta"
        assert asym_for_scaled(ALL_ONES, 7).parity_used == "alpha"


class TestPointwiseConvergence:
    """Exact/asymptotic agreement on tetrahedra with non-regular angles.

    The all-equal-angle cases cannot detect a permuted edge-to-angle mapping;
    these sextuples have distinct exterior angles per edge, so pointwise
    ratios near 1 pin the mapping as well as the amplitudes.
    """

    def test_standard_scalene(self):
        from sixj import sixj_exact

        s = SpinSextuple.of(3, 4, 5, 4, 5, 3)  # six distinct exterior angles
        geo = tet_from_spins(s)
        assert len({round(t, 9) for t in geo.theta_ext}) == 6
        for k in (101, 301):
            ratio = asym_standard(s, k, geo).value / float(sixj_exact(s.scaled(k)))
            assert abs(ratio - 1.0) < 0.01

    def test_alpha_scalene(self):
        from sixj import sixj_super_exact

        s = SpinSextuple.of(3, 4, 5, 4, 5, 3)
        geo = tet_from_spins(s)
        for k in (101, 301):
            ratio = asym_alpha(s, k, geo).value / float(sixj_super_exact(s.scaled(k)))
            assert abs(ratio - 1.0) < 0.01

    def test_gamma_non_regular(self):
        from sixj import sixj_super_exact

        s = SpinSextuple.of(HALF, 1, 1, HALF, 1, 1)
        geo = tet_from_spins(s)
        for k in (101, 301):
            ratio = asym_gamma(s, k, geo).value / float(sixj_super_exact(s.scaled(k)))
            assert abs(ratio - 1.0) < 0.01

    def test_beta_pointwise(self):
        from sixj import sixj_super_exact

        geo = tet_from_spins(BETA_EUCLIDEAN)
        for k in (151, 301):
            ratio = asym_beta(BETA_EUCLIDEAN, k, geo).value / float(
                sixj_super_exact(BETA_EUCLIDEAN.scaled(k))
            )
            assert abs(ratio - 1.0) < 0.02
