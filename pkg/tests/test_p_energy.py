"""p-energy classification, thresholds, the explicit negative direction,
and the weighted Hardy quadrature checks."""

import math
from fractions import Fraction

import numpy as np
import pytest

from equator_stability.p_energy import (
    PParams,
    alternate_ell_bound,
    classify_p,
    hessian_quadratic_form,
    instability_witness,
    mu,
    p_dimension_threshold,
    p_ell_threshold,
    p_ratio,
    radial_hardy_check,
    sphere_volume,
)
from equator_stability.stability import Regime, classify_k


class TestParams:
    def test_domain_violations(self):
        with pytest.raises(ValueError, match="m <= p"):
            PParams(1, 2, Fraction(2))
        with pytest.raises(ValueError, match="at least 2"):
            PParams(1, 5, Fraction(3, 2))
        with pytest.raises(ValueError):
            PParams(6, 5, Fraction(2))

    def test_p_coerced_to_fraction(self):
        params = PParams(1, 7, 2)
        assert params.p == Fraction(2)
        assert params.gradient_constant == 6


class TestRatioAndClassification:
    def test_ratio_values(self):
        assert p_ratio(PParams(1, 7, 2)) == Fraction(25, 24)
        assert p_ratio(PParams(1, 6, 2)) == Fraction(4, 5)
        assert p_ratio(PParams(2, 12, 2)) == Fraction(25, 24)

    def test_classification(self):
        assert classify_p(PParams(1, 7, 2)).regime is Regime.MINIMIZING
        assert classify_p(PParams(1, 6, 2)).regime is Regime.UNSTABLE
        assert classify_p(PParams(2, 12, 2)).regime is Regime.MINIMIZING

    def test_agrees_with_order_one_energy_at_p_two(self):
        for ell in range(1, 11):
            for m in range(3, 61):
                if ell > m:
                    continue
                assert (classify_p(PParams(ell, m, 2)).regime
                        is classify_k(1, ell, m).regime)


class TestThresholds:
    def test_dimension_threshold_values(self):
        assert p_dimension_threshold(1, 2) == pytest.approx(4 + 2 * math.sqrt(2))
        assert p_dimension_threshold(1, 4) == pytest.approx(10.0)
        assert p_dimension_threshold(2, 2) == pytest.approx(6 + 4 * math.sqrt(2))

    def test_level_one_threshold_closed_form(self):
        for p in (2, 3, 4):
            assert abs(p_dimension_threshold(1, p) - (2 + p + 2 * math.sqrt(p))) < 1e-12

    def test_p_two_threshold_matches_harmonic_closed_form(self):
        from equator_stability.stability import harmonic_threshold_closed_form

        for ell in range(1, 11):
            assert abs(p_dimension_threshold(ell, 2)
                       - harmonic_threshold_closed_form(ell)) < 1e-12

    def test_dimension_threshold_is_the_crossing(self):
        for ell in (1, 2, 3, 4):
            for p in (Fraction(2), Fraction(5, 2), Fraction(3), Fraction(4)):
                m = max(int(p) + 1, ell)
                while p_ratio(PParams(ell, m, p)) < 1:
                    m += 1
                threshold = p_dimension_threshold(ell, p)
                assert m == math.ceil(threshold - 1e-9)

    def test_ell_threshold_values(self):
        assert p_ell_threshold(12, 2) == pytest.approx(0.5 * (-10 + math.sqrt(200)))
        # also the positive root of ell^2 + 5*ell - 25/4 = 0 (ratio = 1)
        assert p_ell_threshold(7, 2) == pytest.approx(0.5 * (-5 + math.sqrt(50)))
        assert classify_p(PParams(2, 12, 2)).regime is Regime.MINIMIZING
        assert classify_p(PParams(3, 12, 2)).regime is Regime.UNSTABLE
        assert p_ratio(PParams(3, 12, 2)) == Fraction(100, 156)

    def test_ell_threshold_separates(self):
        for m in range(4, 41):
            for p in (Fraction(2), Fraction(5, 2), Fraction(3)):
                if not m > p:
                    continue
                bound = p_ell_threshold(m, p)
                for ell in range(1, m + 1):
                    regime = classify_p(PParams(ell, m, p)).regime
                    if ell < bound - 1e-9:
                        assert regime is Regime.MINIMIZING
                    elif ell > bound + 1e-9:
                        assert regime is Regime.UNSTABLE

    def test_alternate_bound_is_never_sharper(self):
        for m in range(3, 41):
            for p in range(2, m):
                assert alternate_ell_bound(m, p) >= p_ell_threshold(m, p) - 1e-15


class TestDiscriminant:
    def test_values(self):
        assert mu(PParams(1, 7, 2)) == Fraction(1, 4)
        assert mu(PParams(1, 6, 2)) == -1
        assert mu(PParams(1, 5, 2)) == Fraction(-7, 4)

    def test_epsilon_shift(self):
        assert mu(PParams(1, 6, 2), Fraction(1, 2)) == Fraction(-1, 2)
        with pytest.raises(ValueError):
            mu(PParams(1, 6, 2), -1)


class TestWitness:
    def test_known_cases(self):
        w = instability_witness(PParams(1, 5, 2))
        assert w.mu == pytest.approx(-7 / 8)
        assert w.epsilon == pytest.approx(7 / 8)
        assert w.r0 == pytest.approx(math.exp(-math.pi / math.sqrt(7 / 8)))
        assert w.hessian_value < 0

        w = instability_witness(PParams(1, 6, 2))
        assert w.mu == pytest.approx(-0.5)
        assert w.epsilon == pytest.approx(0.5)
        assert w.r0 == pytest.approx(math.exp(-math.pi * math.sqrt(2)))
        assert w.hessian_value < 0

    def test_minimizing_range_refuses(self):
        with pytest.raises(ValueError, match="no negative direction"):
            instability_witness(PParams(1, 7, 2))

    def test_profile_vanishes_at_both_ends(self):
        w = instability_witness(PParams(2, 8, Fraction(5, 2)))
        assert w.samples[0][0] == pytest.approx(w.r0)
        assert w.samples[-1][0] == 1.0
        assert abs(w.samples[0][1]) < 1e-12
        assert abs(w.samples[-1][1]) < 1e-12

    def test_full_grid_matches_analytic_mass(self):
        # Independent oracle: substituting t = ln r gives
        # integral(v^2 r^(m-p-1)) = pi / (2 sqrt(-mu)), so the Hessian is
        # -eps * vol(S^(m-1)) * lam^((p-2)/2) * pi / (2 sqrt(-mu)).
        for ell in range(1, 5):
            for m in range(3, 13):
                if ell > m:
                    continue
                for p in (Fraction(2), Fraction(5, 2), Fraction(3)):
                    if not m > p:
                        continue
                    params = PParams(ell, m, p)
                    if p_ratio(params) >= 1:
                        continue
                    w = instability_witness(params)
                    assert w.hessian_value < 0
                    omega = math.sqrt(-w.mu)
                    lam = params.gradient_constant
                    analytic = (-w.epsilon * sphere_volume(m)
                                * lam ** ((float(p) - 2) / 2) * math.pi / (2 * omega))
                    assert w.hessian_value == pytest.approx(analytic, rel=1e-6)
                    assert w.closed_form_value == pytest.approx(analytic, rel=1e-6)


class TestStabilitySide:
    def test_quadratic_form_nonnegative_when_minimizing(self):
        rng = np.random.default_rng(5)
        for params in (PParams(1, 8, 2), PParams(1, 10, 3), PParams(2, 13, 2)):
            assert p_ratio(params) >= 1
            for _ in range(50):
                a, b = sorted(float(u) for u in rng.uniform(0.0, 1.0, 2))
                if a == b:
                    continue

                def v(r, a=a, b=b):
                    return (r - a) ** 2 * (b - r) ** 2 if a < r < b else 0.0

                def v_prime(r, a=a, b=b):
                    return 2 * (r - a) * (b - r) * (a + b - 2 * r) if a < r < b else 0.0

                assert hessian_quadratic_form(params, v, v_prime, a, b) >= -1e-9

    def test_quadratic_form_on_oscillating_family_when_minimizing(self):
        # The truncated oscillating profiles themselves give a non-negative
        # form once the ratio is at least one, for any frequency.
        for params in (PParams(1, 8, 2), PParams(1, 10, 3)):
            q = (float(params.p) - params.m) / 2.0
            for omega in (0.5, 1.0, 3.0):
                r0 = math.exp(-math.pi / omega)

                def v(r, q=q, omega=omega, r0=r0):
                    return r ** q * math.sin(omega * math.log(r)) if r > r0 else 0.0

                def v_prime(r, q=q, omega=omega, r0=r0):
                    if r <= r0:
                        return 0.0
                    t = math.log(r)
                    return r ** (q - 1) * (q * math.sin(omega * t)
                                           + omega * math.cos(omega * t))

                assert hessian_quadratic_form(params, v, v_prime, r0, 1.0) >= -1e-9


class TestHardyCheck:
    def test_reference_pairs(self):
        report = radial_hardy_check(7, 2, 50, seed=2024)
        assert report.passed and report.min_quotient >= 25 / 4
        report = radial_hardy_check(10, 3, 50, seed=2024)
        assert report.passed and report.min_quotient >= 49 / 4
        report = radial_hardy_check(9, Fraction(5, 2), 50, seed=2024)
        assert report.passed and report.min_quotient >= float((9 - Fraction(5, 2)) ** 2 / 4)

    def test_zero_trials_passes_vacuously(self):
        report = radial_hardy_check(7, 2, 0, seed=1)
        assert report.passed and math.isinf(report.min_quotient)

    def test_reproducible(self):
        a = radial_hardy_check(7, 2, 20, seed=9)
        b = radial_hardy_check(7, 2, 20, seed=9)
        assert a == b

    def test_domain_checked(self):
        with pytest.raises(ValueError, match="m <= p"):
            radial_hardy_check(2, 2, 10, seed=0)
