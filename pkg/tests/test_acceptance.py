"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest -v -s tests/test_acceptance.py`` to see one line per
criterion; stated runtime budgets are asserted where they apply.
"""

import math
import time
from fractions import Fraction

import numpy as np

from equator_stability import (
    PParams,
    Regime,
    appendix_verify,
    build_radial_map,
    classify_k,
    classify_p,
    diagonal_verdict,
    eval_map,
    fd_energy_density,
    fd_laplacian,
    instability_witness,
    p_dimension_threshold,
    p_ell_threshold,
    alternate_ell_bound,
    p_ratio,
    q_at_con_bound,
    q_poly,
    q_poly_shifted_form,
    radial_hardy_check,
    random_points,
    sphere_volume,
    threshold_m,
    upper_bound_m,
    verify_delta_power,
    verify_energy_density,
    verify_k_harmonic,
    verify_tangency,
    verify_unit_norm,
)
from equator_stability.cli import run

TABLE = {
    1: [7, 12, 17, 22, 27, 31, 36, 41, 46, 51],
    2: [10, 15, 20, 25, 30, 35, 39, 44, 49, 54],
    3: [12, 18, 23, 28, 33, 38, 43, 47, 52, 57],
    4: [15, 20, 25, 31, 36, 41, 46, 50, 55, 60],
}


def _report(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


def test_c1_table_reproduction(capsys):
    start = time.perf_counter()
    code = run(["table", "--kmax", "4", "--ellmax", "10", "--format", "csv"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "k,ell,m_star"
    values = {}
    for row in rows[1:]:
        k, ell, m_star = (int(part) for part in row.split(","))
        values.setdefault(k, {})[ell] = m_star
    for k, expected in TABLE.items():
        assert [values[k][ell] for ell in range(1, 11)] == expected
    assert elapsed < 5.0
    with capsys.disabled():
        _report("criterion 1 (table reproduction)")


def test_c2_classical_anchors():
    for m in range(3, 30):
        verdict = classify_k(1, 1, m)
        expected = Regime.MINIMIZING if m >= 7 else Regime.UNSTABLE
        assert verdict.regime is expected
    for m in range(5, 30):
        verdict = classify_k(2, 1, m)
        expected = Regime.MINIMIZING if m >= 10 else Regime.UNSTABLE
        assert verdict.regime is expected
    _report("criterion 2 (classical anchors)")


def test_c3_symbolic_identity_suite():
    start = time.perf_counter()
    for m in range(2, 6):
        for ell in range(1, m + 1):
            tensor = build_radial_map(ell, m)
            assert verify_unit_norm(tensor)
            assert verify_tangency(tensor)
            assert verify_energy_density(tensor)
            for k in (1, 2, 3):
                assert verify_delta_power(tensor, k)
                assert verify_k_harmonic(tensor, k)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _report(f"criterion 3 (symbolic identity suite, {elapsed:.1f}s)")


def test_c4_closed_form_golden():
    for ell in range(1, 21):
        assert 16 * q_poly(2, ell, 5 * (ell + 1)) == (
            25 + 204 * ell + 334 * ell ** 2 - 36 * ell ** 3 + 49 * ell ** 4)
        assert 256 * q_poly(4, ell, 11 + 5 * ell) == (
            12006225 + 64479240 * ell + 132331788 * ell ** 2
            + 131725656 * ell ** 3 + 66283606 * ell ** 4 + 15832440 * ell ** 5
            + 1765612 * ell ** 6 + 316584 * ell ** 7 + 58849 * ell ** 8)
    for m in range(5, 31):
        assert q_poly(2, m, m) == (
            -16 * m + 17 * m ** 2 + Fraction(7, 2) * m ** 3 - Fraction(63, 16) * m ** 4)
    for s in (1, 2, 3):
        for ell in range(1, 11):
            for m in range(4 * s + 1, 4 * s + 41):
                assert q_poly(2 * s, ell, m) == q_poly_shifted_form(s, ell, m)
            assert q_at_con_bound(s, ell) == q_poly(2 * s, ell, 6 * s - 1 + 5 * ell)
    _report("criterion 4 (closed-form golden tests)")


def test_c5_structural_signs():
    for k in range(1, 6):
        for ell in range(1, 2 * k + 2):
            assert q_poly(k, ell, 2 * k + 1) < 0
    for k in range(1, 5):
        for ell in range(1, 10):
            for m in range(2 * k + 1, 61):
                assert q_poly(k, ell + 1, m) < q_poly(k, ell, m)
    for k in range(1, 5):
        for ell in range(1, 11):
            record = threshold_m(k, ell)
            for m in range(2 * k + 1, record.m_star):
                assert q_poly(k, ell, m) < 0
            for m in range(record.m_star, record.scan_cap + 1):
                assert q_poly(k, ell, m) >= 0
    for k in range(1, 4):
        for m in range(2 * k + 1, 13):
            assert diagonal_verdict(k, m).regime is Regime.UNSTABLE
    for k in range(2, 5):
        for ell in range(1, 11):
            assert threshold_m(k, ell).m_star <= upper_bound_m(k, ell)
    assert threshold_m(2, 1).m_star == upper_bound_m(2, 1) == 10
    assert threshold_m(4, 4).m_star == upper_bound_m(4, 4) == 31
    _report("criterion 5 (structural sign properties)")


def test_c6_appendix():
    start = time.perf_counter()
    report = appendix_verify()
    elapsed = time.perf_counter() - start
    assert report.coefficients_match, report.mismatches
    assert report.positive
    assert report.positivity_method in ("shift-certificate", "grid-evidence")
    assert elapsed < 10.0
    _report(f"criterion 6 (factor-difference expansion, {report.positivity_method})")


def test_c7_p_energy():
    for ell in range(1, 11):
        for m in range(3, 61):
            if ell > m:
                continue
            assert (classify_p(PParams(ell, m, 2)).regime
                    is classify_k(1, ell, m).regime)
    for p in (2, 3, 4):
        assert abs(p_dimension_threshold(1, p) - (2 + p + 2 * math.sqrt(p))) < 1e-12
    for m in range(3, 41):
        for p in range(2, m):
            assert alternate_ell_bound(m, p) >= p_ell_threshold(m, p) - 1e-15
    _report("criterion 7 (p-energy equivalences)")


def test_c8_instability_witness():
    checked = 0
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
                witness = instability_witness(params)
                assert witness.hessian_value < 0
                lam = params.gradient_constant
                closed = (-witness.epsilon * sphere_volume(m)
                          * lam ** ((float(p) - 2) / 2)
                          * math.pi / (2 * math.sqrt(-witness.mu)))
                assert abs(witness.hessian_value - closed) <= 1e-6 * abs(closed)
                checked += 1
    assert checked > 50
    for m, p in ((7, Fraction(2)), (10, Fraction(3)), (9, Fraction(5, 2))):
        report = radial_hardy_check(m, p, 50, seed=20240801)
        assert report.passed
        assert report.min_quotient >= float((m - p) ** 2 / 4)
    _report(f"criterion 8 (instability witness, {checked} cases)")


def test_c9_numeric_oracle():
    for m in range(2, 6):
        for ell in range(1, m + 1):
            tensor = build_radial_map(ell, m)
            scale = math.sqrt(float(tensor.scale_sq))
            lam = ell * (ell + m - 2)
            for x in random_points(m, 20, seed=777 + 31 * ell + m):
                values = eval_map(ell, m, x)
                assert abs(np.linalg.norm(values) - 1.0) < 1e-10
                symbolic = np.array([c.evaluate(x) for c in tensor.components]) * scale
                assert np.max(np.abs(values - symbolic)) < 1e-10
                r = float(np.linalg.norm(x))
                h = r * 1e-4
                fd = fd_laplacian(ell, m, x, h)
                exact = -lam / r ** 2 * values
                assert np.max(np.abs(fd - exact)) < 1e-5 * lam / r ** 2
                density = fd_energy_density(ell, m, x, h)
                assert abs(density - lam / r ** 2) < 1e-5 * lam / r ** 2
    _report("criterion 9 (numeric oracle)")
