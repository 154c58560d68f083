#!/usr/bin/env python3
"""The p-energy side: exact classification, thresholds, and an explicit
negative direction in the unstable range.

The verdict is decided by the exact ratio (m-p)^2 / (4 ell (ell+m-2)).
In the unstable range the script constructs the truncated oscillating
profile realizing a negative second variation and cross-checks the
quadrature against the integrated-by-parts closed form; in the stable
range it probes the same quadratic form with random bumps and verifies
the weighted radial Hardy inequality that drives the minimizing proof.
"""

import math
from fractions import Fraction

from equator_stability import (
    PParams,
    classify_p,
    instability_witness,
    p_dimension_threshold,
    p_ell_threshold,
    p_ratio,
    radial_hardy_check,
)

print("Classification at level 1 (p = 2 recovers the harmonic picture)")
print("=" * 64)
for p in (Fraction(2), Fraction(5, 2), Fraction(3)):
    crossing = p_dimension_threshold(1, p)
    print(f"  p = {p}: real crossing dimension {crossing:.4f}")
    for m in range(int(p) + 1, math.ceil(crossing) + 2):
        params = PParams(1, m, p)
        verdict = classify_p(params)
        print(f"    m={m:>2}: ratio = {str(p_ratio(params)):>8} -> {verdict.regime.value}")
print()

print("Level thresholds at fixed dimension")
print("=" * 64)
for m, p in ((12, Fraction(2)), (15, Fraction(3))):
    bound = p_ell_threshold(m, p)
    print(f"  m={m}, p={p}: levels below {bound:.4f} minimize")
    for ell in range(1, math.ceil(bound) + 2):
        verdict = classify_p(PParams(ell, m, p))
        print(f"    ell={ell}: {verdict.regime.value}")
print()

print("An explicit negative direction for (ell, m, p) = (1, 6, 2)")
print("=" * 64)
witness = instability_witness(PParams(1, 6, 2))
print(f"  discriminant mu          = {witness.mu}")
print(f"  margin eps               = {witness.epsilon}")
print(f"  support [r0, 1] with r0  = {witness.r0:.6f}")
print(f"  second variation         = {witness.hessian_value:.6f}  (< 0)")
print(f"  closed-form value        = {witness.closed_form_value:.6f}")
mid = witness.samples[len(witness.samples) // 2]
print(f"  profile sample v({mid[0]:.4f}) = {mid[1]:.6f}")
print()

print("Weighted radial Hardy inequality on random bumps")
print("=" * 64)
for m, p in ((7, Fraction(2)), (10, Fraction(3)), (9, Fraction(5, 2))):
    report = radial_hardy_check(m, p, trials=50, seed=2024)
    print(f"  m={m:>2} p={p}: {report.trials} trials, failures={report.failures}, "
          f"min Rayleigh quotient {report.min_quotient:.4f} >= "
          f"sharp constant {report.hardy_bound:.4f}")
