#!/usr/bin/env python3
"""The endpoint-positivity machinery behind the linear threshold bound.

At the bound dimension m = 5 + 3(k-2) + 5*ell the even-order stability
quantity collapses to exact rising-factorial products; raising the
half-order s by two multiplies the two competing products by the factor
polynomials f1, f2, so f1 - f2 > 0 is what propagates positivity up the
orders.  This script evaluates the endpoint values, verifies the frozen
integer expansion of 2^22 (f1 - f2) coefficient by coefficient, and runs
the shift certificate that proves positivity for all ell, s >= 1.
"""

from fractions import Fraction

from equator_stability import appendix_f, appendix_verify, q_at_con_bound, q_poly

print("Endpoint values Q_{2s}(6s - 1 + 5 ell), exact, via rising factorials")
print("=" * 68)
for s in (1, 2, 3):
    for ell in (1, 2, 5):
        value = q_at_con_bound(s, ell)
        m = 6 * s - 1 + 5 * ell
        assert value == q_poly(2 * s, ell, m)
        print(f"  s={s} ell={ell}: m = {m:>2}, Q = {value} > 0")
print()

f1, f2 = appendix_f()
diff = f1 - f2
print("Factor polynomials of the step s -> s+2")
print("=" * 68)
print(f"  f1 has {len(f1.as_dict())} terms, f2 has {len(f2.as_dict())} terms")
print(f"  total degree of f1 - f2: {diff.total_degree()}")
print(f"  (f1 - f2)(1, 1) = {diff.evaluate((Fraction(1), Fraction(1)))}")
print()

report = appendix_verify()
print("Coefficient verification and positivity certificate")
print("=" * 68)
print(f"  comparison scale:    2^22 = {report.scale}")
print(f"  91 coefficients:     {'all match' if report.coefficients_match else 'MISMATCH'}")
print(f"  positivity method:   {report.positivity_method}")
print(f"  positive on ell,s>=1: {report.positive}")
scaled = diff.scale(report.scale)
print(f"  spot checks: constant {scaled.coefficient((0, 0))}, "
      f"s^12 coefficient {scaled.coefficient((0, 12))}")
