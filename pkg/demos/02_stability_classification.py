#!/usr/bin/env python3
"""Classify the equator maps as critical points of the extrinsic k-energy.

For m >= 2k+1 a single exact rational Q decides the verdict: minimizing
when Q >= 0, unstable when Q < 0.  This script walks the classical ell=1
anchors, scans the transition dimensions for all (k, ell) up to (4, 10),
and checks the closed-form bounds on those transitions.
"""

import math

from equator_stability import (
    biharmonic_ell_threshold,
    classify_k,
    diagonal_verdict,
    harmonic_threshold_closed_form,
    q_poly,
    table,
    threshold_m,
    upper_bound_m,
)

print("Classical anchors at level 1")
print("=" * 60)
for k, flip in ((1, 7), (2, 10)):
    for m in range(2 * k + 1, flip + 2):
        verdict = classify_k(k, 1, m)
        print(f"  k={k} m={m:>2}: Q = {str(verdict.witness):>9}  ->  "
              f"{verdict.regime.value}")
    print(f"  (flips at m = {flip})")
print()

print("Transition dimensions m(k, ell) for k <= 4, ell <= 10")
print("=" * 60)
records = table(4, 10)
print("k\\ell " + "".join(f"{ell:>4}" for ell in range(1, 11)))
for k in range(1, 5):
    row = records[(k - 1) * 10:k * 10]
    print(f"{k:<5}" + "".join(f"{rec.m_star:>4}" for rec in row))
print()

print("Closed-form crossing for k = 1: m(1, ell) = ceil(2(ell+1) + 2*sqrt(2)*ell)")
print("=" * 60)
for ell in (1, 3, 6, 10):
    real = harmonic_threshold_closed_form(ell)
    print(f"  ell={ell:>2}: real crossing {real:.4f} -> ceil {math.ceil(real):>2} "
          f"== scan {threshold_m(1, ell).m_star}")
print()

print("Linear upper bound for k >= 2: m(k, ell) <= 5 + 3(k-2) + 5 ell")
print("=" * 60)
for k, ell in ((2, 1), (2, 7), (3, 10), (4, 4)):
    bound = upper_bound_m(k, ell)
    m_star = threshold_m(k, ell).m_star
    tight = " (tight)" if m_star == bound else ""
    print(f"  k={k} ell={ell:>2}: m* = {m_star:>2} <= {bound:>2}{tight}")
print()

print("Level threshold for the biharmonic case (k = 2)")
print("=" * 60)
for m in (10, 15, 20):
    level_bound = biharmonic_ell_threshold(m)
    print(f"  m={m}: levels up to L = {level_bound:.4f} minimize; for instance "
          f"Q(ell=1) = {q_poly(2, 1, m)}, Q(ell={int(level_bound) + 1}) = "
          f"{q_poly(2, int(level_bound) + 1, m)}")
print()

print("On the diagonal ell = m the map is always unstable:")
for k, m in ((1, 3), (2, 5), (3, 7)):
    print(f"  k={k}, ell=m={m}: {diagonal_verdict(k, m).regime.value}")
