#!/usr/bin/env python3
"""Cross-check the exact engine against an independent float recursion.

The map is re-evaluated purely numerically (forward-mode AD supplies the
in-recursion derivatives; no polynomial algebra is reused), then compared
against the symbolic components, and probed with plain central finite
differences for the Laplacian and energy-density identities.
"""

import math

import numpy as np

from equator_stability import (
    build_radial_map,
    eval_map,
    fd_energy_density,
    fd_laplacian,
    random_points,
)

print("Unit norm and symbolic agreement at 20 seeded points")
print("=" * 62)
print(f"{'ell':>3} {'m':>3} {'max |norm-1|':>14} {'max |num-sym|':>14}")
for m in range(2, 6):
    for ell in range(1, m + 1):
        tensor = build_radial_map(ell, m)
        scale = math.sqrt(float(tensor.scale_sq))
        worst_norm = 0.0
        worst_gap = 0.0
        for x in random_points(m, 20, seed=11 * ell + m):
            values = eval_map(ell, m, x)
            worst_norm = max(worst_norm, abs(float(np.linalg.norm(values)) - 1.0))
            symbolic = np.array([c.evaluate(x) for c in tensor.components]) * scale
            worst_gap = max(worst_gap, float(np.max(np.abs(values - symbolic))))
        print(f"{ell:>3} {m:>3} {worst_norm:>14.2e} {worst_gap:>14.2e}")
print()

print("Finite-difference Laplacian vs the closed form -ell(ell+m-2)/r^2 u")
print("=" * 62)
for ell, m in ((1, 3), (2, 4), (3, 5)):
    x = random_points(m, 1, seed=5)[0]
    r = float(np.linalg.norm(x))
    h = r * 1e-4
    fd = fd_laplacian(ell, m, x, h)
    lam = ell * (ell + m - 2)
    exact = -lam / r ** 2 * eval_map(ell, m, x)
    rel = float(np.max(np.abs(fd - exact))) / (lam / r ** 2)
    print(f"  ell={ell} m={m}: relative error {rel:.2e} at step h = r*1e-4")
print()

print("Finite-difference energy density vs ell(ell+m-2)/r^2")
print("=" * 62)
for ell, m in ((1, 3), (2, 4), (3, 3)):
    x = random_points(m, 1, seed=9)[0]
    r = float(np.linalg.norm(x))
    density = fd_energy_density(ell, m, x, r * 1e-4)
    lam = ell * (ell + m - 2)
    print(f"  ell={ell} m={m}: fd {density:.8f} vs exact {lam / r ** 2:.8f}")
