#!/usr/bin/env python3
"""Build the generalized radial projections symbolically and verify their
defining identities exactly.

The level-1 map is the radial projection x -> x/r.  Higher levels are
built by a recursion that multiplies by a coordinate of y = x/r and
subtracts a rescaled derivative; each level is again a harmonic unit
vector whose components are degree-ell polynomials in y.  Everything
below is exact rational arithmetic: "True" means the residual polynomial
is identically zero, not small.
"""

from equator_stability import (
    build_radial_map,
    delta_pairing_constant,
    verify_delta_power,
    verify_energy_density,
    verify_k_harmonic,
    verify_tangency,
    verify_unit_norm,
)

print("Level 2 in dimension 2 (the smallest nontrivial tensor)")
print("=" * 60)
tensor = build_radial_map(2, 2)
print(f"components ({len(tensor)} of them, squared scale {tensor.scale_sq}):")
for i in (1, 2):
    for j in (1, 2):
        print(f"  u[{i}{j}] = {tensor.component((i, j))!r}")
print()

print("Level 3 in dimension 3: a few of the 27 components")
print("=" * 60)
tensor = build_radial_map(3, 3)
for idx in ((1, 1, 1), (1, 2, 3), (2, 2, 3)):
    print(f"  u{idx} = {tensor.component(idx)!r}")
print(f"  squared scale factor: {tensor.scale_sq}")
print()

print("Exact identity suite over 1 <= ell <= m <= 5")
print("=" * 60)
header = f"{'ell':>3} {'m':>3} {'unit':>5} {'tangent':>8} {'energy':>7} " \
         f"{'lap^k consts (k=1,2,3)':>24}"
print(header)
for m in range(2, 6):
    for ell in range(1, m + 1):
        t = build_radial_map(ell, m)
        unit = verify_unit_norm(t)
        tangent = verify_tangency(t)
        energy = verify_energy_density(t)
        consts = []
        for k in (1, 2, 3):
            assert verify_delta_power(t, k) and verify_k_harmonic(t, k)
            consts.append(delta_pairing_constant(t, k))
        print(f"{ell:>3} {m:>3} {str(unit):>5} {str(tangent):>8} "
              f"{str(energy):>7}   {consts}")

print()
print("Each k Laplacians scale the map by the printed constant over r^(2k);")
print("the k = 1 constant is always -ell(ell+m-2), the harmonic-map density.")
