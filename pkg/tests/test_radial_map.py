"""Construction of the radial projection tensors and their exact identities."""

from fractions import Fraction

import pytest

from equator_stability.algebra import Poly, RadialField
from equator_stability.radial_map import (
    EquatorMap,
    RadialTensor,
    build_radial_map,
    delta_pairing_constant,
    verify_delta_power,
    verify_energy_density,
    verify_k_harmonic,
    verify_tangency,
    verify_unit_norm,
)
from equator_stability.stability import b_product

GRID = [(ell, m) for m in range(2, 6) for ell in range(1, m + 1)]


class TestBuild:
    def test_level_one_is_projection(self):
        t = build_radial_map(1, 3)
        assert t.scale_sq == 1
        for i in range(1, 4):
            assert t.component((i,)) == RadialField(Poly.variable(3, i - 1), 0)

    def test_level_two_dimension_two_components(self):
        # One hand application of the recursion: the off-diagonal entries
        # are 2 y1 y2 and the diagonal ones 2 y_i^2 - 1, with scale 1/2.
        t = build_radial_map(2, 2)
        assert t.scale_sq == Fraction(1, 2)
        y1, y2 = Poly.variable(2, 0), Poly.variable(2, 1)
        two_y1y2 = RadialField(y1 * y2 * 2, 0)
        assert t.component((1, 2)) == two_y1y2
        assert t.component((2, 1)) == two_y1y2
        assert t.component((1, 1)) == RadialField(y1 * y1 * 2 - Poly.constant(2, 1), 0)
        assert t.component((2, 2)) == RadialField(y2 * y2 * 2 - Poly.constant(2, 1), 0)

    def test_level_two_general_entry(self):
        # (m/(m-1)) y_i y_j - delta_ij/(m-1) for m = 3
        t = build_radial_map(2, 3)
        assert t.scale_sq == Fraction(2, 3)
        y = [Poly.variable(3, i) for i in range(3)]
        assert t.component((1, 2)) == RadialField(y[0] * y[1] * Fraction(3, 2), 0)
        diag = y[2] * y[2] * Fraction(3, 2) - Poly.constant(3, Fraction(1, 2))
        assert t.component((3, 3)) == RadialField(diag, 0)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            build_radial_map(3, 2)
        with pytest.raises(ValueError):
            build_radial_map(1, 1)
        with pytest.raises(ValueError):
            build_radial_map(0, 3)

    def test_scale_bookkeeping(self):
        for ell, m in GRID:
            expected = Fraction(1)
            for j in range(2, ell + 1):
                expected *= Fraction(j + m - 3, 2 * j + m - 4)
            assert build_radial_map(ell, m).scale_sq == expected

    def test_component_degree_is_exactly_level(self):
        for ell, m in GRID:
            t = build_radial_map(ell, m)
            assert all(c.poly.total_degree() == ell for c in t.components)

    def test_component_count_and_indexing(self):
        t = build_radial_map(3, 4)
        assert len(t) == 4 ** 3
        with pytest.raises(ValueError):
            t.component((1, 2))
        with pytest.raises(ValueError):
            t.component((1, 2, 5))

    def test_equator_map_wrapper(self):
        em = EquatorMap(build_radial_map(2, 3))
        assert em.target_sphere_dim == 9
        assert em.base.level == 2


class TestIdentities:
    @pytest.mark.parametrize("ell,m", GRID)
    def test_unit_norm(self, ell, m):
        assert verify_unit_norm(build_radial_map(ell, m))

    @pytest.mark.parametrize("ell,m", GRID)
    def test_tangency(self, ell, m):
        assert verify_tangency(build_radial_map(ell, m))

    @pytest.mark.parametrize("ell,m", GRID)
    def test_energy_density(self, ell, m):
        assert verify_energy_density(build_radial_map(ell, m))

    @pytest.mark.parametrize("ell,m", GRID)
    def test_delta_power_and_k_harmonic(self, ell, m):
        t = build_radial_map(ell, m)
        for k in (1, 2, 3):
            assert verify_delta_power(t, k)
            assert verify_k_harmonic(t, k)

    def test_pairing_constant_matches_product_formula(self):
        for ell, m in GRID:
            t = build_radial_map(ell, m)
            for k in (1, 2, 3):
                assert delta_pairing_constant(t, k) == b_product(k, ell, m)

    def test_order_one_reproduces_harmonicity(self):
        # k = 1 coefficient is -ell(ell+m-2); spot value for (2, 4) is -8.
        assert b_product(1, 2, 4) == -8
        assert delta_pairing_constant(build_radial_map(2, 4), 1) == -8

    def test_known_laplacian_coefficients(self):
        # Level 1 in dimension 5: one Laplacian scales by 1-m = -4, two by
        # 24 (cross-checked against (-1)^k prod (m-2j+1)(2j-1) = 4*1*2*3).
        t = build_radial_map(1, 5)
        assert delta_pairing_constant(t, 1) == -4
        assert delta_pairing_constant(t, 2) == 24
        assert b_product(2, 1, 5) == 24

    def test_higher_laplacian_orders(self):
        # The scaling law keeps holding beyond the acceptance orders.
        for ell, m in ((1, 4), (2, 4), (3, 3)):
            t = build_radial_map(ell, m)
            for k in (4, 5):
                assert verify_delta_power(t, k)
                assert verify_k_harmonic(t, k)


class TestFalsification:
    def test_zeroed_component_breaks_unit_norm(self):
        t = build_radial_map(2, 3)
        components = list(t.components)
        components[0] = RadialField.zero(3)
        broken = RadialTensor(t.level, t.dimension, tuple(components), t.scale_sq)
        assert not verify_unit_norm(broken)

    def test_inverse_radius_is_not_tangent(self):
        # sum_j y_j d_j (1/r) = -1/r^2, so a tensor of 1/r components fails.
        field = RadialField.constant(2, 1, d=1)
        fake = RadialTensor(1, 2, (field, field), Fraction(1))
        assert not verify_tangency(fake)

    def test_wrong_scale_breaks_unit_norm(self):
        t = build_radial_map(2, 3)
        rescaled = RadialTensor(t.level, t.dimension, t.components, t.scale_sq * 2)
        assert not verify_unit_norm(rescaled)

    def test_delta_power_rejects_wrong_order(self):
        # A tensor of 1/r fields scales under one Laplacian by (3-m) != the
        # predicted level-1 constant, so the check must fail.
        field = RadialField.constant(5, 1, d=1)
        fake = RadialTensor(1, 5, tuple([field] * 5), Fraction(1))
        assert not verify_delta_power(fake, 1)

    def test_non_constant_pairing_fails_k_harmonic(self):
        # (y1, 0) is not a sphere-valued map; its pairing with its own
        # Laplacian is -y1^2/r^2, which never reduces to a constant.
        fake = RadialTensor(
            1, 2, (RadialField(Poly.variable(2, 0), 0), RadialField.zero(2)),
            Fraction(1))
        assert not verify_k_harmonic(fake, 1)

    def test_order_must_be_positive(self):
        t = build_radial_map(1, 3)
        with pytest.raises(ValueError):
            verify_delta_power(t, 0)
        with pytest.raises(ValueError):
            verify_k_harmonic(t, 0)
