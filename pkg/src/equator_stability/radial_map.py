"""Symbolic construction of the generalized radial projection and its checks.

The level-1 map is x -> x/r.  Level ell is built from level ell-1 by the
recursion

    new component (i_1 .. i_ell)
        = C * [ y-factor * old(i_1 .. i_{ell-1})
                - r/(ell+m-3) * d/dx_{i_ell} old(i_1 .. i_{ell-1}) ],

with C = sqrt((ell+m-3)/(2*ell+m-4)).  The irrational C is never stored:
the tensor keeps unscaled polynomial components together with the exact
rational ``scale_sq`` (the product of the C^2 factors), and every identity
checked below is either linear in the map (scale cancels) or quadratic
(multiply by ``scale_sq`` once).  This keeps all verification exact.

The y-factor index is a deliberate implementation choice.  Pairing the
multiplier with the differentiation index (``trailing``, i.e. y_{i_ell})
makes the components a unit vector; pairing it with the first index
(``leading``) does not.  The builder tries ``trailing`` first and falls
back, and always asserts the unit-norm identity at construction, so a
wrong convention can never escape.

All verifications dedupe repeated components: the tensor has m^ell entries
but only a few hundred distinct polynomials at desk scale, and every check
is a sum of per-component quantities weighted by multiplicity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import Poly, RadialField, laplacian, radial_partial
from .stability import b_product

__all__ = [
    "RadialTensor",
    "EquatorMap",
    "MapConstructionError",
    "build_radial_map",
    "verify_unit_norm",
    "verify_tangency",
    "verify_energy_density",
    "verify_delta_power",
    "verify_k_harmonic",
    "delta_pairing_constant",
]


class MapConstructionError(RuntimeError):
    """Unit norm failed under both index conventions: an implementation bug."""


@dataclass(frozen=True)
class RadialTensor:
    """The unscaled components of the level-``level`` radial projection.

    ``components`` holds m^level radial fields in row-major multi-index
    order ((i_1, ..., i_level), i_level fastest).  The represented map is
    sqrt(scale_sq) times the components.
    """

    level: int
    dimension: int
    components: tuple
    scale_sq: Fraction
    index_convention: str = field(default="trailing", compare=False)

    def component(self, multi_index) -> RadialField:
        """Component for a 1-based multi-index (i_1, ..., i_level)."""
        if len(multi_index) != self.level:
            raise ValueError(f"multi-index must have length {self.level}")
        flat = 0
        for i in multi_index:
            if not 1 <= i <= self.dimension:
                raise ValueError(f"index {i} out of range 1..{self.dimension}")
            flat = flat * self.dimension + (i - 1)
        return self.components[flat]

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class EquatorMap:
    """The radial projection padded with one constant zero coordinate.

    The padding changes nothing about norms, derivatives, or pairings, so
    every verification of the base tensor applies verbatim; the wrapper
    only records that the map is viewed as B^m -> S^(m^level).
    """

    base: RadialTensor

    @property
    def target_sphere_dim(self) -> int:
        return self.base.dimension ** self.base.level


def _validate(ell: int, m: int) -> None:
    if m < 2:
        raise ValueError(f"dimension m={m} must be at least 2")
    if ell < 1:
        raise ValueError(f"level ell={ell} must be at least 1")
    if ell > m:
        raise ValueError(f"level ell={ell} must not exceed dimension m={m}")


def _build(ell: int, m: int, convention: str) -> RadialTensor:
    y_vars = [RadialField(Poly.variable(m, i), 0) for i in range(m)]
    components = list(y_vars)
    scale_sq = Fraction(1)
    for j in range(2, ell + 1):
        coeff = Fraction(-1, j + m - 3)
        scale_sq *= Fraction(j + m - 3, 2 * j + m - 4)
        stride = m ** (j - 2)
        cache: dict = {}
        new_components = []
        for a, parent in enumerate(components):
            lead = a // stride if convention == "leading" else None
            for i in range(m):
                y_idx = lead if convention == "leading" else i
                key = (parent, i, y_idx)
                child = cache.get(key)
                if child is None:
                    child = (y_vars[y_idx] * parent
                             + coeff * radial_partial(parent, i + 1).mul_r())
                    cache[key] = child
                new_components.append(child)
        components = new_components
    return RadialTensor(ell, m, tuple(components), scale_sq, convention)


@lru_cache(maxsize=None)
def build_radial_map(ell: int, m: int) -> RadialTensor:
    """Construct the level-``ell`` radial projection in dimension ``m``.

    Requires 2 <= m and 1 <= ell <= m.  The returned tensor is guaranteed
    to pass :func:`verify_unit_norm`; failure of both index conventions
    raises :class:`MapConstructionError`.
    """
    _validate(ell, m)
    for convention in ("trailing", "leading"):
        tensor = _build(ell, m, convention)
        if verify_unit_norm(tensor):
            return tensor
    raise MapConstructionError(
        f"unit norm fails for (ell={ell}, m={m}) under both index conventions")


def _distinct(t: RadialTensor):
    """Distinct components with multiplicities (verifications are per-value)."""
    return Counter(t.components).items()


def _self_pairing(t: RadialTensor, other=None) -> RadialField:
    """sum_c a_c * b_c over components, with a = Delta^k-images when given."""
    total = RadialField.zero(t.dimension)
    for comp, mult in _distinct(t):
        lhs = other[comp] if other is not None else comp
        total = total + mult * (lhs * comp)
    return total


@lru_cache(maxsize=None)
def verify_unit_norm(t: RadialTensor) -> bool:
    """True iff scale_sq * sum of squared components reduces exactly to 1."""
    norm_sq = t.scale_sq * _self_pairing(t)
    return norm_sq == RadialField.constant(t.dimension, 1)


@lru_cache(maxsize=None)
def verify_tangency(t: RadialTensor) -> bool:
    """True iff sum_j y_j * d/dx_j annihilates every component exactly."""
    m = t.dimension
    y_polys = [Poly.variable(m, i) for i in range(m)]
    for comp, _ in _distinct(t):
        total = RadialField.zero(m)
        for axis in range(1, m + 1):
            df = radial_partial(comp, axis)
            total = total + RadialField(df.poly * y_polys[axis - 1], df.d)
        if not total.is_zero():
            return False
    return True


@lru_cache(maxsize=None)
def verify_energy_density(t: RadialTensor) -> bool:
    """True iff the squared gradient reduces exactly to ell(ell+m-2)/r^2."""
    ell, m = t.level, t.dimension
    total = RadialField.zero(m)
    for comp, mult in _distinct(t):
        for axis in range(1, m + 1):
            df = radial_partial(comp, axis)
            total = total + mult * (df * df)
    expected = RadialField.constant(m, ell * (ell + m - 2), d=2)
    return t.scale_sq * total == expected


@lru_cache(maxsize=None)
def _delta_power(comp: RadialField, k: int) -> RadialField:
    if k == 0:
        return comp
    return laplacian(_delta_power(comp, k - 1))


@lru_cache(maxsize=None)
def verify_delta_power(t: RadialTensor, k: int) -> bool:
    """True iff k Laplacians scale every component by the predicted constant.

    The prediction is prod_{j=1}^k (2j+ell-2)(2j-ell-m) together with the
    r-power dropping by 2k; the check is componentwise exact equality.
    """
    if k < 1:
        raise ValueError("order k must be at least 1")
    coeff = b_product(k, t.level, t.dimension)
    for comp, _ in _distinct(t):
        expected = RadialField(comp.poly * coeff, comp.d + 2 * k)
        if _delta_power(comp, k) != expected:
            return False
    return True


def _pairing_field(t: RadialTensor, k: int) -> RadialField:
    images = {comp: _delta_power(comp, k) for comp, _ in _distinct(t)}
    return t.scale_sq * _self_pairing(t, images)


def _constant_of(pairing: RadialField, k: int):
    """The constant c with pairing = c * r^(-2k), or None if not of that shape.

    The zero field counts as the constant 0 (its canonical r-power is 0).
    """
    if pairing.is_zero():
        return Fraction(0)
    if pairing.poly.is_constant() and pairing.d == 2 * k:
        return pairing.poly.constant_value()
    return None


def delta_pairing_constant(t: RadialTensor, k: int) -> Fraction:
    """The constant c with <Delta^k u, u> = c * r^(-2k), computed symbolically."""
    constant = _constant_of(_pairing_field(t, k), k)
    if constant is None:
        raise ValueError("pairing did not reduce to a constant multiple of r^(-2k)")
    return constant


@lru_cache(maxsize=None)
def verify_k_harmonic(t: RadialTensor, k: int) -> bool:
    """Exact check of the critical-point equation of order k.

    Verifies Delta^k u - <Delta^k u, u> u = 0 componentwise, and that the
    pairing <Delta^k u, u> r^(2k) reduces to the constant predicted by
    :func:`b_product`.
    """
    if k < 1:
        raise ValueError("order k must be at least 1")
    images = {comp: _delta_power(comp, k) for comp, _ in _distinct(t)}
    pairing = t.scale_sq * _self_pairing(t, images)
    constant = _constant_of(pairing, k)
    if constant is None or constant != b_product(k, t.level, t.dimension):
        return False
    for comp, _ in _distinct(t):
        residual = images[comp] - pairing * comp
        if not residual.is_zero():
            return False
    return True
