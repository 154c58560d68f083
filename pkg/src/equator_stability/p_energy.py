"""Stability of the generalized equator map as a p-harmonic map.

For m > p >= 2 the classification is governed by a single exact rational
ratio (m-p)^2 / (4*ell*(ell+m-2)): at least one means the map is the
unique energy minimizer of the p-energy, below one it is unstable.  The
module provides the equivalent dimension and level thresholds, an explicit
negative direction for the unstable range (an oscillating radial profile
truncated at its first zero), and seeded quadrature checks of the
second-variation sign and of the weighted radial Hardy inequality.

The negative direction is built from the profile

    v(r) = r^((p-m)/2) * sin(omega * ln r),   omega = sqrt(-mu),

supported on [r0, 1] with r0 = exp(-pi/omega) its first zero below 1,
where mu = (m-p)^2/4 - ell(ell+m-2) + eps and eps is fixed to half the
margin |mu_0|/2.  The profile solves the radial Jacobi-type equation, so
integrating the reduced second variation by parts collapses it to
-eps * vol(S^(m-1)) * (ell(ell+m-2))^((p-2)/2) * integral(v^2 r^(m-p-1)),
manifestly negative; the quadrature is checked against that closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .quadrature import adaptive_simpson
from .stability import Regime, Verdict

__all__ = [
    "PParams",
    "Witness",
    "HardyCheckReport",
    "p_ratio",
    "classify_p",
    "p_dimension_threshold",
    "p_ell_threshold",
    "alternate_ell_bound",
    "mu",
    "sphere_volume",
    "hessian_quadratic_form",
    "instability_witness",
    "radial_hardy_check",
]

RULE_P_MINIMIZER = "p-energy-unique-minimizer"
RULE_P_UNSTABLE = "p-energy-instability"

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class PParams:
    """Parameters (ell, m, p) of the p-energy classification, validated."""

    ell: int
    m: int
    p: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        if self.p < 2:
            raise ValueError(f"domain violation: p={self.p} must be at least 2")
        if self.m <= self.p:
            raise ValueError(f"domain violation: m <= p (m={self.m}, p={self.p})")
        if not 1 <= self.ell <= self.m:
            raise ValueError(f"level ell={self.ell} must satisfy 1 <= ell <= m={self.m}")

    @property
    def gradient_constant(self) -> int:
        """ell*(ell+m-2), the squared-gradient constant of the level-ell map."""
        return self.ell * (self.ell + self.m - 2)


def p_ratio(params: PParams) -> Fraction:
    """The exact classification ratio (m-p)^2 / (4*ell*(ell+m-2))."""
    return (params.m - params.p) ** 2 / (4 * params.gradient_constant)


def classify_p(params: PParams) -> Verdict:
    """Unique energy minimizer iff the ratio is at least one, else unstable."""
    ratio = p_ratio(params)
    if ratio >= 1:
        return Verdict(Regime.MINIMIZING, ratio, RULE_P_MINIMIZER)
    return Verdict(Regime.UNSTABLE, ratio, RULE_P_UNSTABLE)


def p_dimension_threshold(ell: int, p: RationalLike) -> float:
    """Dimension above which the level-ell map minimizes the p-energy.

    Returns p + 2*ell + 2*sqrt(ell*(2*ell+p-2)); integer dimensions are
    classified by the exact weak inequality of :func:`classify_p`, for
    which this is the real crossing point.
    """
    p = Fraction(p)
    if ell < 1 or p < 2:
        raise ValueError("need ell >= 1 and p >= 2")
    return float(p) + 2 * ell + 2 * math.sqrt(ell * float(2 * ell + p - 2))


def p_ell_threshold(m: int, p: RationalLike) -> float:
    """Level below which the map in dimension m minimizes the p-energy.

    Returns (2 - m + sqrt((m-2)^2 + (m-p)^2)) / 2.
    """
    p = Fraction(p)
    if not m > p >= 2:
        raise ValueError(f"need m > p >= 2, got m={m}, p={p}")
    return 0.5 * (2 - m + math.sqrt((m - 2) ** 2 + float((m - p) ** 2)))


def alternate_ell_bound(m: int, p: RationalLike) -> float:
    """An earlier, coarser level bound kept for comparison.

    (2 - m + sqrt((m-2)^2 + 2*(m-p)^2)) / 2; always at least
    :func:`p_ell_threshold`, so the threshold here strictly improves it.
    """
    p = Fraction(p)
    if not m > p >= 2:
        raise ValueError(f"need m > p >= 2, got m={m}, p={p}")
    return 0.5 * (2 - m + math.sqrt((m - 2) ** 2 + 2 * float((m - p) ** 2)))


def mu(params: PParams, epsilon: RationalLike = 0) -> Fraction:
    """The exponent discriminant (m-p)^2/4 - ell(ell+m-2) + epsilon."""
    if epsilon < 0:
        raise ValueError("epsilon must be non-negative")
    return ((params.m - params.p) ** 2 / Fraction(4)
            - params.gradient_constant + Fraction(epsilon))


def sphere_volume(m: int) -> float:
    """Volume of the unit sphere S^(m-1) in R^m."""
    return 2.0 * math.pi ** (m / 2.0) / math.gamma(m / 2.0)


def hessian_quadratic_form(params: PParams, v, v_prime, a: float, b: float,
                           tol: float = 1e-12) -> float:
    """The reduced second variation on a radial profile supported in [a, b].

    vol(S^(m-1)) * (ell(ell+m-2))^((p-2)/2)
        * integral_a^b r^(m-p+1) * (v'(r)^2 - ell(ell+m-2) v(r)^2 / r^2) dr.
    """
    lam = params.gradient_constant
    w = float(params.m - params.p)

    def integrand(r: float) -> float:
        return r ** (w + 1.0) * v_prime(r) ** 2 - lam * r ** (w - 1.0) * v(r) ** 2

    integral = adaptive_simpson(integrand, a, b, tol=tol)
    return sphere_volume(params.m) * lam ** ((float(params.p) - 2.0) / 2.0) * integral


@dataclass(frozen=True)
class Witness:
    """An explicit variation with negative second variation.

    ``samples`` tabulates the profile on [r0, 1]; ``hessian_value`` is the
    quadrature of the reduced second variation and ``closed_form_value``
    the integrated-by-parts expression it must reproduce.
    """

    mu: float
    epsilon: float
    r0: float
    samples: tuple
    hessian_value: float
    closed_form_value: float


def instability_witness(params: PParams, num_samples: int = 257) -> Witness:
    """Construct the truncated oscillating profile and certify its sign.

    Requires the classification ratio below one.  Fixes eps = |mu_0|/2, so
    mu = mu_0/2 < 0, takes r0 = exp(-pi/sqrt(-mu)), and evaluates the
    reduced second variation by quadrature.  Raises ArithmeticError if the
    quadrature disagrees with the integrated-by-parts closed form by more
    than 1e-6 relative, or fails to come out negative.
    """
    ratio = p_ratio(params)
    if ratio >= 1:
        raise ValueError(
            "no negative direction exists: the map is the unique energy "
            f"minimizer for (ell={params.ell}, m={params.m}, p={params.p})")
    mu0 = mu(params)
    eps = -mu0 / 2
    mu_eps = mu0 + eps
    omega = math.sqrt(float(-mu_eps))
    r0 = math.exp(-math.pi / omega)
    q = (float(params.p) - params.m) / 2.0

    def v(r: float) -> float:
        if r <= r0:
            return 0.0
        return r ** q * math.sin(omega * math.log(r))

    def v_prime(r: float) -> float:
        if r <= r0:
            return 0.0
        t = math.log(r)
        return r ** (q - 1.0) * (q * math.sin(omega * t) + omega * math.cos(omega * t))

    hessian = hessian_quadratic_form(params, v, v_prime, r0, 1.0)

    weight = float(params.m - params.p) - 1.0
    mass = adaptive_simpson(lambda r: r ** weight * v(r) ** 2, r0, 1.0)
    lam = params.gradient_constant
    closed = (-float(eps) * sphere_volume(params.m)
              * lam ** ((float(params.p) - 2.0) / 2.0) * mass)

    if not hessian < 0.0:
        raise ArithmeticError(f"second variation came out non-negative: {hessian}")
    if abs(hessian - closed) > 1e-6 * abs(closed):
        raise ArithmeticError(
            f"quadrature {hessian} disagrees with closed form {closed}")

    grid = np.linspace(r0, 1.0, num_samples)
    samples = tuple((float(r), v(float(r))) for r in grid)
    return Witness(float(mu_eps), float(eps), r0, samples, hessian, closed)


@dataclass(frozen=True)
class HardyCheckReport:
    """Result of seeded random-bump tests of the radial Hardy inequality."""

    m: int
    p: Fraction
    trials: int
    seed: int
    failures: int
    min_quotient: float
    hardy_bound: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


def radial_hardy_check(m: int, p: RationalLike, trials: int, seed: int) -> HardyCheckReport:
    """Test the weighted radial Hardy inequality on random bump profiles.

    For profiles v(r) = (r-a)^2 (b-r)^2 on random [a, b] in (0, 1] (zero
    outside) the inequality

        integral_0^1 r^(m-p+1) v'^2 dr
            >= (m-p)^2/4 * integral_0^1 r^(m-p-1) v^2 dr

    must hold; each trial allows 1e-9 absolute slack for quadrature error.
    Reports the smallest observed Rayleigh quotient.
    """
    p = Fraction(p)
    if not m > p:
        raise ValueError(f"domain violation: m <= p (m={m}, p={p})")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    rng = np.random.default_rng(seed)
    w = float(m - p)
    bound = w * w / 4.0
    failures = 0
    min_quotient = math.inf
    for _ in range(trials):
        a, b = sorted(float(u) for u in rng.uniform(0.0, 1.0, size=2))
        if a == b:
            continue

        def v(r: float) -> float:
            if r <= a or r >= b:
                return 0.0
            return (r - a) ** 2 * (b - r) ** 2

        def v_prime(r: float) -> float:
            if r <= a or r >= b:
                return 0.0
            return 2.0 * (r - a) * (b - r) * (a + b - 2.0 * r)

        lhs = adaptive_simpson(lambda r: r ** (w + 1.0) * v_prime(r) ** 2, a, b)
        rhs = adaptive_simpson(lambda r: r ** (w - 1.0) * v(r) ** 2, a, b)
        if lhs < bound * rhs - 1e-9:
            failures += 1
        if rhs > 0.0:
            min_quotient = min(min_quotient, lhs / rhs)
    return HardyCheckReport(m, p, trials, seed, failures, min_quotient, bound)
