"""Floating-point cross-checks of the symbolic engine.

The map is rebuilt here by running its defining recursion numerically,
with no polynomial algebra involved: the in-recursion x-derivatives are
taken by forward-mode automatic differentiation (jax), so evaluation is
accurate to machine precision, and the irrational level constants
sqrt((l+m-3)/(2l+m-4)) are included.  Laplacians and energy densities are
then probed by plain central finite differences on top of that evaluator,
which keeps the oracle genuinely independent of the exact arithmetic it
cross-checks.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

import jax

jax.config.update("jax_enable_x64", True)

import jax.numpy as jnp  # noqa: E402  (needs the x64 flag set first)

__all__ = [
    "eval_map",
    "fd_laplacian",
    "fd_energy_density",
    "random_points",
]

MIN_RADIUS = 1e-6


def _validate(ell: int, m: int) -> None:
    if m < 2:
        raise ValueError(f"dimension m={m} must be at least 2")
    if not 1 <= ell <= m:
        raise ValueError(f"level ell={ell} must satisfy 1 <= ell <= m={m}")


def _check_point(m: int, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (m,):
        raise ValueError(f"point must have shape ({m},), got {x.shape}")
    if float(np.linalg.norm(x)) <= MIN_RADIUS:
        raise ValueError("point is too close to the origin")
    return x


@lru_cache(maxsize=None)
def _component_fn(ell: int, m: int):
    """Jitted evaluator x -> all m^ell components, built level by level.

    Level 1 is x/|x|; level l maps the flat component vector u of level
    l-1 to C * (outer(u, y) - r/(l+m-3) * Jacobian(u)), flattened row-major
    so the newest index varies fastest, matching the symbolic ordering.
    """
    if ell == 1:
        def base(x):
            return x / jnp.linalg.norm(x)
        return jax.jit(base)

    prev = _component_fn(ell - 1, m)
    scale = math.sqrt((ell + m - 3) / (2 * ell + m - 4))
    inv = 1.0 / (ell + m - 3)

    def level(x):
        r = jnp.linalg.norm(x)
        y = x / r
        values = prev(x)
        jacobian = jax.jacfwd(prev)(x)
        return (scale * (values[:, None] * y[None, :] - inv * r * jacobian)).reshape(-1)

    return jax.jit(level)


def eval_map(ell: int, m: int, x) -> np.ndarray:
    """Evaluate the level-ell map at a point of R^m away from the origin.

    Returns the m^ell components (including the irrational level scaling),
    a unit vector up to machine precision.
    """
    _validate(ell, m)
    x = _check_point(m, x)
    return np.asarray(_component_fn(ell, m)(jnp.asarray(x)))


def fd_laplacian(ell: int, m: int, x, h: float) -> np.ndarray:
    """Componentwise Laplacian by central second differences with step h.

    Requires 0 < h and h small against |x|.  At h = |x| * 1e-4 this matches
    the closed-form -ell(ell+m-2)/r^2 times the map to about 1e-5 relative.
    """
    _validate(ell, m)
    x = _check_point(m, x)
    r = float(np.linalg.norm(x))
    if h <= 0:
        raise ValueError("step h must be positive")
    if h > r / 10.0:
        raise ValueError(f"step h={h} too large relative to |x|={r}")
    center = eval_map(ell, m, x)
    total = np.zeros_like(center)
    for j in range(m):
        step = np.zeros(m)
        step[j] = h
        total += eval_map(ell, m, x + step) - 2.0 * center + eval_map(ell, m, x - step)
    return total / (h * h)


def fd_energy_density(ell: int, m: int, x, h: float) -> float:
    """Squared-gradient density by central first differences with step h.

    Sums squared difference quotients over all components and axes; the
    exact value is ell(ell+m-2)/|x|^2.
    """
    _validate(ell, m)
    x = _check_point(m, x)
    r = float(np.linalg.norm(x))
    if h <= 0:
        raise ValueError("step h must be positive")
    if h > r / 10.0:
        raise ValueError(f"step h={h} too large relative to |x|={r}")
    total = 0.0
    for j in range(m):
        step = np.zeros(m)
        step[j] = h
        diff = (eval_map(ell, m, x + step) - eval_map(ell, m, x - step)) / (2.0 * h)
        total += float(np.dot(diff, diff))
    return total


def random_points(m: int, count: int, seed: int,
                  r_min: float = 0.5, r_max: float = 2.0) -> np.ndarray:
    """Seeded random points on the shell r_min <= |x| <= r_max."""
    if m < 1 or count < 0:
        raise ValueError("need m >= 1 and count >= 0")
    rng = np.random.default_rng(seed)
    directions = rng.normal(size=(count, m))
    norms = np.linalg.norm(directions, axis=1, keepdims=True)
    radii = rng.uniform(r_min, r_max, size=(count, 1))
    return directions / norms * radii
