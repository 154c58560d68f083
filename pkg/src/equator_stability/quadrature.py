"""Adaptive Simpson quadrature for smooth integrands on bounded intervals.

Used by the p-energy module for the weighted radial integrals.  The
integrands there are smooth on the integration interval (the weights
r^alpha are only evaluated away from zero, and the oscillating profiles
are C^infinity), so plain adaptive Simpson with an absolute tolerance and
an interval-width floor is both cheap and robust.
"""

from __future__ import annotations

from typing import Callable

DEFAULT_TOL = 1e-10
INTERVAL_FLOOR = 1e-8


def _simpson(f: Callable[[float], float], a: float, fa: float,
             b: float, fb: float) -> tuple:
    mid = 0.5 * (a + b)
    fm = f(mid)
    return mid, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, fa, b, fb, mid, fm, whole, tol, floor):
    lmid, flm, left = _simpson(f, a, fa, mid, fm)
    rmid, frm, right = _simpson(f, mid, fm, b, fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol or (b - a) <= floor:
        return left + right + delta / 15.0
    half_tol = tol / 2.0
    return (_adaptive(f, a, fa, mid, fm, lmid, flm, left, half_tol, floor)
            + _adaptive(f, mid, fm, b, fb, rmid, frm, right, half_tol, floor))


def adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                     tol: float = DEFAULT_TOL, floor: float = INTERVAL_FLOOR) -> float:
    """Integrate f over [a, b] to absolute tolerance ``tol``.

    Subdivision stops once the Richardson error estimate is below the
    local tolerance or the interval shrinks to ``floor``.
    """
    if b <= a:
        return 0.0
    fa, fb = f(a), f(b)
    mid, fm, whole = _simpson(f, a, fa, b, fb)
    return _adaptive(f, a, fa, b, fb, mid, fm, whole, tol, floor)
