"""Bracketed scalar searches: golden-section refinement and bisection.

These are deliberately hand-rolled: the call sites need deterministic probe
sequences (for byte-identical reports) and best-seen-so-far semantics (so a
grid maximum is never made worse by refinement).
"""
from __future__ import annotations

import math

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_max(f, lo: float, hi: float, tol: float = 1e-10, max_iter: int = 200):
    """Golden-section maximization on [lo, hi].

    Returns ``(x_best, f_best)`` over every probed point, endpoints included,
    so the result is a valid lower bound for the true maximum even when f is
    monotone and the supremum sits on the boundary of the bracket.
    """
    if hi < lo:
        lo, hi = hi, lo
    best_x, best_f = lo, f(lo)
    fhi = f(hi)
    if fhi > best_f:
        best_x, best_f = hi, fhi
    a, b = lo, hi
    h = b - a
    if h <= tol:
        return best_x, best_f
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    for x, v in ((c, fc), (d, fd)):
        if v > best_f:
            best_x, best_f = x, v
    it = 0
    while (b - a) > tol and it < max_iter:
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = f(c)
            if fc > best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
            if fd > best_f:
                best_x, best_f = d, fd
        it += 1
    return best_x, best_f


def bisect_decreasing(phi, lo: float, hi: float, tol: float,
                      residual_target: float = math.inf, max_iter: int = 400):
    """Bisection for a decreasing phi with phi(lo) > 0 > phi(hi).

    Narrows until the bracket is below ``tol`` and |phi(mid)| is below
    ``residual_target`` (or float resolution stops progress).  Returns
    ``(mid, iterations, (lo, hi))``.
    """
    it = 0
    mid = 0.5 * (lo + hi)
    val = phi(mid)
    while it < max_iter:
        if (hi - lo) <= tol and abs(val) <= residual_target:
            break
        if val > 0.0:
            lo = mid
        else:
            hi = mid
        new_mid = 0.5 * (lo + hi)
        if new_mid <= lo or new_mid >= hi:
            break
        mid = new_mid
        val = phi(mid)
        it += 1
    return mid, it, (lo, hi)
