"""Internal numerical kernels: bracketing root finder and adaptive quadrature."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import BracketError

_EPS = float(np.finfo(float).eps)

# Gauss-Legendre nodes/weights on [-1, 1], low and high order for error control.
_GL_LO = np.polynomial.legendre.leggauss(20)
_GL_HI = np.polynomial.legendre.leggauss(40)


def brent(f: Callable[[float], float], a: float, b: float,
          xtol: float = 1e-14, rtol: float = 1e-12, max_iter: int = 200) -> float:
    """Root of f inside the sign-change interval [a, b].

    Inverse quadratic interpolation safeguarded by bisection; converges for
    any continuous f with f(a)*f(b) <= 0.
    """
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise BracketError(f"no sign change on [{a}, {b}]")
    c, fc = a, fa
    d = e = b - a
    for _ in range(max_iter):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol = 2.0 * _EPS * abs(b) + 0.5 * (xtol + rtol * abs(b))
        m = 0.5 * (c - b)
        if abs(m) <= tol or fb == 0.0:
            return b
        if abs(e) < tol or abs(fa) <= abs(fb):
            d = e = m
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0:
                q = -q
            else:
                p = -p
            s2, e = e, d
            if 2.0 * p < 3.0 * m * q - abs(tol * q) and p < abs(0.5 * s2 * q):
                d = p / q
            else:
                d = e = m
        a, fa = b, fb
        if abs(d) > tol:
            b += d
        else:
            b += tol if m > 0 else -tol
        fb = f(b)
        if (fb > 0) == (fc > 0):
            c, fc = a, fa
            d = e = b - a
    return b


def gauss_legendre(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                   abs_tol: float = 1e-12, max_depth: int = 24) -> float:
    """Integral of a smooth vectorized f over [a, b].

    Each panel is evaluated with 20- and 40-node Gauss-Legendre rules; the
    difference drives interval halving until the panel error estimate is
    below its share of abs_tol.
    """
    def panel(lo: float, hi: float, tol: float, depth: int) -> float:
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        lo_val = half * float(np.dot(_GL_LO[1], f(mid + half * _GL_LO[0])))
        hi_val = half * float(np.dot(_GL_HI[1], f(mid + half * _GL_HI[0])))
        if abs(hi_val - lo_val) <= tol or depth >= max_depth:
            return hi_val
        return (panel(lo, mid, 0.5 * tol, depth + 1)
                + panel(mid, hi, 0.5 * tol, depth + 1))

    if a == b:
        return 0.0
    return panel(float(a), float(b), abs_tol, 0)
