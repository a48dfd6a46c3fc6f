"""Confluent hypergeometric series and the oscillator-in-a-box solutions.

The quadratic-potential Schrodinger operator -d^2/dz^2 + z^2/4 acting on
[-k, k] with absorbing (Dirichlet) walls has one even and one odd solution
for every absorption rate r:

    even:  exp(-z^2/4) * 1F1(-r/2,     1/2, z^2/2)     value 1 at z = 0
    odd:   z * exp(-z^2/4) * 1F1((1-r)/2, 3/2, z^2/2)  slope 1 at z = 0

Both satisfy [-d^2/dz^2 + z^2/4] phi = (r + 1/2) phi for every r; the walls
select the admissible rates (see the spectral module).

The Kummer function is evaluated by its Taylor series.  Arguments stay below
x = k^2/2 <= 24.5 in this package, where the series is short and stable; for
negative first parameters the terms alternate, so the sum is accumulated
with Neumaier compensation to keep cancellation error near machine level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, NonConvergenceError


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for series evaluation.

    Attributes
    ----------
    rel_tol : float
        Stop once the current term is below rel_tol times the running sum.
    max_terms : int
        Hard cap on the number of series terms.
    """

    rel_tol: float = 1e-14
    max_terms: int = 500

    def __post_init__(self) -> None:
        if not self.rel_tol > 0.0:
            raise InvalidParameterError("rel_tol must be positive")
        if self.max_terms < 1:
            raise InvalidParameterError("max_terms must be at least 1")


DEFAULT_SERIES = SeriesControl()


def kummer_1f1(a: float, b: float, x, ctrl: SeriesControl = DEFAULT_SERIES):
    """Kummer confluent hypergeometric function 1F1(a; b; x).

    Evaluates sum_n (a)_n / (b)_n * x^n / n! term by term with compensated
    summation.  Accepts a scalar or ndarray x and returns the same shape.

    Parameters
    ----------
    a, b : float
        Series parameters; b must not be zero or a negative integer.
    x : float or ndarray
        Argument(s); intended for x >= 0.
    ctrl : SeriesControl
        Relative truncation tolerance and term cap.

    Raises
    ------
    InvalidParameterError
        If b is zero or a negative integer (series poles).
    NonConvergenceError
        If max_terms is reached before the tolerance is met.
    """
    if b <= 0.0 and b == math.floor(b):
        raise InvalidParameterError(f"b={b} is a non-positive integer (series pole)")
    x_arr = np.asarray(x, dtype=float)
    scalar = x_arr.ndim == 0
    x_arr = np.atleast_1d(x_arr)

    total = np.ones_like(x_arr)
    comp = np.zeros_like(x_arr)
    term = np.ones_like(x_arr)
    for n in range(ctrl.max_terms):
        term = term * ((a + n) / (b + n)) * x_arr / (n + 1.0)
        fresh = total + term
        comp += np.where(np.abs(total) >= np.abs(term),
                         (total - fresh) + term,
                         (term - fresh) + total)
        total = fresh
        if np.all(np.abs(term) <= ctrl.rel_tol * np.abs(total + comp)):
            result = total + comp
            return float(result[0]) if scalar else result
    raise NonConvergenceError(
        f"1F1 series did not converge in {ctrl.max_terms} terms "
        f"(a={a}, b={b}, max|x|={float(np.max(np.abs(x_arr)))})")


def oscillator_even(rate: float, z, ctrl: SeriesControl = DEFAULT_SERIES):
    """Even solution of the confined-oscillator equation at absorption rate `rate`.

    Normalized to value 1 and slope 0 at the origin.  Accepts scalar or
    ndarray z; even in z by construction (z enters only through z^2).
    """
    z_arr = np.asarray(z, dtype=float)
    x = 0.5 * z_arr * z_arr
    return np.exp(-0.5 * x) * kummer_1f1(-0.5 * rate, 0.5, x, ctrl)


def oscillator_odd(rate: float, z, ctrl: SeriesControl = DEFAULT_SERIES):
    """Odd solution of the confined-oscillator equation at absorption rate `rate`.

    Normalized to value 0 and slope 1 at the origin; antisymmetric in z.
    """
    z_arr = np.asarray(z, dtype=float)
    x = 0.5 * z_arr * z_arr
    return z_arr * np.exp(-0.5 * x) * kummer_1f1(0.5 * (1.0 - rate), 1.5, x, ctrl)
