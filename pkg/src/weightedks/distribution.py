"""The test law: survival function, p-values, critical values, and windows.

For a sample of size n tested over the default quantile window
[1/(n+1), n/(n+1)], the variance-weighted Kolmogorov statistic K satisfies

    P[K <= k] = S(n; k) = prefactor(k) * n^(-ground_rate(k)),

an n-dependent law (unlike the classical case).  The window enters only
through its log-time horizon T = ln sqrt(b(1-a) / (a(1-b))), which equals
ln n exactly at the default endpoints; arbitrary windows map through the
same formula with an effective sample size exp(T).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional

from ._numerics import brent
from .errors import AsymptoticRegimeWarning, DomainError, NoSolutionError
from .spectral import K_MAX, K_MIN, ground_rate, ground_rate_large_k, ground_state

SMALL_SAMPLE = 50  # below this the large-sample law is a stretch


def horizon(a: float, b: float) -> float:
    """Log-time horizon ln sqrt(b(1-a) / (a(1-b))) of the window [a, b].

    Zero exactly when a == b; ln n at the default window of a size-n sample.
    """
    a, b = float(a), float(b)
    if not (0.0 < a < 1.0 and 0.0 < b < 1.0):
        raise DomainError(f"window endpoints must lie in (0, 1), got ({a}, {b})")
    if a > b:
        raise DomainError(f"window endpoints out of order: a={a} > b={b}")
    return math.log(math.sqrt((b * (1.0 - a)) / (a * (1.0 - b))))


@dataclass(frozen=True)
class QuantileWindow:
    """Closed quantile interval [a, b] under test, with its horizon."""

    a: float
    b: float
    horizon: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "horizon", horizon(self.a, self.b))


def default_window(n: float) -> QuantileWindow:
    """Window [1/(n+1), n/(n+1)] spanning the expected extremes of n points."""
    n = float(n)
    if n < 1.0:
        raise DomainError(f"sample size n={n} must be at least 1")
    return QuantileWindow(1.0 / (n + 1.0), n / (n + 1.0))


def _check_n(n: float) -> float:
    n = float(n)
    if n < 2.0:
        raise DomainError(f"sample size n={n} must be at least 2")
    if n < SMALL_SAMPLE:
        warnings.warn(
            f"n={n:g} is small; the survival law is a large-sample asymptotic",
            AsymptoticRegimeWarning, stacklevel=3)
    return n


def survival_cdf(n: float, k: float) -> float:
    """P[K <= k] for sample size n: prefactor(k) * n^(-ground_rate(k)).

    Accepts non-integer effective sizes so arbitrary windows can be mapped
    through exp(horizon).  Clamped to [0, 1].
    """
    n = _check_n(n)
    state = ground_state(k)
    value = state.prefactor * n ** (-state.ground_rate)
    return min(1.0, max(0.0, value))


def pvalue(n: float, k_obs: float) -> float:
    """Probability of a weighted statistic at least as large as k_obs."""
    return 1.0 - survival_cdf(n, k_obs)


def critical_value(n: float, alpha: float) -> float:
    """Statistic threshold k* with survival_cdf(n, k*) = 1 - alpha.

    Solved by bisection-safeguarded root finding in k over the supported
    wall range; the survival cdf is strictly increasing in k.
    """
    n = _check_n(n)
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"alpha={alpha} must lie in (0, 1)")
    target = 1.0 - alpha

    def gap(k: float) -> float:
        state = ground_state(k)
        return state.prefactor * n ** (-state.ground_rate) - target

    lo, hi = gap(K_MIN), gap(K_MAX)
    if lo > 0.0 or hi < 0.0:
        raise NoSolutionError(
            f"confidence level {target} not attainable for n={n:g} within "
            f"the supported statistic range [{K_MIN}, {K_MAX}]")
    return brent(gap, K_MIN, K_MAX, xtol=1e-9, rtol=1e-12)


def critical_value_asymptotic(n: float, alpha: float = 0.05) -> float:
    """k* from the distant-wall chain ground_rate(k*) = -ln(1-alpha)/ln(n).

    Replaces the exact rate by sqrt(2/pi) k exp(-k^2/2) (and the prefactor
    by 1) and solves on the decreasing branch k > 1.  Gives 3.439 / 3.529 /
    3.597 / 3.651 at the 95% level for n = 1e3 ... 1e6.
    """
    n = float(n)
    if n <= 1.0:
        raise DomainError(f"need n > 1, got {n}")
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"alpha={alpha} must lie in (0, 1)")
    target = -math.log1p(-alpha) / math.log(n)
    if ground_rate_large_k(1.0) <= target:
        raise NoSolutionError(f"alpha={alpha} too large for the distant-wall "
                              f"branch at n={n:g}")
    return brent(lambda k: ground_rate_large_k(k) - target, 1.0, 40.0,
                 xtol=1e-12, rtol=1e-12)


def critical_value_doublelog(n: float) -> float:
    """Leading growth sqrt(2 ln ln n) of the critical value for huge n."""
    n = float(n)
    if n <= math.e:
        raise DomainError(f"need ln(ln(n)) > 0, i.e. n > e; got n={n}")
    return math.sqrt(2.0 * math.log(math.log(n)))


def ks_classical_cdf(k: float) -> float:
    """Classical (unweighted) Kolmogorov-Smirnov limit law.

    1 - 2 sum_{m>=1} (-1)^(m-1) exp(-2 m^2 k^2), summed until the next term
    drops below 1e-16; clamped to [0, 1].  The 95% point is near 1.358.
    """
    k = float(k)
    if k <= 0.0:
        return 0.0
    total = 0.0
    sign = 1.0
    m = 1
    while True:
        term = math.exp(-2.0 * m * m * k * k)
        if term < 1e-16:
            break
        total += sign * term
        sign = -sign
        m += 1
    return min(1.0, max(0.0, 1.0 - 2.0 * total))


def ks_classical_critical_value(alpha: float) -> float:
    """Classical KS threshold with limit-law cdf equal to 1 - alpha."""
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"alpha={alpha} must lie in (0, 1)")
    return brent(lambda k: ks_classical_cdf(k) - (1.0 - alpha), 1e-3, 8.0,
                 xtol=1e-12, rtol=1e-12)


def cdf_at_zero_horizon(k: float) -> float:
    """P[K <= k] for a collapsed window (a == b): erf(k / sqrt(2)).

    The weighted bridge at a single quantile is standard normal, so this is
    just the chance of starting inside the walls.
    """
    k = float(k)
    if k <= 0.0:
        raise DomainError(f"wall half-width k={k} must be positive")
    return math.erf(k / math.sqrt(2.0))


@dataclass(frozen=True)
class TestLaw:
    """Distribution of the statistic for one sample size and window.

    kind "weighted" uses the n-dependent survival law over `window`;
    kind "classical" uses the n-free Kolmogorov-Smirnov limit law.
    """

    n: float
    window: Optional[QuantileWindow] = None
    kind: str = "weighted"

    def __post_init__(self) -> None:
        if float(self.n) < 2.0:
            raise DomainError(f"sample size n={self.n} must be at least 2")
        if self.kind not in ("weighted", "classical"):
            raise DomainError(f"unknown law kind {self.kind!r}")
        if self.window is None:
            object.__setattr__(self, "window", default_window(self.n))

    @property
    def effective_n(self) -> float:
        """Sample size implied by the window horizon, exp(T)."""
        return math.exp(self.window.horizon)

    def cdf(self, k: float) -> float:
        if self.kind == "classical":
            return ks_classical_cdf(k)
        return survival_cdf(self.effective_n, k)

    def pvalue(self, k_obs: float) -> float:
        return 1.0 - self.cdf(k_obs)

    def critical_value(self, alpha: float) -> float:
        if self.kind == "classical":
            return ks_classical_critical_value(alpha)
        return critical_value(self.effective_n, alpha)
