"""Observed statistics: probability integral transform and weighted supremum.

The observed statistic of a sample x_1..x_n against a fully specified null
cdf F is

    K = sqrt(n) * sup_{u in [a, b]} |F_hat(u) - u| / sqrt(u(1-u)),

where F_hat is the right-continuous empirical cdf of the transformed values
u_i = F(x_i) and [a, b] is the quantile window.  Between jumps the weighted
discrepancy is monotone in u, so the supremum is attained either at a window
endpoint or at a one-sided limit of a jump; the implementation evaluates
exactly that finite candidate set.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.special import erfinv, ndtr

from .distribution import (QuantileWindow, cdf_at_zero_horizon, critical_value,
                           default_window, pvalue)
from .spectral import K_MAX, K_MIN
from .errors import (ClampedDataWarning, DegenerateNullError, InvalidDataError,
                     InvalidParameterError)

CLAMP_EPS = 1e-15
DEGENERATE_FRACTION = 0.10


@dataclass(frozen=True)
class NullDistribution:
    """Fully specified null hypothesis; no parameters are estimated.

    family is one of "uniform", "normal", "exponential", "pit"; "pit" means
    the data is asserted to already live on (0, 1).
    """

    family: str
    params: tuple = ()

    _FAMILIES = ("uniform", "normal", "exponential", "pit")

    def __post_init__(self) -> None:
        if self.family not in self._FAMILIES:
            raise InvalidParameterError(
                f"unknown null family {self.family!r}; expected one of "
                f"{self._FAMILIES}")
        if self.family == "normal":
            if len(self.params) != 2:
                raise InvalidParameterError("normal null needs (mu, sigma)")
            if not self.params[1] > 0:
                raise InvalidParameterError(f"sigma={self.params[1]} must be > 0")
        elif self.family == "exponential":
            if len(self.params) != 1:
                raise InvalidParameterError("exponential null needs (rate,)")
            if not self.params[0] > 0:
                raise InvalidParameterError(f"rate={self.params[0]} must be > 0")
        elif self.params:
            raise InvalidParameterError(f"{self.family} null takes no parameters")

    @classmethod
    def from_spec(cls, spec: str) -> "NullDistribution":
        """Parse a "family[:p1[,p2]]" string, e.g. "normal:0,1" or "exp:1.5"."""
        name, _, raw = spec.strip().partition(":")
        name = name.strip().lower()
        aliases = {"uniform01": "uniform", "exp": "exponential"}
        name = aliases.get(name, name)
        try:
            params = tuple(float(p) for p in raw.split(",")) if raw else ()
        except ValueError as exc:
            raise InvalidParameterError(f"bad null parameters in {spec!r}") from exc
        return cls(name, params)

    def spec(self) -> str:
        if not self.params:
            return self.family
        return self.family + ":" + ",".join(f"{p:g}" for p in self.params)

    def cdf(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.family == "normal":
            mu, sigma = self.params
            return ndtr((x - mu) / sigma)
        if self.family == "exponential":
            rate = self.params[0]
            return np.where(x > 0.0, -np.expm1(-rate * x), 0.0)
        # uniform and pit: identity on [0, 1], saturating outside
        return np.clip(x, 0.0, 1.0)


@dataclass(frozen=True)
class EmpiricalProcess:
    """Sorted null-transformed sample, clamped strictly inside (0, 1)."""

    values: np.ndarray
    n_clamped: int = 0

    @property
    def n(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class WeightedStatistic:
    """Observed weighted supremum and where it was attained."""

    statistic: float
    argmax_quantile: float
    n: int
    window: QuantileWindow


@dataclass(frozen=True)
class TestReport:
    """Outcome of one goodness-of-fit test run."""

    statistic: float
    argmax_quantile: float
    pvalue: float
    critical_value: float
    reject: bool
    n: int
    alpha: float
    window: QuantileWindow
    null: NullDistribution
    warnings: tuple = ()


def pit_transform(data: Sequence[float], null: NullDistribution) -> EmpiricalProcess:
    """Map data through the null cdf and sort: the empirical process input.

    Values rounding to exactly 0 or 1 are clamped to [1e-15, 1 - 1e-15] with
    a counter (and a ClampedDataWarning).  If more than 10% of the sample
    lands on a single clamped endpoint the null is declared degenerate.
    """
    x = np.asarray(data, dtype=float)
    if x.ndim != 1:
        x = x.reshape(-1)
    if x.size == 0:
        raise InvalidDataError("empty sample")
    if not np.all(np.isfinite(x)):
        bad = int(np.flatnonzero(~np.isfinite(x))[0])
        raise InvalidDataError(f"non-finite value at position {bad}")
    u = np.sort(null.cdf(x))
    n_low = int((u < CLAMP_EPS).sum())
    n_high = int((u > 1.0 - CLAMP_EPS).sum())
    if max(n_low, n_high) > DEGENERATE_FRACTION * x.size:
        raise DegenerateNullError(
            f"null cdf maps {max(n_low, n_high)} of {x.size} points to a "
            f"single endpoint; the null is degenerate for this sample")
    if n_low or n_high:
        warnings.warn(f"clamped {n_low + n_high} transformed values to "
                      f"({CLAMP_EPS}, {1 - CLAMP_EPS})",
                      ClampedDataWarning, stacklevel=2)
        u = np.clip(u, CLAMP_EPS, 1.0 - CLAMP_EPS)
    return EmpiricalProcess(values=u, n_clamped=n_low + n_high)


def _weighted_sup_sorted(u: np.ndarray, a: float, b: float) -> np.ndarray:
    """sqrt(n)-scaled weighted supremum for each row of sorted matrix u.

    Candidate values: the empirical cdf evaluated at the window endpoints,
    plus both one-sided cdf limits at every jump in (a, b].  Jumps sitting
    exactly at u == a contribute only through the endpoint evaluation (their
    left limit lives outside the window, and intermediate tie levels are
    never attained).
    """
    n = u.shape[1]
    i = np.arange(1.0, n + 1.0)
    weight = 1.0 / np.sqrt(u * (1.0 - u))
    inside = (u > a) & (u <= b)
    hi = np.abs(i / n - u) * weight
    lo = np.abs((i - 1.0) / n - u) * weight
    best = np.where(inside, np.maximum(hi, lo), 0.0).max(axis=1)
    f_at_a = (u <= a).sum(axis=1) / n
    f_at_b = (u <= b).sum(axis=1) / n
    w_a = 1.0 / math.sqrt(a * (1.0 - a))
    w_b = 1.0 / math.sqrt(b * (1.0 - b))
    best = np.maximum(best, np.abs(f_at_a - a) * w_a)
    best = np.maximum(best, np.abs(f_at_b - b) * w_b)
    return math.sqrt(n) * best


def weighted_ks_statistic(process: EmpiricalProcess,
                          window: QuantileWindow) -> WeightedStatistic:
    """Observed weighted supremum of the sample over the quantile window.

    A collapsed window (a == b) degenerates to the single-quantile score
    |F_hat(a) - a| / sqrt(a(1-a)); its null law is cdf_at_zero_horizon.
    """
    u = process.values
    n = u.size
    a, b = window.a, window.b
    i = np.arange(1.0, n + 1.0)
    weight = 1.0 / np.sqrt(u * (1.0 - u))
    inside = (u > a) & (u <= b)
    hi = np.where(inside, np.abs(i / n - u) * weight, 0.0)
    lo = np.where(inside, np.abs((i - 1.0) / n - u) * weight, 0.0)
    f_at_a = float(np.searchsorted(u, a, side="right")) / n
    f_at_b = float(np.searchsorted(u, b, side="right")) / n
    end_vals = np.array([
        abs(f_at_a - a) / math.sqrt(a * (1.0 - a)),
        abs(f_at_b - b) / math.sqrt(b * (1.0 - b)),
    ])
    values = np.concatenate([end_vals, hi, lo])
    positions = np.concatenate([np.array([a, b]), u, u])
    j = int(np.argmax(values))
    return WeightedStatistic(statistic=math.sqrt(n) * float(values[j]),
                             argmax_quantile=float(positions[j]),
                             n=n, window=window)


def classical_ks_statistic(process: EmpiricalProcess) -> float:
    """sqrt(n)-scaled classical Kolmogorov-Smirnov statistic (whole range)."""
    u = process.values
    n = u.size
    i = np.arange(1.0, n + 1.0)
    d = np.maximum(np.abs(i / n - u), np.abs((i - 1.0) / n - u)).max()
    return math.sqrt(n) * float(d)


def run_test(data: Sequence[float], null: NullDistribution, alpha: float = 0.05,
             window: Optional[QuantileWindow] = None) -> TestReport:
    """Run the weighted goodness-of-fit test end to end.

    Transforms the data through the null, evaluates the weighted supremum
    over `window` (default: the expected-extremes window of the sample
    size), and scores it against the survival law of the matching horizon.
    Rejection requires the observed statistic to strictly exceed the
    critical value.
    """
    if isinstance(null, str):
        null = NullDistribution.from_spec(null)
    notes = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        process = pit_transform(data, null)
        if window is None:
            window = default_window(process.n)
        observed = weighted_ks_statistic(process, window)
        if window.horizon == 0.0:
            p = (1.0 if observed.statistic == 0.0
                 else 1.0 - cdf_at_zero_horizon(observed.statistic))
            k_star = math.sqrt(2.0) * float(erfinv(1.0 - alpha))
        else:
            effective_n = math.exp(window.horizon)
            # The law is evaluated on the supported statistic range; p-values
            # saturate near 0 (1) for observations beyond (below) it.
            law_k = min(max(observed.statistic, K_MIN), K_MAX)
            p = pvalue(effective_n, law_k)
            k_star = critical_value(effective_n, alpha)
    notes.extend(str(w.message) for w in caught)
    return TestReport(statistic=observed.statistic,
                      argmax_quantile=observed.argmax_quantile,
                      pvalue=p, critical_value=k_star,
                      reject=bool(observed.statistic > k_star),
                      n=process.n, alpha=alpha, window=window, null=null,
                      warnings=tuple(notes))
