"""Stochastic oracles for the survival law.

Two independent routes to the same distribution:

* direct sampling - draw size-n uniform samples, evaluate the weighted
  statistic over the default window, and count the fraction below each
  threshold;
* particle simulation - Euler-Maruyama integration of the mean-reverting
  diffusion dZ = -Z dt + sqrt(2) dB started from a standard normal, with
  absorption on first contact with the walls +-k, surviving fraction taken
  at the horizon.

Replicas are split into fixed-size chunks, each driven by a child stream
spawned from the configured seed, so results are bit-identical regardless
of execution order and chunks may run in parallel.  The particle stepper
checks absorption only at step ends; the resulting survival inflation is
O(sqrt(dt)) and should be controlled by comparing dt against dt/2 runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .distribution import default_window
from .errors import ConfigError, InsufficientDataError
from .statistic import _weighted_sup_sorted

_DIRECT_CHUNK_VALUES = 2_000_000  # rows per chunk = this // n
_OU_CHUNK_PATHS = 1 << 18
_OU_COMPACT_EVERY = 32


@dataclass(frozen=True)
class SimulationConfig:
    """Replica count, seed, and step size shared by the simulation modes."""

    replicas: int = 10_000
    seed: int = 0
    dt: float = 1e-3

    def __post_init__(self) -> None:
        if self.replicas < 1:
            raise ConfigError(f"replicas={self.replicas} must be >= 1")
        if not self.dt > 0.0:
            raise ConfigError(f"dt={self.dt} must be positive")


@dataclass(frozen=True)
class SurvivalEstimate:
    """Monte Carlo survival fraction with its binomial standard error."""

    param: float
    survival: float
    std_error: float
    replicas: int

    @classmethod
    def from_count(cls, param: float, count: int, replicas: int) -> "SurvivalEstimate":
        s = count / replicas
        return cls(param=float(param), survival=s,
                   std_error=math.sqrt(s * (1.0 - s) / replicas),
                   replicas=replicas)


@dataclass(frozen=True)
class ExponentFit:
    """Log-linear fit of survival against horizon."""

    decay_rate: float
    prefactor: float


def _chunk_streams(seed: int, n_chunks: int):
    return np.random.SeedSequence(seed).spawn(n_chunks)


def direct_survival(n: int, k_grid: Sequence[float],
                    config: SimulationConfig) -> list[SurvivalEstimate]:
    """Survival fraction of the weighted statistic at each threshold in k_grid.

    Each replica draws n uniforms and evaluates the statistic over the
    default window of size n; one estimate per threshold is returned, all
    from the same replica set (so the estimates are coupled and monotone in
    the threshold by construction).
    """
    n = int(n)
    if n < 2:
        raise ConfigError(f"sample size n={n} must be >= 2")
    window = default_window(n)
    a, b = window.a, window.b
    ks = np.asarray(list(k_grid), dtype=float)
    rows_per_chunk = max(1, _DIRECT_CHUNK_VALUES // n)
    n_chunks = -(-config.replicas // rows_per_chunk)
    counts = np.zeros(ks.size, dtype=np.int64)
    done = 0
    for stream in _chunk_streams(config.seed, n_chunks):
        rows = min(rows_per_chunk, config.replicas - done)
        rng = np.random.default_rng(stream)
        u = np.sort(rng.random((rows, n)), axis=1)
        stats = _weighted_sup_sorted(u, a, b)
        counts += (stats[None, :] <= ks[:, None]).sum(axis=1)
        done += rows
    return [SurvivalEstimate.from_count(k, int(c), config.replicas)
            for k, c in zip(ks, counts)]


def ou_survival_profile(k: float, horizons: Sequence[float],
                        config: SimulationConfig) -> list[SurvivalEstimate]:
    """Surviving fractions at several horizons from one path ensemble.

    Paths start at a standard normal draw (starts outside the walls count as
    absorbed at time zero), advance by Euler-Maruyama steps of size dt, and
    are killed once |Z| >= k.  All horizons are read off the same ensemble,
    so the estimates are nested: survival is exactly nonincreasing along the
    sorted horizons.
    """
    k = float(k)
    if not k > 0.0:
        raise ConfigError(f"wall half-width k={k} must be positive")
    hs = sorted(float(t) for t in horizons)
    if not hs or hs[0] <= 0.0:
        raise ConfigError("horizons must be positive")
    dt = config.dt
    checkpoints = {int(round(t / dt)): t for t in hs}
    for steps, t in checkpoints.items():
        if steps < 1:
            raise ConfigError(f"horizon {t} shorter than one step dt={dt}")
    total_steps = max(checkpoints)
    root = math.sqrt(2.0 * dt)
    counts = {t: 0 for t in hs}
    n_chunks = -(-config.replicas // _OU_CHUNK_PATHS)
    done = 0
    for stream in _chunk_streams(config.seed, n_chunks):
        paths = min(_OU_CHUNK_PATHS, config.replicas - done)
        rng = np.random.default_rng(stream)
        z = rng.standard_normal(paths)
        z = z[np.abs(z) < k]
        alive = np.ones(z.size, dtype=bool)
        for step in range(1, total_steps + 1):
            z = z - z * dt + root * rng.standard_normal(z.size)
            alive &= np.abs(z) < k
            if step % _OU_COMPACT_EVERY == 0:
                z = z[alive]
                alive = np.ones(z.size, dtype=bool)
            if step in checkpoints:
                counts[checkpoints[step]] += int(alive.sum())
        done += paths
    return [SurvivalEstimate.from_count(t, counts[t], config.replicas)
            for t in hs]


def ou_survival(k: float, horizon: float,
                config: SimulationConfig) -> SurvivalEstimate:
    """Surviving fraction of the absorbed mean-reverting particle at `horizon`."""
    return ou_survival_profile(k, [horizon], config)[0]


def exponent_fit(estimates: Sequence[SurvivalEstimate],
                 horizons: Optional[Sequence[float]] = None) -> ExponentFit:
    """Least-squares line through ln(survival) vs horizon.

    The slope estimates the decay rate and the intercept the prefactor.
    Horizons whose survival is 0 or 1 carry no usable log value and are
    dropped; at least four usable points are required.
    """
    ts = ([e.param for e in estimates] if horizons is None
          else [float(t) for t in horizons])
    if len(ts) != len(estimates):
        raise InsufficientDataError("one horizon per estimate required")
    pairs = [(t, e.survival) for t, e in zip(ts, estimates)
             if 0.0 < e.survival < 1.0]
    if len(pairs) < 4:
        raise InsufficientDataError(
            f"need >= 4 horizons with survival strictly inside (0, 1); "
            f"got {len(pairs)}")
    t_arr = np.array([p[0] for p in pairs])
    ln_s = np.log([p[1] for p in pairs])
    slope, intercept = np.polyfit(t_arr, ln_s, 1)
    return ExponentFit(decay_rate=-float(slope),
                       prefactor=float(math.exp(intercept)))
