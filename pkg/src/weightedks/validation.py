"""Input validation helpers for the estimator-facing API."""

from __future__ import annotations

import numpy as np

from .errors import InvalidDataError


def as_sample(X) -> np.ndarray:
    """Coerce array-like input to a finite 1-D float sample.

    Accepts shape (n,) or a single-column (n, 1); anything wider is
    ambiguous for a univariate test and rejected.
    """
    x = np.asarray(X, dtype=float)
    if x.ndim == 2 and x.shape[1] == 1:
        x = x[:, 0]
    if x.ndim != 1:
        raise InvalidDataError(
            f"expected a 1-D sample or single-column array, got shape {x.shape}")
    if x.size == 0:
        raise InvalidDataError("empty sample")
    if not np.all(np.isfinite(x)):
        bad = int(np.flatnonzero(~np.isfinite(x))[0])
        raise InvalidDataError(f"non-finite value at position {bad}")
    return x


def check_probability(value: float, name: str) -> float:
    value = float(value)
    if not (0.0 < value < 1.0):
        raise InvalidDataError(f"{name}={value} must lie strictly in (0, 1)")
    return value
