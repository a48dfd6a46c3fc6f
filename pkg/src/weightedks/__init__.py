"""Tail-sensitive goodness-of-fit testing.

Weighting the empirical discrepancy by its inverse standard deviation makes
the Kolmogorov-Smirnov statistic equally sensitive to every quantile,
including the extreme tails.  This package computes the large-sample null
law of that weighted supremum from first principles (the spectrum of a
harmonic oscillator confined between absorbing walls), evaluates the
statistic on data, and cross-validates both against independent
finite-difference and Monte Carlo oracles.
"""

from .distribution import (QuantileWindow, TestLaw, cdf_at_zero_horizon,
                           critical_value, critical_value_asymptotic,
                           critical_value_doublelog, default_window, horizon,
                           ks_classical_cdf, ks_classical_critical_value,
                           pvalue, survival_cdf)
from .errors import (AsymptoticRegimeWarning, BracketError, ClampedDataWarning,
                     ConfigError, DegenerateNullError, DomainError,
                     EmptyWindowError, InsufficientDataError, InvalidDataError,
                     InvalidParameterError, NonConvergenceError,
                     NoSolutionError, WeightedKSError)
from .estimators import ProbabilityIntegralTransform, WeightedKSTest
from .montecarlo import (ExponentFit, SimulationConfig, SurvivalEstimate,
                         direct_survival, exponent_fit, ou_survival,
                         ou_survival_profile)
from .special import SeriesControl, kummer_1f1, oscillator_even, oscillator_odd
from .spectral import (K_MAX, K_MIN, SpectralSolution, excited_rate,
                       ground_rate, ground_rate_large_k, ground_rate_small_k,
                       ground_state, prefactor, prefactor_large_k,
                       prefactor_small_k)
from .statistic import (EmpiricalProcess, NullDistribution, TestReport,
                        WeightedStatistic, classical_ks_statistic,
                        pit_transform, run_test, weighted_ks_statistic)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticRegimeWarning", "BracketError", "ClampedDataWarning",
    "ConfigError", "DegenerateNullError", "DomainError", "EmptyWindowError",
    "EmpiricalProcess", "ExponentFit", "InsufficientDataError",
    "InvalidDataError", "InvalidParameterError", "K_MAX", "K_MIN",
    "NonConvergenceError", "NoSolutionError", "NullDistribution",
    "ProbabilityIntegralTransform", "QuantileWindow", "SeriesControl",
    "SimulationConfig", "SpectralSolution", "SurvivalEstimate", "TestLaw",
    "TestReport", "WeightedKSError", "WeightedKSTest", "WeightedStatistic",
    "cdf_at_zero_horizon", "classical_ks_statistic", "critical_value",
    "critical_value_asymptotic", "critical_value_doublelog", "default_window",
    "direct_survival", "excited_rate", "exponent_fit", "ground_rate",
    "ground_rate_large_k", "ground_rate_small_k", "ground_state", "horizon",
    "ks_classical_cdf", "ks_classical_critical_value", "kummer_1f1",
    "oscillator_even", "oscillator_odd", "ou_survival", "ou_survival_profile",
    "pit_transform", "prefactor", "prefactor_large_k", "prefactor_small_k",
    "pvalue", "run_test", "survival_cdf", "weighted_ks_statistic",
]
