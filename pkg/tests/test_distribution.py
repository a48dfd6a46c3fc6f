import math

import numpy as np
import pytest
import scipy.integrate as si

import weightedks as w
from weightedks import (AsymptoticRegimeWarning, DomainError, NoSolutionError,
                        QuantileWindow, cdf_at_zero_horizon, critical_value,
                        critical_value_asymptotic, critical_value_doublelog,
                        default_window, horizon, ks_classical_cdf,
                        ks_classical_critical_value, pvalue, survival_cdf)

# 95% thresholds from the distant-wall chain, one per decade of n
CHAIN_95 = {1e3: 3.439, 1e4: 3.529, 1e5: 3.597, 1e6: 3.651}


def test_horizon_examples():
    assert horizon(0.3, 0.3) == 0.0
    assert horizon(0.25, 0.75) == pytest.approx(math.log(3.0), rel=1e-15)
    for n in (100, 1000, 12345):
        assert horizon(1 / (n + 1), n / (n + 1)) == pytest.approx(
            math.log(n), abs=1e-12)


def test_horizon_domain_errors():
    for a, b in ((0.0, 0.5), (0.5, 1.0), (-0.1, 0.5), (0.6, 0.4), (0.5, 1.1)):
        with pytest.raises(DomainError):
            horizon(a, b)


def test_quantile_window_carries_horizon():
    win = QuantileWindow(0.25, 0.75)
    assert win.horizon == pytest.approx(math.log(3.0), rel=1e-15)
    assert QuantileWindow(0.4, 0.4).horizon == 0.0


def test_default_window():
    win = default_window(100)
    assert win.a == pytest.approx(1 / 101)
    assert win.b == pytest.approx(100 / 101)
    assert win.horizon == pytest.approx(math.log(100), abs=1e-12)


def test_survival_values_near_the_chain_thresholds():
    # the exact law at the chain thresholds sits within 0.01 of 95%
    assert survival_cdf(1e3, 3.439) == pytest.approx(0.95, abs=0.01)
    assert survival_cdf(1e6, 3.651) == pytest.approx(0.95, abs=0.01)


def test_survival_approaches_one_for_wide_walls():
    assert survival_cdf(1e4, 7.0) == pytest.approx(1.0, abs=1e-3)


def test_survival_clamped_and_monotone():
    ks = np.linspace(0.3, 6.5, 30)
    ns = [1e2, 1e3, 1e4, 1e5, 1e6]
    for n in ns:
        vals = [survival_cdf(n, float(k)) for k in ks]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(x <= y for x, y in zip(vals, vals[1:]))
    for k in (1.0, 2.5, 3.5, 5.0):
        by_n = [survival_cdf(n, k) for n in ns]
        assert all(x >= y for x, y in zip(by_n, by_n[1:]))


def test_survival_small_sample_warning():
    with pytest.warns(AsymptoticRegimeWarning):
        survival_cdf(10, 3.0)
    with pytest.raises(DomainError):
        survival_cdf(1.5, 3.0)


def test_pvalue_examples():
    assert pvalue(1e3, 3.439) == pytest.approx(0.05, abs=0.01)
    assert pvalue(1e5, 3.597) == pytest.approx(0.05, abs=0.01)
    assert pvalue(1e4, 0.06) == pytest.approx(1.0, abs=1e-9)


def test_critical_value_matches_chain_thresholds_loosely():
    for n, k_ref in CHAIN_95.items():
        assert critical_value(n, 0.05) == pytest.approx(k_ref, abs=0.05)


def test_critical_value_round_trip():
    for alpha in (0.01, 0.05, 0.10):
        for n in (1e2, 1e3, 1e4, 1e5, 1e6):
            k_star = critical_value(n, alpha)
            assert survival_cdf(n, k_star) == pytest.approx(1 - alpha, abs=1e-6)


def test_critical_value_no_solution():
    with pytest.raises(NoSolutionError):
        critical_value(1e4, 1e-12)
    with pytest.raises(DomainError):
        critical_value(1e4, 0.0)


def test_asymptotic_chain_three_decimals():
    for n, k_ref in CHAIN_95.items():
        assert critical_value_asymptotic(n, 0.05) == pytest.approx(k_ref, abs=5e-4)


def test_weighted_threshold_exceeds_classical():
    classical = ks_classical_critical_value(0.05)
    for n in (1e2, 1e3, 1e4, 1e5, 1e6):
        assert critical_value(n, 0.05) > classical


def test_classical_cdf_anchor():
    assert ks_classical_cdf(1.358) == pytest.approx(0.95, abs=1e-3)
    assert ks_classical_critical_value(0.05) == pytest.approx(1.358, abs=1e-3)


def test_classical_cdf_shape():
    ks = np.linspace(1e-3, 4.0, 200)
    vals = [ks_classical_cdf(float(k)) for k in ks]
    assert all(0.0 <= v <= 1.0 for v in vals)
    # nondecreasing up to series cancellation noise where the true value
    # underflows (k < 0.2, cdf < 1e-100)
    assert all(x <= y + 1e-15 for x, y in zip(vals, vals[1:]))
    assert ks_classical_cdf(1e-4) == 0.0
    assert ks_classical_cdf(3.0) == pytest.approx(1 - 2 * math.exp(-18), rel=1e-7)


def test_zero_horizon_cdf():
    assert cdf_at_zero_horizon(40.0) == pytest.approx(1.0, rel=1e-15)
    assert cdf_at_zero_horizon(1.959964) == pytest.approx(0.95, abs=1e-4)
    density_mass = si.quad(
        lambda z: math.exp(-z * z / 2) / math.sqrt(2 * math.pi), -0.5, 0.5,
        epsabs=1e-14)[0]
    assert cdf_at_zero_horizon(0.5) == pytest.approx(density_mass, rel=1e-12)
    with pytest.raises(DomainError):
        cdf_at_zero_horizon(0.0)


def test_doublelog_growth():
    assert critical_value_doublelog(1e6) == pytest.approx(
        math.sqrt(2 * math.log(math.log(1e6))), rel=1e-15)
    assert critical_value_doublelog(16) == pytest.approx(1.428, abs=1e-3)
    with pytest.raises(DomainError):
        critical_value_doublelog(math.e)


def test_doublelog_ratio_drifts_toward_one():
    ratios = [critical_value(n, 0.05) / critical_value_doublelog(n)
              for n in (1e3, 1e4, 1e5, 1e6)]
    assert all(0.9 <= r <= 2.2 for r in ratios)
    assert all(x > y for x, y in zip(ratios, ratios[1:]))  # slow drift down


def test_law_object_weighted():
    law = w.TestLaw(1000)
    assert law.window.horizon == pytest.approx(math.log(1000), abs=1e-12)
    assert law.cdf(3.439) == pytest.approx(survival_cdf(1000, 3.439), abs=1e-9)
    assert law.pvalue(3.439) == pytest.approx(1 - law.cdf(3.439), rel=1e-12)
    assert law.critical_value(0.05) == pytest.approx(
        critical_value(1000, 0.05), abs=1e-9)


def test_law_object_classical():
    law = w.TestLaw(1000, kind="classical")
    assert law.cdf(1.358) == pytest.approx(0.95, abs=1e-3)
    assert law.critical_value(0.05) == pytest.approx(1.358, abs=1e-3)
    with pytest.raises(DomainError):
        w.TestLaw(1000, kind="fancy")
    with pytest.raises(DomainError):
        w.TestLaw(1)
