"""Tests for the statistical primitives"""

import math

import numpy as np
import pytest

from src.exceptions import ValidationError
from src.services.statsutil import (
    dispersion_ratio_test,
    empirical_cdf,
    ks_critical_value,
    ks_statistic,
    make_stream,
    normal_cdf,
    regression_through_origin,
    sample_mean_var,
    two_sample_z,
)


def test_make_stream_is_reproducible():
    """Test equal arguments give identical draws"""
    assert np.array_equal(make_stream(42, 3).random(5), make_stream(42, 3).random(5))


def test_make_stream_separates_indices_and_salt():
    """Test different indices or salts give different draws"""
    base = make_stream(42, 0).random(5)
    assert not np.array_equal(base, make_stream(42, 1).random(5))
    assert not np.array_equal(base, make_stream(42, 0, 1).random(5))
    assert not np.array_equal(make_stream(42, 0, 1).random(5), make_stream(42, 0, 2).random(5))


def test_make_stream_rejects_negative():
    """Test negative seeds and indices"""
    with pytest.raises(ValidationError):
        make_stream(-1, 0)
    with pytest.raises(ValidationError):
        make_stream(1, -1)


def test_regression_through_origin():
    """Test an exact line through the origin"""
    assert regression_through_origin([1, 2, 3], [2, 4, 6]) == pytest.approx(2.0)
    assert regression_through_origin([1, 2], [1, 3]) == pytest.approx(7.0 / 5.0)


def test_regression_rejects_bad_input():
    """Test empty, mismatched and all-zero inputs"""
    with pytest.raises(ValidationError):
        regression_through_origin([], [])
    with pytest.raises(ValidationError):
        regression_through_origin([1, 2], [1])
    with pytest.raises(ValidationError) as exc_info:
        regression_through_origin([0, 0], [1, 2])
    assert exc_info.value.field == 'xs'


def test_empirical_cdf_is_right_continuous():
    """Test step heights and right continuity"""
    cdf = empirical_cdf([3.0, 1.0, 2.0, 2.0])
    assert cdf(0.5) == 0.0
    assert cdf(1.0) == 0.25
    assert cdf(2.0) == 0.75
    assert cdf(10.0) == 1.0
    assert np.array_equal(cdf([1.5, 3.0]), [0.25, 1.0])


def test_ks_statistic_single_point():
    """Test D for a one-point sample against the uniform law"""
    assert ks_statistic([0.5], lambda x: np.clip(x, 0.0, 1.0)) == pytest.approx(0.5)


def test_ks_statistic_normal_sample():
    """Test a large normal sample passes at 1%"""
    sample = make_stream(7, 0).standard_normal(5000)
    assert ks_statistic(sample, normal_cdf) < ks_critical_value(0.01, sample.size)


def test_ks_statistic_detects_shift():
    """Test a shifted sample fails at 1%"""
    sample = make_stream(7, 1).standard_normal(2000) + 0.5
    assert ks_statistic(sample, normal_cdf) > ks_critical_value(0.01, sample.size)


def test_ks_critical_value():
    """Test the asymptotic 1% and 5% constants"""
    assert ks_critical_value(0.01, 1) == pytest.approx(1.6276, abs=1e-3)
    assert ks_critical_value(0.05, 100) == pytest.approx(0.13581, abs=1e-4)
    with pytest.raises(ValidationError):
        ks_critical_value(1.5, 10)
    with pytest.raises(ValidationError):
        ks_critical_value(0.01, 0)


def test_normal_cdf():
    """Test standard normal values"""
    assert normal_cdf(0.0) == 0.5
    assert normal_cdf(1.959964) == pytest.approx(0.975, abs=1e-6)
    assert normal_cdf(-40.0) >= 0.0
    assert normal_cdf(40.0) == 1.0


def test_normal_cdf_elementwise_on_arrays():
    """Test arrays map elementwise, as kstest calls the CDF"""
    values = normal_cdf(np.array([-1.959964, 0.0, 1.959964]))
    assert isinstance(values, np.ndarray)
    assert values == pytest.approx([0.025, 0.5, 0.975], abs=1e-6)
    assert isinstance(normal_cdf(0.5), float)


def test_sample_mean_var():
    """Test unbiased variance"""
    assert sample_mean_var([1.0, 2.0, 3.0, 4.0]) == pytest.approx((2.5, 5.0 / 3.0))
    with pytest.raises(ValidationError):
        sample_mean_var([1.0])


def test_two_sample_z():
    """Test the z statistic and its p-value"""
    z, p = two_sample_z([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
    assert z == 0.0
    assert p == pytest.approx(1.0)
    z, p = two_sample_z([2.0, 4.0], [0.0, 2.0])
    assert z == pytest.approx(2.0 / math.sqrt(2.0))
    assert p == pytest.approx(2.0 * normal_cdf(-abs(z)))


def test_two_sample_z_constant_samples():
    """Test degenerate samples without spread"""
    assert two_sample_z([1.0, 1.0], [1.0, 1.0]) == (0.0, 1.0)
    assert two_sample_z([2.0, 2.0], [1.0, 1.0]) == (math.inf, 0.0)
    assert two_sample_z([0.0, 0.0], [1.0, 1.0]) == (-math.inf, 0.0)


def test_dispersion_ratio_test():
    """Test the F ratio and symmetry of its two-sided p-value"""
    rng = make_stream(8, 0)
    a = rng.normal(0.0, 1.0, 300)
    b = rng.normal(0.0, 1.0, 300)
    ratio, p = dispersion_ratio_test(a, b)
    inverse, p_swapped = dispersion_ratio_test(b, a)
    assert ratio == pytest.approx(1.0 / inverse)
    assert p == pytest.approx(p_swapped, rel=1e-6)
    assert 0.0 <= p <= 1.0


def test_dispersion_ratio_detects_spread():
    """Test a doubled standard deviation is rejected"""
    rng = make_stream(8, 1)
    ratio, p = dispersion_ratio_test(rng.normal(0.0, 2.0, 500), rng.normal(0.0, 1.0, 500))
    assert ratio > 2.0
    assert p < 0.01


def test_dispersion_ratio_constant_samples():
    """Test zero variance in the denominator"""
    assert dispersion_ratio_test([1.0, 1.0], [3.0, 3.0]) == (1.0, 1.0)
    assert dispersion_ratio_test([1.0, 2.0], [3.0, 3.0]) == (math.inf, 0.0)
