"""Tests for the closed-form limit constants"""

import math

import pytest

from src.models import ExponentialKernel, LimitConstants, UniformKernel, WeibullInterarrival
from src.services.limits import limit_constants, sigma2_decomposition, weibull_family_table


def test_weibull_reference_constants(weibull_model, exp_kernel):
    """Test m, lln slope and sigma^2 for Weibull(3, 2) with alpha 0.5"""
    limits = limit_constants(weibull_model, exp_kernel)
    assert limits.m == pytest.approx(0.376126, abs=1e-5)
    assert limits.lln_slope == pytest.approx(0.752252, abs=1e-5)
    assert limits.sigma2_cluster == pytest.approx(1.504504, abs=1e-5)
    assert limits.sigma2_immigration == pytest.approx(0.411092, abs=1e-5)
    assert 1.915 <= limits.sigma2 <= 1.917
    assert limits.ew == pytest.approx(2.0)
    assert limits.varw == pytest.approx(4.0)


def test_poisson_reference_constants(poisson_model, exp_kernel):
    """Test sigma^2 = 8 for Exp(1) immigrants with alpha 0.5"""
    limits = limit_constants(poisson_model, exp_kernel)
    assert limits.lln_slope == pytest.approx(2.0)
    assert limits.sigma2 == pytest.approx(8.0)
    assert sigma2_decomposition(poisson_model, exp_kernel) == pytest.approx((4.0, 4.0))


def test_constants_without_excitation(weibull_model, zero_kernel):
    """Test the renewal CLT variance m^3 Var[tau] when alpha = 0"""
    limits = limit_constants(weibull_model, zero_kernel)
    m = weibull_model.rate
    assert limits.sigma2_cluster == 0.0
    assert limits.sigma2 == pytest.approx(m ** 3 * 9.0 * (1 - math.pi / 4))
    assert limits.lln_slope == pytest.approx(m)


def test_constants_depend_only_on_alpha(weibull_model):
    """Test kernel shape does not enter the constants"""
    first = limit_constants(weibull_model, ExponentialKernel(alpha=0.3, beta=5.0))
    second = limit_constants(weibull_model, UniformKernel(alpha=0.3, c=0.1))
    assert first == second


def test_limit_constants_round_trip(weibull_model, exp_kernel):
    """Test dictionary conversion"""
    limits = limit_constants(weibull_model, exp_kernel)
    assert LimitConstants.from_dict(limits.to_dict()) == limits


def test_weibull_family_table(exp_kernel):
    """Test the unit-mean sweep over shapes"""
    rows = weibull_family_table([0.5, 1, 2, 4], exp_kernel)
    assert [row['k'] for row in rows] == [0.5, 1.0, 2.0, 4.0]
    for row in rows:
        assert row['lln_slope'] == pytest.approx(2.0)
        assert row['sigma2_cluster'] == pytest.approx(4.0)
        assert row['sigma2'] == pytest.approx(row['sigma2_cluster'] + row['sigma2_immigration'])
    by_k = {row['k']: row for row in rows}
    assert by_k[0.5]['sigma2'] == pytest.approx(24.0)
    assert by_k[1.0]['sigma2'] == pytest.approx(8.0)
    assert by_k[1.0]['scale'] == pytest.approx(1.0)
    assert by_k[2.0]['scale'] == pytest.approx(2.0 / math.sqrt(math.pi))
    assert by_k[2.0]['sigma2'] == pytest.approx(4.0 + 4.0 * (4.0 / math.pi - 1.0))
    assert by_k[2.0]['weibull_var_unit_scale'] == pytest.approx(1.0 - math.pi / 4)
    assert by_k[0.5]['weibull_var_unit_scale'] == pytest.approx(20.0)
    sigmas = [row['sigma2'] for row in rows]
    assert sigmas == sorted(sigmas, reverse=True)


def test_family_rows_are_unit_mean(exp_kernel):
    """Test every rescaled Weibull has mean 1"""
    for row in weibull_family_table([0.7, 1.5, 3.0], exp_kernel):
        assert WeibullInterarrival(scale=row['scale'], shape=row['k']).mean == pytest.approx(1.0)
