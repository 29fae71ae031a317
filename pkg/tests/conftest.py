"""Pytest configuration and fixtures"""

import numpy as np
import pytest
from click.testing import CliRunner
from hypothesis import settings

from src.models import (
    ExponentialInterarrival,
    ExponentialKernel,
    UniformKernel,
    WeibullInterarrival,
)

# Configure Hypothesis to run at least 100 iterations for property tests
settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@pytest.fixture
def poisson_model():
    """Exponential(1) interarrivals"""
    return ExponentialInterarrival(rho=1.0)


@pytest.fixture
def weibull_model():
    """Weibull with scale 3 and shape 2"""
    return WeibullInterarrival(scale=3.0, shape=2.0)


@pytest.fixture
def exp_kernel():
    """Exponential kernel with alpha 0.5 and beta 1"""
    return ExponentialKernel(alpha=0.5, beta=1.0)


@pytest.fixture
def zero_kernel():
    """Kernel without excitation"""
    return ExponentialKernel(alpha=0.0, beta=1.0)


@pytest.fixture
def uniform_kernel():
    """Uniform kernel with alpha 0.5 on [0, 2]"""
    return UniformKernel(alpha=0.5, c=2.0)


@pytest.fixture
def rng():
    """Seeded generator"""
    return np.random.default_rng(12345)


@pytest.fixture
def runner():
    """Create CLI runner"""
    return CliRunner()
