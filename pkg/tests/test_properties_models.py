"""Property-based tests for data models"""

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from src.models import (
    ExponentialInterarrival,
    ExponentialKernel,
    PointProcessPath,
    SpecFactory,
    UniformKernel,
    WeibullInterarrival,
)


positive = st.floats(min_value=0.05, max_value=20.0, allow_nan=False, allow_infinity=False)
shapes = st.floats(min_value=0.3, max_value=6.0, allow_nan=False, allow_infinity=False)
alphas = st.floats(min_value=0.0, max_value=0.95, allow_nan=False, allow_infinity=False)
times = st.floats(min_value=0.0, max_value=50.0, allow_nan=False, allow_infinity=False)

model_strategy = st.one_of(
    st.builds(ExponentialInterarrival, rho=positive),
    st.builds(WeibullInterarrival, scale=positive, shape=shapes),
)
kernel_strategy = st.one_of(
    st.builds(ExponentialKernel, alpha=alphas, beta=positive),
    st.builds(UniformKernel, alpha=alphas, c=positive),
)


# Property 1: 风险率恒等式
@given(model=model_strategy, t=st.floats(min_value=0.01, max_value=50.0))
def test_property_hazard_identity(model, t):
    """
    Property 1: Hazard Identity
    Wherever F(t) < 1, hazard(t) * (1 - F(t)) equals f(t).
    """
    survival = model.survival(t)
    assert model.hazard(t) * survival == pytest.approx(model.density(t), rel=1e-10, abs=1e-300)
    assert model.cdf(t) + survival == pytest.approx(1.0, abs=1e-12)


# Property 2: 风险率上确界有效性
@given(model=model_strategy, a=times, width=st.floats(min_value=0.0, max_value=10.0))
def test_property_hazard_sup_dominates(model, a, width):
    """
    Property 2: Majorant Validity
    hazard_sup(a, b) bounds the hazard at every sampled point of [a, b].
    """
    assume(a > 0 or model.hazard_bounded_at_zero)
    b = a + width
    grid = np.linspace(a, b, 1000)
    values = np.asarray(model.hazard(grid))
    assert np.all(values <= model.hazard_sup(a, b) * (1 + 1e-12))


# Property 3: 逆生存函数
@given(model=model_strategy, u=st.floats(min_value=1e-12, max_value=1.0, exclude_max=True))
def test_property_inverse_survival(model, u):
    """
    Property 3: Inverse Survival
    The sampler's inverse-CDF map inverts the survival function.
    """
    t = model.inverse_survival(u)
    assert t >= 0
    assert model.survival(t) == pytest.approx(u, rel=1e-9)


# Property 4: 核函数累积分布
@given(kernel=kernel_strategy, t=times, s=times)
def test_property_kernel_cumulative(kernel, t, s):
    """
    Property 4: Kernel Cumulative
    H is nondecreasing, bounded by alpha, and h is bounded by its sup norm.
    """
    lo, hi = sorted((t, s))
    assert 0.0 <= kernel.cumulative(lo) <= kernel.cumulative(hi) <= kernel.alpha + 1e-15
    assert 0.0 <= kernel(t) <= kernel.sup_norm


# Property 5: 子代偏移分布
@given(kernel=kernel_strategy, seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_property_offspring_offsets_positive(kernel, seed):
    """
    Property 5: Offspring Offsets
    Offsets are strictly positive and, for alpha = 0, there are none.
    """
    offsets = kernel.sample_offspring_offsets(np.random.default_rng(seed))
    assert np.all(offsets > 0)
    if kernel.alpha == 0:
        assert offsets.size == 0


# Property 6: 规格字符串往返
@given(model=model_strategy, kernel=kernel_strategy)
def test_property_spec_round_trip(model, kernel):
    """
    Property 6: Spec Round Trip
    A spec string parses back to an equal model or kernel.
    """
    assert SpecFactory.create_model(model.spec) == model
    assert SpecFactory.create_kernel(kernel.spec) == kernel


# Property 7: 计数函数
@given(
    gaps=st.lists(st.floats(min_value=0.01, max_value=5.0), min_size=0, max_size=30),
    flags=st.lists(st.sampled_from([0, 1]), min_size=30, max_size=30),
    t=st.floats(min_value=0.0, max_value=1.0),
)
def test_property_path_count(gaps, flags, t):
    """
    Property 7: Counting Function
    N(t) counts events at or before t and N(0) = 1.
    """
    event_times = np.concatenate([[0.0], np.cumsum(gaps)])
    horizon = float(event_times[-1]) + 1.0
    path = PointProcessPath(times=event_times, flags=[0] + flags[:len(gaps)], horizon=horizon)
    query = t * horizon
    assert path.count(query) == int(np.sum(event_times <= query))
    assert path.count(0.0) == 1
    assert path.flags[path.last_immigrant_index(query)] == 0
