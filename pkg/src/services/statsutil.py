"""Statistical primitives for the Monte Carlo harness"""

import math
from typing import Callable, Sequence, Tuple

import numpy as np
from scipy import stats
from scipy.special import ndtr

from ..exceptions import ValidationError
from ..models.interarrival import TimeLike, _output

ArrayLike = Sequence[float]


def make_stream(seed: int, index: int, *salt: int) -> np.random.Generator:
    """Independent generator for replication `index` under a master seed

    SeedSequence hashes the entropy words, so neighbouring indices give
    uncorrelated streams and a stream never depends on how many others exist.
    The optional salt separates experiments sharing one master seed.
    """
    if seed < 0 or index < 0 or any(s < 0 for s in salt):
        raise ValidationError("Seed, salt and stream index must be nonnegative", 'seed')
    sequence = np.random.SeedSequence([int(seed), *(int(s) for s in salt), int(index)])
    return np.random.Generator(np.random.PCG64(sequence))


def _as_sample(samples: ArrayLike, field: str = 'samples') -> np.ndarray:
    arr = np.asarray(samples, dtype=float).ravel()
    if arr.size == 0:
        raise ValidationError("Sample cannot be empty", field)
    return arr


def regression_through_origin(xs: ArrayLike, ys: ArrayLike) -> float:
    """Least-squares slope of y = b x: sum(x y) / sum(x^2)"""
    x = _as_sample(xs, 'xs')
    y = _as_sample(ys, 'ys')
    if x.size != y.size:
        raise ValidationError(f"Length mismatch: {x.size} xs vs {y.size} ys", 'ys')
    denominator = float(np.dot(x, x))
    if denominator == 0:
        raise ValidationError("All xs are zero; slope undefined", 'xs')
    return float(np.dot(x, y)) / denominator


def empirical_cdf(samples: ArrayLike) -> Callable[[np.ndarray], np.ndarray]:
    """Right-continuous empirical distribution function of the sample"""
    ordered = np.sort(_as_sample(samples))
    n = ordered.size

    def cdf(x):
        return np.searchsorted(ordered, np.asarray(x, dtype=float), side='right') / n

    return cdf


def ks_statistic(samples: ArrayLike, cdf: Callable) -> float:
    """Kolmogorov-Smirnov distance between the sample and a distribution function"""
    arr = _as_sample(samples)
    return float(stats.kstest(arr, cdf).statistic)


def ks_critical_value(level: float, n: int) -> float:
    """Asymptotic critical value c(level) / sqrt(n) of the one-sample KS distance"""
    if not 0 < level < 1:
        raise ValidationError(f"Level must lie in (0, 1), got {level}", 'level')
    if n < 1:
        raise ValidationError(f"Sample size must be positive, got {n}", 'n')
    return float(stats.kstwobign.isf(level)) / math.sqrt(n)


def normal_cdf(x: TimeLike) -> TimeLike:
    """Standard normal distribution function, elementwise on arrays"""
    return _output(ndtr(np.asarray(x, dtype=float)))


def sample_mean_var(samples: ArrayLike) -> Tuple[float, float]:
    """Sample mean and unbiased variance"""
    arr = _as_sample(samples)
    if arr.size < 2:
        raise ValidationError("Variance needs at least 2 samples", 'samples')
    return float(np.mean(arr)), float(np.var(arr, ddof=1))


def two_sample_z(a: ArrayLike, b: ArrayLike) -> Tuple[float, float]:
    """z statistic and two-sided p-value for equal means of two samples"""
    mean_a, var_a = sample_mean_var(a)
    mean_b, var_b = sample_mean_var(b)
    se = math.sqrt(var_a / len(a) + var_b / len(b))
    diff = mean_a - mean_b
    if se == 0:
        return (0.0, 1.0) if diff == 0 else (math.copysign(math.inf, diff), 0.0)
    z = diff / se
    return z, float(2.0 * ndtr(-abs(z)))


def dispersion_ratio_test(a: ArrayLike, b: ArrayLike) -> Tuple[float, float]:
    """Variance ratio var(a) / var(b) and its two-sided F-test p-value"""
    _, var_a = sample_mean_var(a)
    _, var_b = sample_mean_var(b)
    if var_b == 0:
        return (1.0, 1.0) if var_a == 0 else (math.inf, 0.0)
    ratio = var_a / var_b
    dfn, dfd = len(a) - 1, len(b) - 1
    tail = min(stats.f.cdf(ratio, dfn, dfd), stats.f.sf(ratio, dfn, dfd))
    return ratio, float(min(1.0, 2.0 * tail))
