"""Interarrival distributions of the immigrant renewal process"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Any, ClassVar, Dict, Optional, Union

import numpy as np
from scipy.special import gamma

from ..exceptions import ValidationError

TimeLike = Union[float, np.ndarray]


def _as_times(t: TimeLike, field: str = 't') -> np.ndarray:
    """Convert to a float array and reject negative times"""
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0):
        raise ValidationError(f"Time must be nonnegative, got {t!r}", field)
    return arr


def _output(arr: np.ndarray) -> TimeLike:
    """Return a Python float for scalar input, the array otherwise"""
    if arr.ndim == 0:
        return float(arr)
    return arr


def _positive(value: float, field: str) -> None:
    if not (math.isfinite(value) and value > 0):
        raise ValidationError(f"{field} must be a positive finite number, got {value!r}", field)


class InterarrivalModel(ABC):
    """Law F of the gaps between consecutive immigrants"""

    kind: ClassVar[str]

    @abstractmethod
    def density(self, t: TimeLike) -> TimeLike:
        """Density f(t)"""

    @abstractmethod
    def cdf(self, t: TimeLike) -> TimeLike:
        """Distribution function F(t)"""

    @abstractmethod
    def cumulative_hazard(self, t: TimeLike) -> TimeLike:
        """Integrated hazard -log(1 - F(t))"""

    @abstractmethod
    def hazard(self, t: TimeLike) -> TimeLike:
        """Hazard f(t) / (1 - F(t))"""

    @abstractmethod
    def hazard_sup(self, a: float, b: float) -> float:
        """Exact supremum of the hazard over [a, b]"""

    @abstractmethod
    def raw_moment(self, n: int) -> float:
        """n-th raw moment E[tau^n]"""

    @abstractmethod
    def inverse_survival(self, u: TimeLike) -> TimeLike:
        """Map u in (0, 1] to the duration with survival probability u"""

    @property
    @abstractmethod
    def spec(self) -> str:
        """Textual spec in the CLI grammar"""

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""

    @property
    def hazard_bounded_at_zero(self) -> bool:
        return math.isfinite(self.hazard(0.0))

    def survival(self, t: TimeLike) -> TimeLike:
        return _output(np.exp(-np.asarray(self.cumulative_hazard(t))))

    @cached_property
    def mean(self) -> float:
        return self.raw_moment(1)

    @cached_property
    def second_moment(self) -> float:
        return self.raw_moment(2)

    @cached_property
    def variance(self) -> float:
        return self.second_moment - self.mean ** 2

    @property
    def rate(self) -> float:
        """Renewal rate m = 1 / E[tau]"""
        return 1.0 / self.mean

    def sample(self, rng: np.random.Generator, size: Optional[int] = None) -> TimeLike:
        """Inverse-CDF sampling; deterministic given the stream state"""
        u = 1.0 - rng.random(size)
        return self.inverse_survival(u)

    def _check_moment_order(self, n: int) -> None:
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
            raise ValidationError(f"Moment order must be a positive integer, got {n!r}", 'n')

    def _check_interval(self, a: float, b: float) -> None:
        if a < 0:
            raise ValidationError(f"Interval start must be nonnegative, got {a}", 'a')
        if a > b:
            raise ValidationError(f"Interval start {a} exceeds end {b}", 'b')

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'InterarrivalModel':
        """Create from dictionary"""
        kind = data.get('type')
        if kind == ExponentialInterarrival.kind:
            return ExponentialInterarrival(rho=float(data['rate']))
        if kind == WeibullInterarrival.kind:
            return WeibullInterarrival(scale=float(data['scale']), shape=float(data['shape']))
        raise ValidationError(f"Unknown interarrival model type: {kind}", 'type')


@dataclass(frozen=True)
class ExponentialInterarrival(InterarrivalModel):
    """Exponential gaps with rate rho (Poisson immigration)"""
    rho: float = 1.0

    kind: ClassVar[str] = 'exponential'

    def __post_init__(self):
        object.__setattr__(self, 'rho', float(self.rho))
        self.validate()

    def validate(self) -> None:
        _positive(self.rho, 'rate')

    def density(self, t: TimeLike) -> TimeLike:
        arr = _as_times(t)
        return _output(self.rho * np.exp(-self.rho * arr))

    def cdf(self, t: TimeLike) -> TimeLike:
        arr = _as_times(t)
        return _output(-np.expm1(-self.rho * arr))

    def cumulative_hazard(self, t: TimeLike) -> TimeLike:
        arr = _as_times(t)
        return _output(self.rho * arr)

    def hazard(self, t: TimeLike) -> TimeLike:
        arr = _as_times(t)
        return _output(np.full_like(arr, self.rho))

    def hazard_sup(self, a: float, b: float) -> float:
        self._check_interval(a, b)
        return self.rho

    def raw_moment(self, n: int) -> float:
        self._check_moment_order(n)
        return math.factorial(int(n)) / self.rho ** int(n)

    def inverse_survival(self, u: TimeLike) -> TimeLike:
        return _output(-np.log(np.asarray(u, dtype=float)) / self.rho)

    @property
    def spec(self) -> str:
        return f"exp:{self.rho!r}"

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind, 'rate': self.rho}


@dataclass(frozen=True)
class WeibullInterarrival(InterarrivalModel):
    """Weibull gaps with scale lambda and shape k

    The density is (k/lambda)(t/lambda)^(k-1) exp(-(t/lambda)^k). The
    rate-form parameter b of f(x) = b k x^(k-1) exp(-b x^k) is lambda^(-k).
    """
    scale: float = 1.0
    shape: float = 1.0

    kind: ClassVar[str] = 'weibull'

    def __post_init__(self):
        object.__setattr__(self, 'scale', float(self.scale))
        object.__setattr__(self, 'shape', float(self.shape))
        self.validate()

    def validate(self) -> None:
        _positive(self.scale, 'scale')
        _positive(self.shape, 'shape')

    @classmethod
    def from_rate_form(cls, b: float, shape: float) -> 'WeibullInterarrival':
        """Build from the rate-form parameter b = lambda^(-k)"""
        _positive(b, 'b')
        _positive(shape, 'shape')
        return cls(scale=b ** (-1.0 / shape), shape=shape)

    @property
    def b(self) -> float:
        return self.scale ** (-self.shape)

    def hazard(self, t: TimeLike) -> TimeLike:
        arr = _as_times(t)
        k = self.shape
        with np.errstate(divide='ignore'):
            value = (k / self.scale) * np.power(arr / self.scale, k - 1.0)
        return _output(value)

    def cumulative_hazard(self, t: TimeLike) -> TimeLike:
        arr = _as_times(t)
        return _output(np.power(arr / self.scale, self.shape))

    def density(self, t: TimeLike) -> TimeLike:
        arr = _as_times(t)
        with np.errstate(invalid='ignore'):
            value = np.asarray(self.hazard(arr)) * np.exp(-np.power(arr / self.scale, self.shape))
        return _output(value)

    def cdf(self, t: TimeLike) -> TimeLike:
        arr = _as_times(t)
        return _output(-np.expm1(-np.power(arr / self.scale, self.shape)))

    def hazard_sup(self, a: float, b: float) -> float:
        self._check_interval(a, b)
        # k >= 1: nondecreasing hazard; k < 1: decreasing hazard
        return float(self.hazard(b if self.shape >= 1.0 else a))

    def raw_moment(self, n: int) -> float:
        self._check_moment_order(n)
        return float(self.scale ** int(n) * gamma(1.0 + int(n) / self.shape))

    def inverse_survival(self, u: TimeLike) -> TimeLike:
        return _output(self.scale * np.power(-np.log(np.asarray(u, dtype=float)), 1.0 / self.shape))

    @property
    def spec(self) -> str:
        return f"weibull:{self.scale!r},{self.shape!r}"

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind, 'scale': self.scale, 'shape': self.shape}


def sample_interarrival(model: InterarrivalModel, rng: np.random.Generator) -> float:
    """Draw one interarrival duration"""
    return float(model.sample(rng))


def weibull_unit_mean_scale(k: float) -> float:
    """Scale lambda making Weibull(lambda, k) have mean 1

    Equivalent to the rate-form parameter b(k) = Gamma(1 + 1/k)^k.
    """
    if not (math.isfinite(k) and k > 0):
        raise ValidationError(f"Shape must be positive, got {k!r}", 'shape')
    return float(1.0 / gamma(1.0 + 1.0 / k))
