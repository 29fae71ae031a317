"""Excitation kernels h of the self-exciting part"""

import math
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass
from typing import Any, ClassVar, Deque, Dict

import numpy as np

from ..exceptions import ValidationError
from .interarrival import TimeLike, _output

# h(t) below this value counts as zero when locating the tail point
TAIL_LEVEL = 1e-9


def _check_alpha(alpha: float) -> None:
    if not math.isfinite(alpha) or alpha < 0:
        raise ValidationError(f"Branching ratio must be nonnegative, got {alpha!r}", 'alpha')
    if alpha >= 1:
        raise ValidationError(
            f"Branching ratio must be below 1 (subcritical), got {alpha!r}", 'alpha'
        )


class ExcitationTracker(ABC):
    """Running excitation sum over recorded events, for thinning

    Query times must be nondecreasing and strictly after every recorded event.
    """

    @abstractmethod
    def record(self, t: float) -> None:
        """Add an event at time t"""

    @abstractmethod
    def value(self, t: float) -> float:
        """Sum of h(t - T_i) over recorded events"""

    @abstractmethod
    def bound(self, t: float, window: float) -> float:
        """Upper bound of value() over [t, t + window]"""


class ExcitationKernel(ABC):
    """Nonnegative kernel with integral alpha < 1"""

    kind: ClassVar[str]
    alpha: float

    @abstractmethod
    def __call__(self, t: TimeLike) -> TimeLike:
        """Pointwise h(t), zero for negative t"""

    @abstractmethod
    def cumulative(self, t: TimeLike) -> TimeLike:
        """H(t), the integral of h over [0, t]"""

    @abstractmethod
    def sample_offsets(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Draw i.i.d. offsets from the density h / alpha"""

    @abstractmethod
    def excitation_tracker(self) -> ExcitationTracker:
        """Fresh tracker for the thinning engine"""

    @property
    @abstractmethod
    def sup_norm(self) -> float:
        """Supremum of h"""

    @property
    @abstractmethod
    def tail_point(self) -> float:
        """Time beyond which h stays below TAIL_LEVEL"""

    @property
    @abstractmethod
    def spec(self) -> str:
        """Textual spec in the CLI grammar"""

    @abstractmethod
    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""

    def offset_cdf(self, t: TimeLike) -> TimeLike:
        """Distribution function of the offspring offset, H(t) / alpha"""
        if self.alpha == 0:
            raise ValidationError("Offset law undefined for a zero kernel", 'alpha')
        return _output(np.asarray(self.cumulative(t)) / self.alpha)

    def sample_offspring_offsets(self, rng: np.random.Generator) -> np.ndarray:
        """Offsets of the direct children of one event

        The count is Poisson(alpha) and, given the count, offsets are i.i.d.
        with density h / alpha.
        """
        if self.alpha == 0:
            return np.empty(0)
        return self.sample_offsets(rng, int(rng.poisson(self.alpha)))

    def tabulate(self, step: float, n: int) -> np.ndarray:
        """Values of h at nodes 0, step, ..., (n - 1) * step"""
        return np.asarray(self(np.arange(n) * step), dtype=float)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ExcitationKernel':
        """Create from dictionary"""
        kind = data.get('type')
        if kind == ExponentialKernel.kind:
            return ExponentialKernel(alpha=float(data['alpha']), beta=float(data['beta']))
        if kind == UniformKernel.kind:
            return UniformKernel(alpha=float(data['alpha']), c=float(data['c']))
        raise ValidationError(f"Unknown kernel type: {kind}", 'type')


class _ExponentialTracker(ExcitationTracker):
    """Recursive sum for h(t) = alpha beta exp(-beta t)"""

    def __init__(self, jump: float, beta: float):
        self.jump = jump
        self.beta = beta
        self.ref_time = 0.0
        self.ref_value = 0.0

    def record(self, t: float) -> None:
        self.ref_value = self.value(t) + self.jump
        self.ref_time = t

    def value(self, t: float) -> float:
        if self.ref_value == 0.0:
            return 0.0
        return self.ref_value * math.exp(-self.beta * (t - self.ref_time))

    def bound(self, t: float, window: float) -> float:
        # decreasing between events
        return self.value(t)


class _UniformTracker(ExcitationTracker):
    """Count of events still inside the support [0, c]"""

    def __init__(self, height: float, c: float):
        self.height = height
        self.c = c
        self.events: Deque[float] = deque()

    def _prune(self, t: float) -> None:
        while self.events and self.events[0] < t - self.c:
            self.events.popleft()

    def record(self, t: float) -> None:
        self.events.append(t)

    def value(self, t: float) -> float:
        self._prune(t)
        return self.height * len(self.events)

    def bound(self, t: float, window: float) -> float:
        self._prune(t)
        return self.height * len(self.events)


@dataclass(frozen=True)
class ExponentialKernel(ExcitationKernel):
    """h(t) = alpha beta exp(-beta t)"""
    alpha: float = 0.5
    beta: float = 1.0

    kind: ClassVar[str] = 'exponential'

    def __post_init__(self):
        object.__setattr__(self, 'alpha', float(self.alpha))
        object.__setattr__(self, 'beta', float(self.beta))
        self.validate()

    def validate(self) -> None:
        _check_alpha(self.alpha)
        if not (math.isfinite(self.beta) and self.beta > 0):
            raise ValidationError(f"Decay must be positive, got {self.beta!r}", 'beta')

    def __call__(self, t: TimeLike) -> TimeLike:
        arr = np.asarray(t, dtype=float)
        value = np.where(arr >= 0, self.alpha * self.beta * np.exp(-self.beta * np.maximum(arr, 0.0)), 0.0)
        return _output(value)

    def cumulative(self, t: TimeLike) -> TimeLike:
        arr = np.maximum(np.asarray(t, dtype=float), 0.0)
        return _output(self.alpha * -np.expm1(-self.beta * arr))

    def sample_offsets(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.standard_exponential(size) / self.beta

    def excitation_tracker(self) -> ExcitationTracker:
        return _ExponentialTracker(self.alpha * self.beta, self.beta)

    @property
    def sup_norm(self) -> float:
        return self.alpha * self.beta

    @property
    def tail_point(self) -> float:
        if self.sup_norm <= TAIL_LEVEL:
            return 0.0
        return math.log(self.sup_norm / TAIL_LEVEL) / self.beta

    @property
    def spec(self) -> str:
        return f"expk:{self.alpha!r},{self.beta!r}"

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind, 'alpha': self.alpha, 'beta': self.beta}


@dataclass(frozen=True)
class UniformKernel(ExcitationKernel):
    """h(t) = (alpha / c) on [0, c]"""
    alpha: float = 0.5
    c: float = 1.0

    kind: ClassVar[str] = 'uniform'

    def __post_init__(self):
        object.__setattr__(self, 'alpha', float(self.alpha))
        object.__setattr__(self, 'c', float(self.c))
        self.validate()

    def validate(self) -> None:
        _check_alpha(self.alpha)
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValidationError(f"Support length must be positive, got {self.c!r}", 'c')

    @property
    def height(self) -> float:
        return self.alpha / self.c

    def __call__(self, t: TimeLike) -> TimeLike:
        arr = np.asarray(t, dtype=float)
        return _output(np.where((arr >= 0) & (arr <= self.c), self.height, 0.0))

    def cumulative(self, t: TimeLike) -> TimeLike:
        arr = np.clip(np.asarray(t, dtype=float), 0.0, self.c)
        return _output(self.height * arr)

    def sample_offsets(self, rng: np.random.Generator, size: int) -> np.ndarray:
        # (0, c]: offsets stay strictly positive
        return self.c * (1.0 - rng.random(size))

    def tabulate(self, step: float, n: int) -> np.ndarray:
        values = super().tabulate(step, n)
        jump = self.c / step
        node = int(round(jump))
        # a jump sitting on a node takes the midpoint value
        if node < n and abs(jump - node) < 1e-9 * max(1.0, jump):
            values[node] = 0.5 * self.height
        return values

    def excitation_tracker(self) -> ExcitationTracker:
        return _UniformTracker(self.height, self.c)

    @property
    def sup_norm(self) -> float:
        return self.height

    @property
    def tail_point(self) -> float:
        return self.c

    @property
    def spec(self) -> str:
        return f"unifk:{self.alpha!r},{self.c!r}"

    def to_dict(self) -> Dict[str, Any]:
        return {'type': self.kind, 'alpha': self.alpha, 'c': self.c}
