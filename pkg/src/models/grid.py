"""Functions tabulated on a uniform time grid"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from ..exceptions import ValidationError
from .interarrival import TimeLike, _output


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Real function on the nodes 0, step, ..., (len - 1) * step"""
    step: float
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'step', float(self.step))
        self.validate()

    def validate(self) -> None:
        if not (math.isfinite(self.step) and self.step > 0):
            raise ValidationError(f"Grid step must be positive, got {self.step}", 'step')
        if self.values.ndim != 1 or self.values.size == 0:
            raise ValidationError("Grid values must be a nonempty 1-d sequence", 'values')
        if not np.all(np.isfinite(self.values)):
            raise ValidationError("Grid values must be finite", 'values')

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def times(self) -> np.ndarray:
        return np.arange(len(self)) * self.step

    @property
    def horizon(self) -> float:
        return (len(self) - 1) * self.step

    def same_step(self, other: 'GridFunction') -> bool:
        return math.isclose(self.step, other.step, rel_tol=1e-12)

    def at(self, t: TimeLike) -> TimeLike:
        """Linear interpolation between nodes"""
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 0) or np.any(arr > self.horizon * (1 + 1e-12)):
            raise ValidationError(f"Time outside [0, {self.horizon}]: {t!r}", 't')
        return _output(np.interp(arr, self.times, self.values))

    def integral(self) -> float:
        """Trapezoid integral over the whole grid"""
        if len(self) < 2:
            return 0.0
        return float(trapezoid(self.values, dx=self.step))


def grid_size(horizon: float, step: float) -> int:
    """Number of nodes of a grid with the given step covering [0, horizon]"""
    return int(math.floor(horizon / step + 1e-9)) + 1
