"""Sample path of a renewal Hawkes process"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from ..exceptions import ValidationError
from .interarrival import TimeLike

IMMIGRANT = 0
OFFSPRING = 1


@dataclass(frozen=True, eq=False)
class PointProcessPath:
    """One realization on [0, horizon]

    times is strictly increasing and opens with the immigrant at time 0;
    flags holds D_i (0 immigrant, 1 offspring) for each event.
    """
    times: np.ndarray
    flags: np.ndarray
    horizon: float
    escaped_count: int = 0
    engine: str = 'cluster'

    def __post_init__(self):
        times = np.array(self.times, dtype=float)
        flags = np.array(self.flags, dtype=np.int8)
        times.setflags(write=False)
        flags.setflags(write=False)
        object.__setattr__(self, 'times', times)
        object.__setattr__(self, 'flags', flags)
        object.__setattr__(self, 'horizon', float(self.horizon))
        object.__setattr__(self, 'escaped_count', int(self.escaped_count))
        self.validate()

    def validate(self) -> None:
        """Validate path invariants"""
        if not self.horizon > 0:
            raise ValidationError(f"Horizon must be positive, got {self.horizon}", 'horizon')
        if self.times.ndim != 1 or self.times.size == 0:
            raise ValidationError("A path holds at least the immigrant at time 0", 'times')
        if self.flags.shape != self.times.shape:
            raise ValidationError("times and flags must have equal length", 'flags')
        if self.times[0] != 0.0 or self.flags[0] != IMMIGRANT:
            raise ValidationError("A path must open with an immigrant at time 0", 'times')
        if np.any(np.diff(self.times) <= 0):
            raise ValidationError("Event times must be strictly increasing", 'times')
        if self.times[-1] > self.horizon:
            raise ValidationError("Event times must lie in [0, horizon]", 'times')
        if np.any((self.flags != IMMIGRANT) & (self.flags != OFFSPRING)):
            raise ValidationError("Flags must be 0 (immigrant) or 1 (offspring)", 'flags')
        if self.escaped_count < 0:
            raise ValidationError("escaped_count must be nonnegative", 'escaped_count')

    def __len__(self) -> int:
        return int(self.times.size)

    @property
    def immigrant_indices(self) -> np.ndarray:
        return np.flatnonzero(self.flags == IMMIGRANT)

    @property
    def immigrant_times(self) -> np.ndarray:
        """Imbedded renewal epochs S_0 = 0 < S_1 < ..."""
        return self.times[self.flags == IMMIGRANT]

    def _check_time(self, t: TimeLike) -> np.ndarray:
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 0) or np.any(arr > self.horizon):
            raise ValidationError(f"Query time must lie in [0, {self.horizon}], got {t!r}", 't')
        return arr

    def count(self, t: TimeLike) -> TimeLike:
        """N(t), number of events in [0, t]"""
        arr = self._check_time(t)
        result = np.searchsorted(self.times, arr, side='right')
        if result.ndim == 0:
            return int(result)
        return result

    def renewal_count(self, t: float) -> int:
        """N_R(t), number of immigrants in [0, t]"""
        arr = self._check_time(t)
        return int(np.searchsorted(self.immigrant_times, arr, side='right'))

    def last_immigrant_index(self, t: float) -> int:
        """I(t) = max{i : T_i <= t, D_i = 0}, an index into times"""
        self._check_time(t)
        indices = self.immigrant_indices
        position = np.searchsorted(self.times[indices], t, side='right') - 1
        return int(indices[position])

    def metadata(self) -> Dict[str, Any]:
        return {
            'engine': self.engine,
            'horizon': self.horizon,
            'escaped_count': self.escaped_count,
            'n_events': len(self),
        }

