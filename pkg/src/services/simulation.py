"""Sample-path simulation and path-level functionals"""

from typing import Union

import numpy as np

from ..engines.cluster import (
    DEFAULT_GENERATION_CAP,
    ClusterEngine,
    simulate_cluster,
    simulate_renewal,
)
from ..engines.thinning import DEFAULT_WINDOW, ThinningEngine
from ..models import ExcitationKernel, InterarrivalModel, PointProcessPath
from ..exceptions import ValidationError

__all__ = [
    'simulate_renewal',
    'simulate_cluster',
    'simulate_rhp_cluster',
    'simulate_rhp_thinning',
    'intensity_at',
    'hazard_compensator',
    'excitation_integral',
    'compensator',
]


def simulate_rhp_cluster(model: InterarrivalModel, kernel: ExcitationKernel, horizon: float,
                         rng: np.random.Generator,
                         generation_cap: int = DEFAULT_GENERATION_CAP) -> PointProcessPath:
    """Superposition of immigrants and their clusters"""
    return ClusterEngine(model, kernel, generation_cap).simulate(horizon, rng)


def simulate_rhp_thinning(model: InterarrivalModel, kernel: ExcitationKernel, horizon: float,
                          rng: np.random.Generator,
                          window: float = DEFAULT_WINDOW) -> PointProcessPath:
    """Ogata thinning of the conditional intensity"""
    return ThinningEngine(model, kernel, window).simulate(horizon, rng)


def _check_time(path: PointProcessPath, t: float) -> None:
    if not 0 <= t <= path.horizon:
        raise ValidationError(f"Time must lie in [0, {path.horizon}], got {t}", 't')


def intensity_at(path: PointProcessPath, model: InterarrivalModel,
                 kernel: ExcitationKernel, t: float) -> float:
    """lambda(t) with the left-limit convention: only events T_i < t count"""
    _check_time(path, t)
    before = int(np.searchsorted(path.times, t, side='left'))
    if before == 0:
        # at t = 0 nothing precedes; the renewal clock starts at S_0 = 0
        return float(model.hazard(0.0))
    history = path.times[:before]
    last_immigrant = history[path.flags[:before] == 0][-1]
    excitation = float(np.sum(kernel(t - history)))
    return float(model.hazard(t - last_immigrant)) + excitation


def hazard_compensator(path: PointProcessPath, model: InterarrivalModel, t: float) -> float:
    """Integral of mu(s - T_I(s)) over [0, t], exact via the cumulative hazard"""
    _check_time(path, t)
    epochs = path.immigrant_times
    epochs = epochs[epochs <= t]
    ends = np.append(epochs[1:], t)
    return float(np.sum(model.cumulative_hazard(ends - epochs)))


def excitation_integral(path: PointProcessPath, kernel: ExcitationKernel,
                        ts: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Integral of sum h(s - T_i) over [0, t] for each t in ts, exact via H"""
    grid = np.atleast_1d(np.asarray(ts, dtype=float))
    out = np.zeros_like(grid)
    if kernel.alpha > 0:
        starts = np.searchsorted(grid, path.times, side='left')
        for event, start in zip(path.times, starts):
            out[start:] += kernel.cumulative(grid[start:] - event)
    if np.ndim(ts) == 0:
        return float(out[0])
    return out


def compensator(path: PointProcessPath, model: InterarrivalModel,
                kernel: ExcitationKernel, t: float) -> float:
    """Integral of lambda over [0, t]"""
    return hazard_compensator(path, model, t) + float(excitation_integral(path, kernel, t))
