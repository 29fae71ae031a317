"""Cluster (branching) construction of the renewal Hawkes process"""

import logging
from typing import Tuple

import numpy as np

from .base import BaseEngine
from ..models import ExcitationKernel, InterarrivalModel, PointProcessPath, IMMIGRANT, OFFSPRING
from ..exceptions import SimulationError, ValidationError

logger = logging.getLogger(__name__)

DEFAULT_GENERATION_CAP = 10_000


def simulate_renewal(model: InterarrivalModel, horizon: float,
                     rng: np.random.Generator) -> np.ndarray:
    """Renewal epochs 0 = S_0 < S_1 < ... <= horizon"""
    if not horizon > 0:
        raise ValidationError(f"Horizon must be positive, got {horizon}", 'horizon')
    batch = max(16, int(1.1 * horizon / model.mean) + 16)
    chunks = [np.zeros(1)]
    last = 0.0
    while True:
        arrivals = last + np.cumsum(model.sample(rng, batch))
        inside = arrivals[arrivals <= horizon]
        chunks.append(inside)
        if inside.size < batch:
            break
        last = arrivals[-1]
    return np.concatenate(chunks)


def _expand_generations(kernel: ExcitationKernel, ancestors: np.ndarray, horizon: float,
                        rng: np.random.Generator,
                        generation_cap: int = DEFAULT_GENERATION_CAP) -> Tuple[np.ndarray, int]:
    """Breadth-first offspring of all ancestors, one generation at a time

    Children past the horizon are counted as escaped and not expanded.
    """
    if kernel.alpha == 0 or ancestors.size == 0:
        return np.empty(0), 0
    current = ancestors
    kept = []
    escaped = 0
    generation = 0
    while current.size:
        generation += 1
        if generation > generation_cap:
            raise SimulationError(
                f"Generation cap {generation_cap} exceeded; is the branching ratio "
                f"{kernel.alpha} really below 1?",
                ClusterEngine.name,
            )
        counts = rng.poisson(kernel.alpha, size=current.size)
        total = int(counts.sum())
        if total == 0:
            break
        children = np.repeat(current, counts) + kernel.sample_offsets(rng, total)
        inside = children <= horizon
        escaped += total - int(np.count_nonzero(inside))
        current = children[inside]
        kept.append(current)
    logger.debug("Expanded %d ancestors over %d generations", ancestors.size, generation)
    if not kept:
        return np.empty(0), escaped
    return np.concatenate(kept), escaped


def simulate_cluster(kernel: ExcitationKernel, t0: float, horizon: float,
                     rng: np.random.Generator,
                     generation_cap: int = DEFAULT_GENERATION_CAP) -> Tuple[np.ndarray, int]:
    """Descendants of one ancestor at t0 within the horizon, and the escaped count

    The ancestor itself is not part of the returned times.
    """
    if not 0 <= t0 <= horizon:
        raise ValidationError(f"Ancestor time {t0} outside [0, {horizon}]", 't0')
    times, escaped = _expand_generations(kernel, np.array([float(t0)]), horizon, rng, generation_cap)
    return np.sort(times), escaped


class ClusterEngine(BaseEngine):
    """Immigrants from the renewal process, each carrying a branching cascade"""

    name = 'cluster'

    def __init__(self, model: InterarrivalModel, kernel: ExcitationKernel,
                 generation_cap: int = DEFAULT_GENERATION_CAP):
        super().__init__(model, kernel)
        self.generation_cap = generation_cap

    def simulate(self, horizon: float, rng: np.random.Generator) -> PointProcessPath:
        self._check_horizon(horizon)
        immigrants = simulate_renewal(self.model, horizon, rng)
        offspring, escaped = _expand_generations(
            self.kernel, immigrants, horizon, rng, self.generation_cap
        )
        times = np.concatenate([immigrants, offspring])
        flags = np.concatenate([
            np.full(immigrants.size, IMMIGRANT, dtype=np.int8),
            np.full(offspring.size, OFFSPRING, dtype=np.int8),
        ])
        return self._assemble(times, flags, horizon, escaped)
