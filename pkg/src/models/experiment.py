"""Experiment configuration and report models"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from ..exceptions import ValidationError
from .interarrival import InterarrivalModel
from .kernel import ExcitationKernel
from .limits import LimitConstants


class EngineName(Enum):
    """Simulation engine"""
    CLUSTER = 'cluster'
    THINNING = 'thinning'


def default_v_grid(step: float = 0.1) -> List[float]:
    """Grid step, 2 step, ..., 1"""
    count = int(round(1.0 / step))
    return [round((i + 1) * step, 12) for i in range(count)]


@dataclass
class ExperimentConfig:
    """Configuration for a Monte Carlo experiment

    Single-horizon experiments (clt, varfit, agree) use horizons[0].
    """
    model: InterarrivalModel
    kernel: ExcitationKernel
    engine: EngineName = EngineName.CLUSTER
    horizons: List[float] = field(default_factory=lambda: [500.0])
    v_grid: List[float] = field(default_factory=default_v_grid)
    replications: int = 200
    seed: int = 42
    dt: float = 0.01
    time_step: float = 1.0
    threads: int = 1
    window: float = 1.0

    def __post_init__(self):
        """Normalize and validate"""
        if isinstance(self.engine, str):
            self.engine = EngineName(self.engine)
        self.horizons = [float(t) for t in self.horizons]
        self.v_grid = [float(v) for v in self.v_grid]
        self.validate()

    def validate(self) -> None:
        """Validate configuration data"""
        if self.replications < 2:
            raise ValidationError("At least 2 replications are required", 'replications')
        if not self.horizons or any(t <= 0 for t in self.horizons):
            raise ValidationError("Horizons must be strictly positive", 'horizons')
        if not self.v_grid:
            raise ValidationError("v grid cannot be empty", 'v_grid')
        grid = np.asarray(self.v_grid)
        if grid[0] <= 0 or grid[-1] > 1 or np.any(np.diff(grid) <= 0):
            raise ValidationError("v grid must be strictly increasing within (0, 1]", 'v_grid')
        if self.seed < 0:
            raise ValidationError("Seed must be nonnegative", 'seed')
        if self.dt <= 0:
            raise ValidationError("Grid step must be positive", 'dt')
        if self.time_step <= 0:
            raise ValidationError("Time step must be positive", 'time_step')
        if self.threads < 1:
            raise ValidationError("Worker count must be at least 1", 'threads')
        if self.window <= 0:
            raise ValidationError("Thinning window must be positive", 'window')

    @property
    def horizon(self) -> float:
        return self.horizons[0]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            'model': self.model.spec,
            'kernel': self.kernel.spec,
            'engine': self.engine.value,
            'horizons': list(self.horizons),
            'v_grid': list(self.v_grid),
            'replications': self.replications,
            'seed': self.seed,
            'dt': self.dt,
            'time_step': self.time_step,
            'window': self.window,
        }


@dataclass
class ExperimentReport:
    """Aggregated Monte Carlo output

    tables map a file stem to its rows; documents map a file stem to a JSON
    object; summary holds the scalar metrics that --assert can address.
    """
    name: str
    limits: LimitConstants
    tables: Dict[str, List[Dict[str, float]]] = field(default_factory=dict)
    documents: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    summary: Dict[str, float] = field(default_factory=dict)

    def metric(self, name: str) -> Optional[float]:
        """Look up a summary metric, None if absent"""
        value = self.summary.get(name)
        return None if value is None else float(value)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            'name': self.name,
            'limits': self.limits.to_dict(),
            'summary': dict(self.summary),
        }
