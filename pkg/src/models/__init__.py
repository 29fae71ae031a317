"""Data models for the renewal Hawkes toolkit"""

from .interarrival import (
    InterarrivalModel,
    ExponentialInterarrival,
    WeibullInterarrival,
    sample_interarrival,
    weibull_unit_mean_scale,
)
from .kernel import ExcitationKernel, ExcitationTracker, ExponentialKernel, UniformKernel
from .path import PointProcessPath, IMMIGRANT, OFFSPRING
from .grid import GridFunction, grid_size
from .limits import LimitConstants
from .experiment import EngineName, ExperimentConfig, ExperimentReport, default_v_grid
from .factory import SpecFactory

__all__ = [
    'InterarrivalModel',
    'ExponentialInterarrival',
    'WeibullInterarrival',
    'sample_interarrival',
    'weibull_unit_mean_scale',
    'ExcitationKernel',
    'ExcitationTracker',
    'ExponentialKernel',
    'UniformKernel',
    'PointProcessPath',
    'IMMIGRANT',
    'OFFSPRING',
    'GridFunction',
    'grid_size',
    'LimitConstants',
    'EngineName',
    'ExperimentConfig',
    'ExperimentReport',
    'default_v_grid',
    'SpecFactory',
]
