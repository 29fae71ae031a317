"""Simulation engines for the renewal Hawkes process"""

from .factory import EngineFactory
from .base import BaseEngine
from .cluster import ClusterEngine, simulate_cluster, simulate_renewal
from .thinning import ThinningEngine

__all__ = [
    'EngineFactory',
    'BaseEngine',
    'ClusterEngine',
    'ThinningEngine',
    'simulate_cluster',
    'simulate_renewal',
]
