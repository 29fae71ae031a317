"""Numerical services for the renewal Hawkes toolkit

Submodules are imported by path (``from src.services.renewal import ...``);
only the interfaces are re-exported here so engines can depend on them
without pulling in the harness.
"""

from .interfaces import (
    ISimulationEngine,
    IResultStorage,
    IExperimentService,
)

__all__ = [
    'ISimulationEngine',
    'IResultStorage',
    'IExperimentService',
]
