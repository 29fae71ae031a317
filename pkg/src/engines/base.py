"""Base engine implementation with shared path assembly"""

from abc import ABC
from typing import ClassVar

import numpy as np

from ..services.interfaces import ISimulationEngine
from ..models import ExcitationKernel, InterarrivalModel, PointProcessPath
from ..exceptions import SimulationError, ValidationError


class BaseEngine(ISimulationEngine, ABC):
    """Base class for simulation engines"""

    name: ClassVar[str]

    def __init__(self, model: InterarrivalModel, kernel: ExcitationKernel):
        self.model = model
        self.kernel = kernel

    def _check_horizon(self, horizon: float) -> None:
        if not horizon > 0:
            raise ValidationError(f"Horizon must be positive, got {horizon}", 'horizon')

    def _assemble(self, times: np.ndarray, flags: np.ndarray, horizon: float,
                  escaped: int = 0) -> PointProcessPath:
        """Sort merged events and build the path

        Ties have probability zero under continuous laws; one is reported
        as an engine failure rather than tolerated.
        """
        order = np.argsort(times, kind='stable')
        times = times[order]
        flags = flags[order]
        if np.any(np.diff(times) <= 0):
            raise SimulationError("Event times are not strictly increasing", self.name)
        return PointProcessPath(
            times=times,
            flags=flags,
            horizon=horizon,
            escaped_count=escaped,
            engine=self.name,
        )
