"""Factory for creating simulation engines"""

from typing import Union

from ..models import EngineName, ExcitationKernel, InterarrivalModel
from ..services.interfaces import ISimulationEngine
from ..exceptions import ValidationError


class EngineFactory:
    """Factory for creating engines based on their name"""

    @staticmethod
    def create(engine: Union[EngineName, str], model: InterarrivalModel,
               kernel: ExcitationKernel, window: float = 1.0) -> ISimulationEngine:
        """Create the engine for the given name

        Args:
            engine: Engine name
            model: Interarrival law of the immigrants
            kernel: Excitation kernel
            window: Lookahead window of the thinning engine

        Returns:
            ISimulationEngine instance

        Raises:
            ValidationError: If the engine is not supported
        """
        try:
            name = EngineName(engine)
        except ValueError:
            raise ValidationError(f"Unsupported engine: {engine}", 'engine')
        if name is EngineName.CLUSTER:
            from .cluster import ClusterEngine
            return ClusterEngine(model, kernel)
        from .thinning import ThinningEngine
        return ThinningEngine(model, kernel, window=window)
