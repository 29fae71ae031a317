"""Service interfaces"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

import numpy as np

from ..models import ExperimentConfig, ExperimentReport, GridFunction, LimitConstants, PointProcessPath


class ISimulationEngine(ABC):
    """Interface for sample-path generators"""

    @abstractmethod
    def simulate(self, horizon: float, rng: np.random.Generator) -> PointProcessPath:
        """Simulate one path on [0, horizon]"""
        pass


class IResultStorage(ABC):
    """Interface for result persistence"""

    @abstractmethod
    def save_path(self, path: PointProcessPath, metadata: Dict[str, Any], name: str = 'path') -> None:
        """Save a sample path and its metadata sidecar"""
        pass

    @abstractmethod
    def load_path(self, name: str = 'path') -> Optional[PointProcessPath]:
        """Load a sample path"""
        pass

    @abstractmethod
    def save_grid(self, grid: GridFunction, name: str) -> None:
        """Save a grid function as CSV"""
        pass

    @abstractmethod
    def save_limits(self, limits: LimitConstants, name: str = 'limits') -> None:
        """Save limit constants as JSON"""
        pass

    @abstractmethod
    def save_table(self, name: str, rows: List[Dict[str, Any]]) -> None:
        """Save a table as CSV"""
        pass

    @abstractmethod
    def save_json(self, name: str, data: Dict[str, Any]) -> None:
        """Save a JSON document"""
        pass

    @abstractmethod
    def save_report(self, report: ExperimentReport) -> List[str]:
        """Save every table and document of a report, return file names"""
        pass

    @abstractmethod
    def save_manifest(self, command: str, params: Dict[str, Any]) -> None:
        """Save the reproducibility manifest"""
        pass


class IExperimentService(ABC):
    """Interface for the Monte Carlo experiments"""

    @abstractmethod
    def run_lln(self, config: ExperimentConfig) -> ExperimentReport:
        """Sup-deviation of N(vT)/T from its linear limit"""
        pass

    @abstractmethod
    def run_clt(self, config: ExperimentConfig) -> ExperimentReport:
        """Marginals and covariance of the rescaled fluctuations"""
        pass

    @abstractmethod
    def run_variance_fit(self, config: ExperimentConfig) -> ExperimentReport:
        """Variance rate by regression through the origin"""
        pass

    @abstractmethod
    def run_edge_effects(self, config: ExperimentConfig) -> ExperimentReport:
        """Fraction of cluster points escaping the horizon"""
        pass

    @abstractmethod
    def run_engine_agreement(self, config: ExperimentConfig) -> ExperimentReport:
        """Two-sample comparison of the cluster and thinning engines"""
        pass
