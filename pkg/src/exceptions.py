"""Custom exceptions for the renewal Hawkes toolkit

Every exception pickles with its attributes so that errors raised inside
worker processes reach the parent unchanged.
"""

from typing import Optional


class ValidationError(Exception):
    """Input validation error"""
    def __init__(self, message: str, field: str):
        super().__init__(message)
        self.field = field

    def __reduce__(self):
        return self.__class__, (str(self), self.field)


class SpecParseError(ValidationError):
    """Malformed model or kernel spec string"""
    def __init__(self, message: str, token: str):
        super().__init__(message, field='spec')
        self.token = token

    def __reduce__(self):
        return self.__class__, (str(self), self.token)


class SimulationError(Exception):
    """Simulation engine error"""
    def __init__(self, message: str, engine: str):
        super().__init__(message)
        self.engine = engine

    def __reduce__(self):
        return self.__class__, (str(self), self.engine)


class MajorantViolationError(SimulationError):
    """Thinning intensity exceeded its dominating rate"""
    def __init__(self, message: str, engine: str, intensity: float, bound: float):
        super().__init__(message, engine)
        self.intensity = intensity
        self.bound = bound

    def __reduce__(self):
        return self.__class__, (str(self), self.engine, self.intensity, self.bound)


class ThresholdError(Exception):
    """Requested acceptance threshold not met"""
    def __init__(self, message: str, metric: str, value: Optional[float] = None):
        super().__init__(message)
        self.metric = metric
        self.value = value

    def __reduce__(self):
        return self.__class__, (str(self), self.metric, self.value)
