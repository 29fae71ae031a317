"""Limit constants of the law of large numbers and central limit theorem"""

from dataclasses import dataclass, asdict
from typing import Any, Dict


@dataclass(frozen=True)
class LimitConstants:
    """Reference values every experiment compares against"""
    m: float
    alpha: float
    lln_slope: float
    sigma2: float
    sigma2_cluster: float
    sigma2_immigration: float
    ew: float
    varw: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LimitConstants':
        """Create from dictionary"""
        return cls(**{k: float(v) for k, v in data.items()})
