"""Closed-form limit constants"""

from typing import Dict, Iterable, List, Tuple

from ..exceptions import ValidationError
from ..models import (
    ExcitationKernel,
    InterarrivalModel,
    LimitConstants,
    WeibullInterarrival,
    weibull_unit_mean_scale,
)


def _check_subcritical(kernel: ExcitationKernel) -> float:
    alpha = kernel.alpha
    if not 0 <= alpha < 1:
        raise ValidationError(f"Branching ratio must lie in [0, 1), got {alpha}", 'alpha')
    return alpha


def sigma2_decomposition(model: InterarrivalModel, kernel: ExcitationKernel) -> Tuple[float, float]:
    """Split sigma^2 into its within-cluster and immigration parts

    Returns:
        (m alpha / (1 - alpha)^3, m^3 Var[tau] / (1 - alpha)^2)
    """
    alpha = _check_subcritical(kernel)
    m = model.rate
    cluster = m * alpha / (1.0 - alpha) ** 3
    immigration = m ** 3 * model.variance / (1.0 - alpha) ** 2
    return cluster, immigration


def limit_constants(model: InterarrivalModel, kernel: ExcitationKernel) -> LimitConstants:
    """Reference constants of the law of large numbers and the CLT"""
    cluster, immigration = sigma2_decomposition(model, kernel)
    alpha = kernel.alpha
    m = model.rate
    return LimitConstants(
        m=m,
        alpha=alpha,
        lln_slope=m / (1.0 - alpha),
        sigma2=cluster + immigration,
        sigma2_cluster=cluster,
        sigma2_immigration=immigration,
        ew=1.0 / (1.0 - alpha),
        varw=alpha / (1.0 - alpha) ** 3,
    )


def weibull_family_table(shapes: Iterable[float], kernel: ExcitationKernel) -> List[Dict[str, float]]:
    """Unit-mean Weibull sweep over shape parameters

    For each k, the Weibull variance at scale 1 and the limit constants of the
    Weibull law rescaled to mean 1 under the given kernel.
    """
    rows = []
    for k in shapes:
        k = float(k)
        scale = weibull_unit_mean_scale(k)
        constants = limit_constants(WeibullInterarrival(scale=scale, shape=k), kernel)
        rows.append({
            'k': k,
            'scale': scale,
            'weibull_var_unit_scale': WeibullInterarrival(scale=1.0, shape=k).variance,
            'lln_slope': constants.lln_slope,
            'sigma2': constants.sigma2,
            'sigma2_cluster': constants.sigma2_cluster,
            'sigma2_immigration': constants.sigma2_immigration,
        })
    return rows
