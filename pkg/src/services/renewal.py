"""Grid solutions of renewal-type equations

Every equation has the form Z = z + Z * f with a nonnegative density f of
total mass at most 1, discretized by the trapezoid rule and solved by forward
substitution. The renewal function Phi keeps its atom at 0 folded into
Phi(0) = 1.
"""

import logging
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.signal import fftconvolve

from ..models import ExcitationKernel, GridFunction, InterarrivalModel, PointProcessPath, grid_size
from ..exceptions import ValidationError
from .simulation import excitation_integral

logger = logging.getLogger(__name__)

MASS_TOLERANCE = 1e-9
# grid functions are at least this fine relative to the horizon
MIN_NODES_PER_HORIZON = 100


def trapezoid_convolution(a: np.ndarray, b: np.ndarray, step: float) -> np.ndarray:
    """Trapezoid values of int_0^t a(t - s) b(s) ds at every node"""
    n = min(a.size, b.size)
    a = a[:n]
    b = b[:n]
    full = fftconvolve(a, b)[:n]
    return step * (full - 0.5 * (a[0] * b + a * b[0]))


def solve_renewal_equation(z: GridFunction, density: GridFunction,
                           mass: Optional[float] = None) -> GridFunction:
    """Solve Z = z + int_0^t Z(t - s) f(s) ds on the grid of z

    Args:
        z: Forcing term
        density: Density f on the same step, at least as long as z
        mass: Total mass of f when known (1 proper, alpha defective)

    Returns:
        Solution Z on the grid of z

    Raises:
        ValidationError: mismatched steps, mass above 1, or a step too
            coarse for f(0)
    """
    if not z.same_step(density):
        raise ValidationError(
            f"Grid steps differ: {z.step} vs {density.step}", 'step'
        )
    if len(density) < len(z):
        raise ValidationError("Density grid is shorter than the forcing grid", 'density')
    step = z.step
    n = len(z)
    f = density.values[:n]
    if np.any(f < 0):
        raise ValidationError("Density must be nonnegative", 'density')
    if mass is not None and mass > 1 + MASS_TOLERANCE:
        raise ValidationError(f"Driving measure has mass {mass} > 1", 'mass')
    # trapezoid overshoot is at most step * max(f)
    grid_mass = density.integral()
    if grid_mass > 1 + MASS_TOLERANCE + step * float(np.max(f)):
        raise ValidationError(f"Driving measure has quadrature mass {grid_mass} > 1", 'mass')

    divisor = 1.0 - 0.5 * step * f[0]
    if divisor <= 0:
        raise ValidationError(
            f"Step {step} too coarse for f(0) = {f[0]}; use a smaller step", 'step'
        )

    values = np.empty(n)
    values[0] = z.values[0]
    reversed_f = f[::-1]
    forcing = z.values
    for i in range(1, n):
        acc = 0.5 * f[i] * values[0]
        if i > 1:
            # sum_{j=1}^{i-1} f_j Z_{i-j}
            acc += np.dot(values[1:i], reversed_f[n - i:n - 1])
        values[i] = (forcing[i] + step * acc) / divisor
    return GridFunction(step=step, values=values)


def _check_grid(horizon: float, step: float) -> int:
    if not horizon > 0:
        raise ValidationError(f"Horizon must be positive, got {horizon}", 'horizon')
    if not 0 < step <= horizon / MIN_NODES_PER_HORIZON:
        raise ValidationError(
            f"Step {step} must be positive and at most horizon/{MIN_NODES_PER_HORIZON}", 'step'
        )
    return grid_size(horizon, step)


def _tabulated(values: np.ndarray, step: float, exact_mass: float) -> GridFunction:
    """Nodal density rescaled so its trapezoid mass equals the exact mass

    Point values carry an O(step^2) mass error. Left alone it makes a proper
    equation supercritical and Phi drifts quadratically in t.
    """
    grid = GridFunction(step=step, values=values)
    grid_mass = grid.integral()
    if grid_mass <= 0:
        return grid
    return GridFunction(step=step, values=values * (exact_mass / grid_mass))


def _model_density(model: InterarrivalModel, step: float, n: int) -> GridFunction:
    if not model.hazard_bounded_at_zero:
        raise ValidationError(
            f"Density of {model.spec} is singular at 0; the grid solver needs shape >= 1", 'model'
        )
    times = np.arange(n) * step
    return _tabulated(np.asarray(model.density(times), dtype=float), step, float(model.cdf(times[-1])))


@lru_cache(maxsize=32)
def renewal_function(model: InterarrivalModel, horizon: float, step: float) -> GridFunction:
    """Phi = 1 + F * Phi, the expected number of renewals in [0, t] including S_0"""
    n = _check_grid(horizon, step)
    logger.debug("Solving renewal function for %s on %d nodes", model.spec, n)
    ones = GridFunction(step=step, values=np.ones(n))
    return solve_renewal_equation(ones, _model_density(model, step, n), mass=1.0)


@lru_cache(maxsize=32)
def psi_function(kernel: ExcitationKernel, horizon: float, step: float) -> GridFunction:
    """psi = h + psi * h, the sum of all convolution powers of h"""
    n = _check_grid(horizon, step)
    if kernel.alpha == 0:
        return GridFunction(step=step, values=np.zeros(n))
    logger.debug("Solving psi for %s on %d nodes", kernel.spec, n)
    h = _tabulated(kernel.tabulate(step, n), step, float(kernel.cumulative((n - 1) * step)))
    return solve_renewal_equation(h, h, mass=kernel.alpha)


@lru_cache(maxsize=32)
def mean_count(model: InterarrivalModel, kernel: ExcitationKernel,
               horizon: float, step: float) -> GridFunction:
    """E[N(t)] = Phi(t) + int_0^t psi(t - s) Phi(s) ds"""
    phi = renewal_function(model, horizon, step)
    if kernel.alpha == 0:
        return phi
    psi = psi_function(kernel, horizon, step)
    values = phi.values + trapezoid_convolution(psi.values, phi.values, step)
    return GridFunction(step=step, values=values)


def verify_linear_functional(path: PointProcessPath, model: InterarrivalModel,
                             kernel: ExcitationKernel, step: float) -> float:
    """Max residual of N - E[N] against A + psi * A on the grid

    A(t) = N(t) - int_0^t (excitation part of lambda) - Phi(t). The identity
    is exact in the continuum, so the residual is pure quadrature error.
    """
    horizon = path.horizon
    phi = renewal_function(model, horizon, step)
    expected = mean_count(model, kernel, horizon, step)
    ts = phi.times
    counts = path.count(ts).astype(float)
    a = counts - excitation_integral(path, kernel, ts) - phi.values
    psi = psi_function(kernel, horizon, step)
    x = a + trapezoid_convolution(psi.values, a, step)
    return float(np.max(np.abs(x - (counts - expected.values))))
