"""Ogata thinning against the exact conditional intensity"""

import logging

import numpy as np

from .base import BaseEngine
from ..models import ExcitationKernel, InterarrivalModel, PointProcessPath, IMMIGRANT, OFFSPRING
from ..exceptions import MajorantViolationError, ValidationError

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 1.0
MIN_ACCEPTANCE = 0.05
ADAPT_EVERY = 200
# relative slack for rounding in the majorant check
MAJORANT_SLACK = 1e-12


class ThinningEngine(BaseEngine):
    """Thinning of lambda(t) = mu(t - S_last) + sum h(t - T_i)

    Each step bounds the intensity over a lookahead window, proposes from the
    bound and accepts with probability lambda / bound. An accepted point is an
    immigrant with probability mu / lambda, otherwise offspring; one uniform
    decides both.
    """

    name = 'thinning'

    def __init__(self, model: InterarrivalModel, kernel: ExcitationKernel,
                 window: float = DEFAULT_WINDOW):
        super().__init__(model, kernel)
        if not window > 0:
            raise ValidationError(f"Lookahead window must be positive, got {window}", 'window')
        if not model.hazard_bounded_at_zero:
            raise ValidationError(
                f"Hazard of {model.spec} is unbounded at 0; use the cluster engine", 'model'
            )
        self.window = float(window)
        self.min_window = self.window / 1024

    def simulate(self, horizon: float, rng: np.random.Generator) -> PointProcessPath:
        self._check_horizon(horizon)
        hazard = self.model.hazard
        hazard_sup = self.model.hazard_sup
        tracker = self.kernel.excitation_tracker()

        times = [0.0]
        flags = [IMMIGRANT]
        tracker.record(0.0)
        last_immigrant = 0.0
        window = self.window
        now = 0.0
        proposed = accepted = 0

        while now < horizon:
            end = min(now + window, horizon)
            elapsed = now - last_immigrant
            bound = hazard_sup(elapsed, elapsed + (end - now)) + tracker.bound(now, end - now)
            if bound <= 0.0:
                now = end
                continue
            candidate = now + rng.standard_exponential() / bound
            if candidate > end:
                now = end
                continue
            now = candidate
            proposed += 1

            mu = hazard(candidate - last_immigrant)
            intensity = mu + tracker.value(candidate)
            if intensity > bound * (1.0 + MAJORANT_SLACK):
                raise MajorantViolationError(
                    f"Intensity {intensity} exceeds bound {bound} at t={candidate}",
                    self.name, intensity, bound,
                )
            u = rng.random() * bound
            if u < intensity:
                accepted += 1
                flag = IMMIGRANT if u < mu else OFFSPRING
                times.append(candidate)
                flags.append(flag)
                tracker.record(candidate)
                if flag == IMMIGRANT:
                    last_immigrant = candidate

            if proposed >= ADAPT_EVERY:
                if accepted < MIN_ACCEPTANCE * proposed and window > self.min_window:
                    window /= 2
                    logger.debug("Acceptance %.3f below %.2f, window halved to %g",
                                 accepted / proposed, MIN_ACCEPTANCE, window)
                proposed = accepted = 0

        return self._assemble(np.asarray(times), np.asarray(flags, dtype=np.int8), horizon)
