"""Monte Carlo experiments for the limit theorems of the renewal Hawkes process

Every replication draws from its own stream make_stream(seed, index, *salt),
so a report depends only on the configuration and the master seed, whatever
the worker count or scheduling order.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..engines import EngineFactory
from ..exceptions import ValidationError
from ..models import (
    EngineName,
    ExcitationKernel,
    ExperimentConfig,
    ExperimentReport,
    InterarrivalModel,
    grid_size,
)
from .interfaces import IExperimentService
from .limits import limit_constants
from .renewal import mean_count
from .simulation import hazard_compensator
from .statsutil import (
    dispersion_ratio_test,
    ks_critical_value,
    ks_statistic,
    make_stream,
    normal_cdf,
    regression_through_origin,
    two_sample_z,
)

logger = logging.getLogger(__name__)

# stream salts, one per experiment
LLN_SALT = 1
CLT_SALT = 2
VARFIT_SALT = 3
EDGE_SALT = 4
AGREE_SALT = 5

KS_LEVEL = 0.01
AGREEMENT_LEVEL = 0.01


@dataclass(frozen=True)
class ReplicationTask:
    """Everything a worker needs to simulate one path"""
    model: InterarrivalModel
    kernel: ExcitationKernel
    engine: str
    horizon: float
    seed: int
    salt: Tuple[int, ...]
    index: int
    sample_times: Tuple[float, ...]
    window: float = 1.0


@dataclass(frozen=True)
class ReplicationSummary:
    """Path statistics kept after the path itself is dropped"""
    index: int
    counts: np.ndarray
    total: int
    escaped: int
    hazard_integral: float
    immigrants: int


def run_replication(task: ReplicationTask) -> ReplicationSummary:
    """Simulate one path and reduce it to its summary

    Top-level so that it pickles for worker processes.
    """
    rng = make_stream(task.seed, task.index, *task.salt)
    engine = EngineFactory.create(task.engine, task.model, task.kernel, window=task.window)
    path = engine.simulate(task.horizon, rng)
    return ReplicationSummary(
        index=task.index,
        counts=np.asarray(path.count(np.asarray(task.sample_times, dtype=float)), dtype=np.int64),
        total=len(path),
        escaped=path.escaped_count,
        hazard_integral=hazard_compensator(path, task.model, task.horizon),
        immigrants=int(path.immigrant_times.size),
    )


def _standard_error(values: np.ndarray) -> float:
    return float(np.std(values, ddof=1) / math.sqrt(values.size))


def _strictly_decreasing(values: Sequence[float]) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


class ExperimentService(IExperimentService):
    """Replication-parallel experiment runner"""

    def _run(self, tasks: List[ReplicationTask], threads: int) -> List[ReplicationSummary]:
        """Run tasks, returning summaries in task order"""
        if threads <= 1 or len(tasks) <= 1:
            return [run_replication(task) for task in tasks]
        workers = min(threads, len(tasks))
        chunksize = max(1, len(tasks) // (workers * 4))
        logger.info("Running %d replications on %d workers", len(tasks), workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(run_replication, tasks, chunksize=chunksize))

    def _replicate(self, config: ExperimentConfig, engine: str, horizon: float,
                   salt: Tuple[int, ...], sample_times: Sequence[float]) -> List[ReplicationSummary]:
        # configuration errors surface here rather than inside a worker
        EngineFactory.create(engine, config.model, config.kernel, window=config.window)
        tasks = [
            ReplicationTask(
                model=config.model,
                kernel=config.kernel,
                engine=engine,
                horizon=horizon,
                seed=config.seed,
                salt=salt,
                index=index,
                sample_times=tuple(float(t) for t in sample_times),
                window=config.window,
            )
            for index in range(config.replications)
        ]
        return self._run(tasks, config.threads)

    def run_lln(self, config: ExperimentConfig) -> ExperimentReport:
        """Sup over the v grid of |N(vT)/T - v m/(1 - alpha)| for each horizon"""
        limits = limit_constants(config.model, config.kernel)
        v = np.asarray(config.v_grid)
        rows = []
        for position, horizon in enumerate(config.horizons):
            summaries = self._replicate(config, config.engine.value, horizon,
                                        (LLN_SALT, position), v * horizon)
            counts = np.vstack([s.counts for s in summaries]).astype(float)
            deviations = np.max(np.abs(counts / horizon - v * limits.lln_slope), axis=1)
            hazard = np.array([s.hazard_integral for s in summaries]) / horizon
            rows.append({
                'T': horizon,
                'mean_sup_dev': float(np.mean(deviations)),
                'median': float(np.median(deviations)),
                'max': float(np.max(deviations)),
                'se': _standard_error(deviations),
                'hazard_avg': float(np.mean(hazard)),
                'm': limits.m,
            })
            logger.info("lln T=%g mean sup deviation %.6f", horizon, rows[-1]['mean_sup_dev'])

        final = rows[-1]
        summary = {
            'final_mean_sup_dev': final['mean_sup_dev'],
            'final_ratio': final['mean_sup_dev'] / limits.lln_slope,
            'monotone': float(_strictly_decreasing([r['mean_sup_dev'] for r in rows])),
            'hazard_rel_err': abs(final['hazard_avg'] - limits.m) / limits.m,
        }
        return ExperimentReport(name='lln', limits=limits, tables={'lln': rows}, summary=summary)

    def run_clt(self, config: ExperimentConfig) -> ExperimentReport:
        """Rescaled fluctuations X(v) = (N(vT) - E[N(vT)]) / sqrt(T) over the v grid"""
        if len(config.v_grid) < 2:
            raise ValidationError("The CLT experiment needs at least 2 grid points", 'v_grid')
        limits = limit_constants(config.model, config.kernel)
        horizon = config.horizon
        v = np.asarray(config.v_grid)
        times = v * horizon
        expected = np.asarray(mean_count(config.model, config.kernel, horizon, config.dt).at(times))
        summaries = self._replicate(config, config.engine.value, horizon, (CLT_SALT,), times)
        counts = np.vstack([s.counts for s in summaries]).astype(float)
        root = math.sqrt(horizon)
        x = (counts - expected) / root
        x_asymptotic = (counts - v * limits.lln_slope * horizon) / root

        reps = config.replications
        covariance = np.cov(x, rowvar=False)
        sigma2 = limits.sigma2
        ks_crit = ks_critical_value(KS_LEVEL, reps)
        marginals = []
        for j, vj in enumerate(v):
            column = x[:, j]
            ks = ks_statistic(column / math.sqrt(sigma2 * vj), normal_cdf)
            marginals.append({
                'v': float(vj),
                'mean': float(np.mean(column)),
                'se': _standard_error(column),
                'mean_asymptotic': float(np.mean(x_asymptotic[:, j])),
                'var': float(covariance[j, j]),
                'theo_var': sigma2 * float(vj),
                'ks': ks,
                'ks_crit_1pct': ks_crit,
            })

        cov_rows = []
        for i, u in enumerate(v):
            for j in range(i, len(v)):
                cov_rows.append({
                    'u': float(u),
                    'v': float(v[j]),
                    'emp_cov': float(covariance[i, j]),
                    'theo_cov': sigma2 * float(min(u, v[j])),
                })

        path_rows = [
            {'rep': rep, 'v': float(v[j]), 'x': float(x[rep, j]),
             'x_asymptotic': float(x_asymptotic[rep, j])}
            for rep in range(reps) for j in range(len(v))
        ]

        last = marginals[-1]
        half = int(np.argmin(np.abs(v[:-1] - v[-1] / 2)))
        theo_half = sigma2 * float(v[half])
        summary = {
            'var_at_1': last['var'],
            'sigma2': sigma2,
            'var_rel_err': abs(last['var'] - last['theo_var']) / last['theo_var'],
            'ks_final': last['ks'],
            'ks_crit': ks_crit,
            'ks_pass': float(last['ks'] < ks_crit),
            'cov_rel_err': abs(float(covariance[half, -1]) - theo_half) / theo_half,
            'max_abs_mean_z': max(
                abs(row['mean']) / row['se'] if row['se'] > 0 else 0.0 for row in marginals
            ),
        }
        return ExperimentReport(
            name='clt',
            limits=limits,
            tables={'clt_marginals': marginals, 'clt_cov': cov_rows, 'clt_paths': path_rows},
            summary=summary,
        )

    def run_variance_fit(self, config: ExperimentConfig) -> ExperimentReport:
        """Regress the sample variance of N(t) on t through the origin

        Centering by the deterministic E[N(t)] leaves the sample variance
        unchanged, so no mean function is needed.
        """
        limits = limit_constants(config.model, config.kernel)
        horizon = config.horizon
        n = grid_size(horizon, config.time_step)
        times = np.minimum(np.arange(1, n) * config.time_step, horizon)
        if times.size == 0:
            raise ValidationError("Time step must not exceed the horizon", 'time_step')
        summaries = self._replicate(config, config.engine.value, horizon, (VARFIT_SALT,), times)
        counts = np.vstack([s.counts for s in summaries]).astype(float)
        variances = np.var(counts, axis=0, ddof=1)
        slope = regression_through_origin(times, variances)
        rel_err = abs(slope - limits.sigma2) / limits.sigma2
        rows = [{'t': float(t), 'sample_var': float(s)} for t, s in zip(times, variances)]
        fit = {'slope': slope, 'sigma2': limits.sigma2, 'rel_err': rel_err}
        logger.info("varfit slope %.6f vs sigma2 %.6f", slope, limits.sigma2)
        return ExperimentReport(
            name='varfit',
            limits=limits,
            tables={'varfit': rows},
            documents={'varfit_summary': fit},
            summary=dict(fit),
        )

    def run_edge_effects(self, config: ExperimentConfig) -> ExperimentReport:
        """Mean fraction of cluster points escaping [0, T], per horizon"""
        if config.engine is not EngineName.CLUSTER:
            raise ValidationError(
                "Edge effects are measured by the cluster engine only", 'engine'
            )
        limits = limit_constants(config.model, config.kernel)
        rows = []
        for position, horizon in enumerate(config.horizons):
            summaries = self._replicate(config, EngineName.CLUSTER.value, horizon,
                                        (EDGE_SALT, position), ())
            fractions = np.array([s.escaped for s in summaries], dtype=float) / horizon
            totals = np.array([s.total for s in summaries], dtype=float)
            rows.append({
                'T': horizon,
                'escaped_fraction': float(np.mean(fractions)),
                'se': _standard_error(fractions),
                'count_rate': float(np.mean(totals)) / horizon,
            })

        fractions = [row['escaped_fraction'] for row in rows]
        summary = {
            'final_fraction': fractions[-1],
            'final_ratio': fractions[-1] / limits.lln_slope,
            'monotone': float(_strictly_decreasing(fractions) or not any(fractions)),
        }
        return ExperimentReport(name='edge', limits=limits, tables={'edge': rows}, summary=summary)

    def run_engine_agreement(self, config: ExperimentConfig) -> ExperimentReport:
        """z-test on mean N(T) and F-test on its dispersion across the two engines"""
        limits = limit_constants(config.model, config.kernel)
        horizon = config.horizon
        totals: Dict[str, np.ndarray] = {}
        for position, engine in enumerate(EngineName):
            summaries = self._replicate(config, engine.value, horizon, (AGREE_SALT, position), ())
            totals[engine.value] = np.array([s.total for s in summaries], dtype=float)

        cluster = totals[EngineName.CLUSTER.value]
        thinning = totals[EngineName.THINNING.value]
        zstat, z_pvalue = two_sample_z(cluster, thinning)
        f_ratio, f_pvalue = dispersion_ratio_test(cluster, thinning)
        passed = z_pvalue > AGREEMENT_LEVEL and f_pvalue > AGREEMENT_LEVEL
        document = {
            'means': {name: float(np.mean(values)) for name, values in totals.items()},
            'ses': {name: _standard_error(values) for name, values in totals.items()},
            'zstat': zstat,
            'z_pvalue': z_pvalue,
            'f_ratio': f_ratio,
            'f_pvalue': f_pvalue,
            'pass': passed,
        }
        summary = {
            'abs_z': abs(zstat),
            'z_pvalue': z_pvalue,
            'f_ratio': f_ratio,
            'f_pvalue': f_pvalue,
            'pass': float(passed),
        }
        return ExperimentReport(
            name='agree', limits=limits, documents={'agree': document}, summary=summary
        )
