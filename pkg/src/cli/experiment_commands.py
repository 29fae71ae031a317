"""Monte Carlo experiment CLI commands"""

from typing import Any, Callable, Dict, Iterable, Tuple

import click

from .main import pass_context, CLIContext
from .params import (
    COUNT,
    Assertion,
    assert_option,
    check_assertions,
    handle_errors,
    model_options,
    output_options,
    run_options,
)
from ..models import (
    EngineName,
    ExcitationKernel,
    ExperimentConfig,
    ExperimentReport,
    InterarrivalModel,
    default_v_grid,
)

POSITIVE = click.FloatRange(min=0, min_open=True)
V_STEP = click.FloatRange(min=0, max=1, min_open=True)


def engine_option(f):
    return click.option('--engine', type=click.Choice([e.value for e in EngineName]),
                        default=EngineName.CLUSTER.value, show_default=True,
                        help='Simulation engine')(f)


def window_option(f):
    return click.option('--window', type=POSITIVE, default=1.0, show_default=True,
                        help='Lookahead window of the thinning majorant')(f)


def _execute(ctx: CLIContext, command: str, config: ExperimentConfig,
             runner: Callable[[ExperimentConfig], ExperimentReport],
             assertions: Iterable[Assertion], out: str, params: Dict[str, Any]) -> None:
    """Run an experiment, write its files and manifest, then check thresholds"""
    click.echo(f"Running {command}: {config.replications} replications, "
               f"{config.model.spec} / {config.kernel.spec}, engine {config.engine.value}")
    report = runner(config)

    storage = ctx.storage(out)
    written = storage.save_report(report)
    storage.save_manifest(command, {
        'model': config.model.spec,
        'kernel': config.kernel.spec,
        'seed': config.seed,
        'dt': config.dt,
        'out': out,
        'assertions': [str(a) for a in assertions],
        **params,
    })

    click.echo(click.style(f"✓ {command} finished", fg='green'))
    for name in sorted(report.summary):
        click.echo(f"  {name}: {report.summary[name]:.6g}")
    click.echo(f"  Files: {', '.join(written + ['manifest.json'])} in {storage.base_path}")

    check_assertions(assertions, report)
    if assertions:
        click.echo(click.style(f"✓ {len(list(assertions))} assertion(s) passed", fg='green'))


@click.command('lln')
@model_options
@engine_option
@click.option('--T', 'horizons', type=POSITIVE, multiple=True, default=(100.0, 1000.0, 10000.0),
              show_default=True, help='Horizons (repeatable)')
@click.option('--reps', type=COUNT, default=50, show_default=True, help='Replications per horizon')
@click.option('--v-step', type=V_STEP, default=0.01, show_default=True,
              help='Spacing of the v grid in (0, 1]')
@window_option
@run_options
@output_options
@assert_option
@pass_context
@handle_errors
def lln(ctx: CLIContext, model: InterarrivalModel, kernel: ExcitationKernel, engine: str,
        horizons: Tuple[float, ...], reps: int, v_step: float, window: float, seed: int,
        threads: int, dt: float, out: str, assertions: Tuple[Assertion, ...]):
    """Law of large numbers: sup deviation of N(vT)/T from v m/(1 - alpha)"""
    config = ExperimentConfig(
        model=model, kernel=kernel, engine=engine, horizons=list(horizons),
        v_grid=default_v_grid(v_step), replications=reps, seed=seed, dt=dt,
        threads=threads, window=window,
    )
    _execute(ctx, 'lln', config, ctx.experiment_service.run_lln, assertions, out, {
        'engine': engine, 'horizons': list(horizons), 'reps': reps,
        'v_step': v_step, 'window': window,
    })


@click.command('clt')
@model_options
@engine_option
@click.option('--T', 'horizon', type=POSITIVE, default=500.0, show_default=True, help='Horizon')
@click.option('--reps', type=COUNT, default=200, show_default=True, help='Replications')
@click.option('--v-step', type=V_STEP, default=0.1, show_default=True,
              help='Spacing of the v grid in (0, 1]')
@window_option
@run_options
@output_options
@assert_option
@pass_context
@handle_errors
def clt(ctx: CLIContext, model: InterarrivalModel, kernel: ExcitationKernel, engine: str,
        horizon: float, reps: int, v_step: float, window: float, seed: int,
        threads: int, dt: float, out: str, assertions: Tuple[Assertion, ...]):
    """Central limit theorem: marginals, KS distance and covariance of X(v)"""
    config = ExperimentConfig(
        model=model, kernel=kernel, engine=engine, horizons=[horizon],
        v_grid=default_v_grid(v_step), replications=reps, seed=seed, dt=dt,
        threads=threads, window=window,
    )
    _execute(ctx, 'clt', config, ctx.experiment_service.run_clt, assertions, out, {
        'engine': engine, 'horizon': horizon, 'reps': reps,
        'v_step': v_step, 'window': window,
    })


@click.command('varfit')
@model_options
@engine_option
@click.option('--T', 'horizon', type=POSITIVE, default=200.0, show_default=True, help='Horizon')
@click.option('--reps', type=COUNT, default=200, show_default=True, help='Replications')
@click.option('--step', type=POSITIVE, default=1.0, show_default=True,
              help='Spacing of the time grid')
@window_option
@run_options
@output_options
@assert_option
@pass_context
@handle_errors
def varfit(ctx: CLIContext, model: InterarrivalModel, kernel: ExcitationKernel, engine: str,
           horizon: float, reps: int, step: float, window: float, seed: int,
           threads: int, dt: float, out: str, assertions: Tuple[Assertion, ...]):
    """Variance rate: regress Var N(t) on t through the origin"""
    config = ExperimentConfig(
        model=model, kernel=kernel, engine=engine, horizons=[horizon],
        replications=reps, seed=seed, dt=dt, time_step=step,
        threads=threads, window=window,
    )
    _execute(ctx, 'varfit', config, ctx.experiment_service.run_variance_fit, assertions, out, {
        'engine': engine, 'horizon': horizon, 'reps': reps,
        'step': step, 'window': window,
    })


@click.command('edge')
@model_options
@engine_option
@click.option('--T', 'horizons', type=POSITIVE, multiple=True,
              default=(250.0, 500.0, 1000.0, 2000.0), show_default=True,
              help='Horizons (repeatable)')
@click.option('--reps', type=COUNT, default=200, show_default=True, help='Replications per horizon')
@run_options
@output_options
@assert_option
@pass_context
@handle_errors
def edge(ctx: CLIContext, model: InterarrivalModel, kernel: ExcitationKernel, engine: str,
         horizons: Tuple[float, ...], reps: int, seed: int, threads: int, dt: float,
         out: str, assertions: Tuple[Assertion, ...]):
    """Edge effects: fraction of cluster points escaping [0, T]"""
    config = ExperimentConfig(
        model=model, kernel=kernel, engine=engine, horizons=list(horizons),
        replications=reps, seed=seed, dt=dt, threads=threads,
    )
    _execute(ctx, 'edge', config, ctx.experiment_service.run_edge_effects, assertions, out, {
        'engine': engine, 'horizons': list(horizons), 'reps': reps,
    })


@click.command('agree')
@model_options
@click.option('--T', 'horizon', type=POSITIVE, default=500.0, show_default=True, help='Horizon')
@click.option('--reps', type=COUNT, default=500, show_default=True,
              help='Replications per engine')
@window_option
@run_options
@output_options
@assert_option
@pass_context
@handle_errors
def agree(ctx: CLIContext, model: InterarrivalModel, kernel: ExcitationKernel,
          horizon: float, reps: int, window: float, seed: int, threads: int, dt: float,
          out: str, assertions: Tuple[Assertion, ...]):
    """Engine agreement: cluster against thinning on N(T)"""
    config = ExperimentConfig(
        model=model, kernel=kernel, horizons=[horizon], replications=reps,
        seed=seed, dt=dt, threads=threads, window=window,
    )
    _execute(ctx, 'agree', config, ctx.experiment_service.run_engine_agreement, assertions, out, {
        'horizon': horizon, 'reps': reps, 'window': window,
    })
