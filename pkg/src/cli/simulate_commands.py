"""Sample-path simulation CLI command"""

import click

from .main import pass_context, CLIContext
from .params import COUNT, handle_errors, model_options, output_options
from ..engines import EngineFactory
from ..models import EngineName, ExcitationKernel, InterarrivalModel
from ..services.statsutil import make_stream


@click.command('simulate')
@model_options
@click.option('--engine', type=click.Choice([e.value for e in EngineName]),
              default=EngineName.CLUSTER.value, show_default=True, help='Simulation engine')
@click.option('--horizon', type=click.FloatRange(min=0, min_open=True), default=100.0,
              show_default=True, help='Simulate on [0, horizon]')
@click.option('--seed', type=COUNT, default=42, show_default=True, help='Master seed')
@click.option('--window', type=click.FloatRange(min=0, min_open=True), default=1.0,
              show_default=True, help='Lookahead window of the thinning majorant')
@output_options
@pass_context
@handle_errors
def simulate(ctx: CLIContext, model: InterarrivalModel, kernel: ExcitationKernel, engine: str,
             horizon: float, seed: int, window: float, out: str):
    """Simulate one path and write path.csv with its path.json sidecar"""
    simulator = EngineFactory.create(engine, model, kernel, window=window)
    path = simulator.simulate(horizon, make_stream(seed, 0))

    storage = ctx.storage(out)
    storage.save_path(path, {'seed': seed, 'model': model.spec, 'kernel': kernel.spec})
    storage.save_manifest('simulate', {
        'model': model.spec,
        'kernel': kernel.spec,
        'engine': engine,
        'horizon': horizon,
        'seed': seed,
        'window': window,
        'out': out,
    })

    immigrants = int(path.immigrant_times.size)
    click.echo(click.style(f'✓ Simulated {len(path)} events on [0, {horizon:g}]', fg='green'))
    click.echo(f"  Engine: {engine}")
    click.echo(f"  Immigrants: {immigrants}, offspring: {len(path) - immigrants}")
    if engine == EngineName.CLUSTER.value:
        click.echo(f"  Escaped beyond horizon: {path.escaped_count}")
    click.echo(f"  Output: {storage.base_path / 'path.csv'}")
