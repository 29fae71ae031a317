"""Closed-form and grid-solver CLI commands"""

from typing import Tuple

import click

from .main import pass_context, CLIContext
from .params import KERNEL, handle_errors, model_options, output_options
from ..models import ExcitationKernel, InterarrivalModel
from ..services.limits import limit_constants, weibull_family_table
from ..services.renewal import mean_count, psi_function, renewal_function


@click.command('theory')
@model_options
@click.option('--horizon', type=click.FloatRange(min=0, min_open=True), default=100.0,
              show_default=True, help='Right end of the tabulated grids')
@click.option('--dt', type=click.FloatRange(min=0, min_open=True), default=0.01,
              show_default=True, help='Grid step')
@click.option('--grids/--no-grids', default=False, show_default=True,
              help='Also write phi.csv, psi.csv and mean_count.csv')
@output_options
@pass_context
@handle_errors
def theory(ctx: CLIContext, model: InterarrivalModel, kernel: ExcitationKernel,
           horizon: float, dt: float, grids: bool, out: str):
    """Limit constants and, optionally, renewal-theory grid functions"""
    limits = limit_constants(model, kernel)
    tables = {}
    if grids:
        tables = {
            'phi': renewal_function(model, horizon, dt),
            'psi': psi_function(kernel, horizon, dt),
            'mean_count': mean_count(model, kernel, horizon, dt),
        }

    storage = ctx.storage(out)
    storage.save_limits(limits)
    for name, grid in tables.items():
        storage.save_grid(grid, name)

    storage.save_manifest('theory', {
        'model': model.spec,
        'kernel': kernel.spec,
        'horizon': horizon,
        'dt': dt,
        'grids': grids,
        'out': out,
    })

    click.echo(click.style('✓ Limit constants written', fg='green'))
    click.echo(f"  m:          {limits.m:.9f}")
    click.echo(f"  lln_slope:  {limits.lln_slope:.9f}")
    click.echo(f"  sigma2:     {limits.sigma2:.9f}"
               f" (cluster {limits.sigma2_cluster:.9f}, immigration {limits.sigma2_immigration:.9f})")
    if grids:
        click.echo(f"  Grids: phi.csv, psi.csv, mean_count.csv up to t={horizon:g}")
    click.echo(f"  Output: {storage.base_path}")


@click.command('family')
@click.option('--shapes', type=click.FloatRange(min=0, min_open=True), multiple=True,
              default=(0.5, 1.0, 2.0, 4.0), show_default=True,
              help='Weibull shape parameters (repeatable)')
@click.option('--kernel', type=KERNEL, default='expk:0.5,1', show_default=True,
              help='Excitation kernel')
@output_options
@pass_context
@handle_errors
def family(ctx: CLIContext, shapes: Tuple[float, ...], kernel: ExcitationKernel, out: str):
    """Unit-mean Weibull family: variance split against the shape parameter"""
    storage = ctx.storage(out)
    rows = weibull_family_table(shapes, kernel)
    storage.save_table('family', rows)
    storage.save_manifest('family', {
        'shapes': list(shapes),
        'kernel': kernel.spec,
        'out': out,
    })

    click.echo(click.style(f'✓ Weibull family table written ({len(rows)} shapes)', fg='green'))
    for row in rows:
        click.echo(f"  k={row['k']:<6g} sigma2={row['sigma2']:.6f}"
                   f" immigration={row['sigma2_immigration']:.6f}")
