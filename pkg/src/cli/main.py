"""Main CLI entry point"""

import json
import logging
from typing import Any, Dict, Optional

import click

from .. import __version__
from ..services.experiment_service import ExperimentService
from ..storage.file_storage import ResultStorage

LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


# Global context for services
class CLIContext:
    """Context object for CLI commands"""
    def __init__(self):
        self.experiment_service = ExperimentService()

    def storage(self, out: str) -> ResultStorage:
        return ResultStorage(out)


pass_context = click.make_pass_decorator(CLIContext, ensure=True)


def load_config(path: str) -> Dict[str, Any]:
    """Read a --config file; a manifest contributes its params block"""
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise click.BadParameter(f"Cannot read config {path}: {e}", param_hint='--config')
    if not isinstance(data, dict):
        raise click.BadParameter("Config must be a JSON object", param_hint='--config')
    params = data.get('params', data)
    if not isinstance(params, dict):
        raise click.BadParameter("Config 'params' must be a JSON object", param_hint='--config')
    return params


@click.group()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              help='JSON defaults for every subcommand (a manifest.json works); flags win')
@click.option('-v', '--verbose', count=True, help='Log INFO (-v) or DEBUG (-vv)')
@click.version_option(__version__, prog_name='rhp')
@click.pass_context
def cli(ctx, config_path: Optional[str], verbose: int):
    """Renewal Hawkes process toolkit - simulation, renewal theory and limit-theorem experiments"""
    logging.basicConfig(
        level=LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)],
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    if config_path:
        params = load_config(config_path)
        ctx.default_map = {name: dict(params) for name in cli.list_commands(ctx)}
    ctx.obj = CLIContext()


# Import subcommands
from . import theory_commands
from . import simulate_commands
from . import experiment_commands


# Register commands
cli.add_command(theory_commands.theory)
cli.add_command(theory_commands.family)
cli.add_command(simulate_commands.simulate)
cli.add_command(experiment_commands.lln)
cli.add_command(experiment_commands.clt)
cli.add_command(experiment_commands.varfit)
cli.add_command(experiment_commands.edge)
cli.add_command(experiment_commands.agree)


if __name__ == '__main__':
    cli()
