"""Parameter types and shared options for the CLI"""

import functools
import operator
import os
import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable

import click

from ..exceptions import SimulationError, SpecParseError, ThresholdError, ValidationError
from ..models import ExcitationKernel, ExperimentReport, InterarrivalModel, SpecFactory

DEFAULT_MODEL = 'weibull:3,2'
DEFAULT_KERNEL = 'expk:0.5,1'
DEFAULT_SEED = 42
DEFAULT_OUT = './out'
DEFAULT_DT = 0.01


class ModelSpecType(click.ParamType):
    """`exp:<rate>` or `weibull:<scale>,<shape>`"""
    name = 'model'

    def convert(self, value, param, ctx):
        if isinstance(value, InterarrivalModel):
            return value
        try:
            return SpecFactory.create_model(value)
        except SpecParseError as e:
            self.fail(f"{e} [token: {e.token}]", param, ctx)


class KernelSpecType(click.ParamType):
    """`expk:<alpha>,<beta>` or `unifk:<alpha>,<c>`"""
    name = 'kernel'

    def convert(self, value, param, ctx):
        if isinstance(value, ExcitationKernel):
            return value
        try:
            return SpecFactory.create_kernel(value)
        except SpecParseError as e:
            self.fail(f"{e} [token: {e.token}]", param, ctx)


class CountType(click.ParamType):
    """Nonnegative integer that also accepts scientific notation such as 1e4"""
    name = 'count'

    def convert(self, value, param, ctx):
        if isinstance(value, int) and not isinstance(value, bool):
            number = value
        else:
            try:
                as_float = float(value)
            except (TypeError, ValueError):
                self.fail(f"{value!r} is not a number", param, ctx)
            if not as_float.is_integer():
                self.fail(f"{value!r} is not an integer", param, ctx)
            number = int(as_float)
        if number < 0:
            self.fail(f"{value!r} must be nonnegative", param, ctx)
        return number


_COMPARISONS: Dict[str, Callable[[float, float], bool]] = {
    '<=': operator.le,
    '>=': operator.ge,
    '==': operator.eq,
    '<': operator.lt,
    '>': operator.gt,
}
_ASSERTION = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)(<=|>=|==|<|>)(.+)$')


@dataclass(frozen=True)
class Assertion:
    """Threshold check on a report summary metric"""
    metric: str
    op: str
    value: float

    def __str__(self) -> str:
        return f"{self.metric}{self.op}{self.value!r}"

    def check(self, actual: float) -> bool:
        return _COMPARISONS[self.op](actual, self.value)


class AssertionType(click.ParamType):
    """`<metric><op><value>` with op one of < <= > >= =="""
    name = 'assertion'

    def convert(self, value, param, ctx):
        if isinstance(value, Assertion):
            return value
        match = _ASSERTION.match(str(value).replace(' ', ''))
        if not match:
            self.fail(f"Cannot parse assertion {value!r} (expected e.g. rel_err<0.1)", param, ctx)
        metric, op, threshold = match.groups()
        try:
            return Assertion(metric, op, float(threshold))
        except ValueError:
            self.fail(f"Threshold {threshold!r} is not a number", param, ctx)


MODEL = ModelSpecType()
KERNEL = KernelSpecType()
COUNT = CountType()
ASSERTION = AssertionType()


def default_threads() -> int:
    return os.cpu_count() or 1


def model_options(f):
    """--model and --kernel"""
    f = click.option('--kernel', type=KERNEL, default=DEFAULT_KERNEL, show_default=True,
                     help='Excitation kernel: expk:<alpha>,<beta> or unifk:<alpha>,<c>')(f)
    f = click.option('--model', type=MODEL, default=DEFAULT_MODEL, show_default=True,
                     help='Interarrival law: exp:<rate> or weibull:<scale>,<shape>')(f)
    return f


def output_options(f):
    """--out"""
    return click.option('--out', type=click.Path(file_okay=False), default=DEFAULT_OUT,
                        show_default=True, help='Output directory')(f)


def run_options(f):
    """--seed, --threads, --dt"""
    f = click.option('--dt', type=click.FloatRange(min=0, min_open=True), default=DEFAULT_DT,
                     show_default=True, help='Grid step of the renewal solver')(f)
    f = click.option('--threads', type=click.IntRange(min=1), default=default_threads,
                     help='Worker processes (default: CPU count)')(f)
    f = click.option('--seed', type=COUNT, default=DEFAULT_SEED, show_default=True,
                     help='Master seed')(f)
    return f


def assert_option(f):
    return click.option('--assert', 'assertions', type=ASSERTION, multiple=True,
                        help='Threshold on a summary metric, e.g. rel_err<0.10 (repeatable)')(f)


def check_assertions(assertions: Iterable[Assertion], report: ExperimentReport) -> None:
    """Evaluate thresholds against the metrics of a report

    Raises:
        click.UsageError: unknown metric
        ThresholdError: first failed threshold
    """
    for assertion in assertions:
        actual = report.metric(assertion.metric)
        if actual is None:
            known = ', '.join(sorted(report.summary))
            raise click.UsageError(f"Unknown metric '{assertion.metric}' (available: {known})")
        if not assertion.check(actual):
            raise ThresholdError(
                f"Assertion {assertion} failed: {assertion.metric} = {actual:.9g}",
                assertion.metric, actual,
            )


def handle_errors(f):
    """Map domain errors to exit codes: 2 for invalid input, 1 for failed runs"""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValidationError as e:
            raise click.UsageError(f"{e} [{e.field}]")
        except (SimulationError, ThresholdError, IOError) as e:
            click.echo(click.style(f'✗ {e}', fg='red'), err=True)
            click.get_current_context().exit(1)
    return wrapper
