"""Factory for building laws and kernels from textual specs"""

import re
from typing import Callable, Dict, List, Tuple

from ..exceptions import SpecParseError, ValidationError
from .interarrival import ExponentialInterarrival, InterarrivalModel, WeibullInterarrival
from .kernel import ExcitationKernel, ExponentialKernel, UniformKernel

_NUMBER = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$')

# prefix -> (parameter names, constructor)
MODEL_SPECS: Dict[str, Tuple[Tuple[str, ...], Callable[..., InterarrivalModel]]] = {
    'exp': (('rate',), lambda rate: ExponentialInterarrival(rho=rate)),
    'weibull': (('scale', 'shape'), lambda scale, shape: WeibullInterarrival(scale=scale, shape=shape)),
}

KERNEL_SPECS: Dict[str, Tuple[Tuple[str, ...], Callable[..., ExcitationKernel]]] = {
    'expk': (('alpha', 'beta'), lambda alpha, beta: ExponentialKernel(alpha=alpha, beta=beta)),
    'unifk': (('alpha', 'c'), lambda alpha, c: UniformKernel(alpha=alpha, c=c)),
}


def _parse_numbers(text: str, names: Tuple[str, ...]) -> List[float]:
    tokens = text.split(',') if text else []
    if len(tokens) != len(names):
        raise SpecParseError(
            f"Expected {len(names)} parameter(s) ({', '.join(names)}), got '{text}'", text
        )
    values = []
    for token in tokens:
        if not _NUMBER.match(token):
            raise SpecParseError(f"Not a decimal literal: '{token}'", token)
        values.append(float(token))
    return values


def _build(spec: str, registry, what: str):
    if not isinstance(spec, str) or not spec:
        raise SpecParseError(f"Empty {what} spec", str(spec))
    if any(ch.isspace() for ch in spec):
        raise SpecParseError(f"Whitespace is not allowed in {what} spec '{spec}'", spec)
    prefix, sep, rest = spec.partition(':')
    if not sep or prefix not in registry:
        known = ', '.join(sorted(registry))
        raise SpecParseError(f"Unknown {what} '{prefix}' (expected one of: {known})", prefix)
    names, constructor = registry[prefix]
    values = _parse_numbers(rest, names)
    try:
        return constructor(*values)
    except ValidationError as e:
        token = rest.split(',')[names.index(e.field)] if e.field in names else spec
        raise SpecParseError(f"Invalid {what} spec '{spec}': {e}", token) from e


class SpecFactory:
    """Create interarrival models and kernels from CLI spec strings"""

    @staticmethod
    def create_model(spec: str) -> InterarrivalModel:
        """Parse `exp:<rate>` or `weibull:<scale>,<shape>`

        Raises:
            SpecParseError: naming the offending token
        """
        return _build(spec, MODEL_SPECS, 'model')

    @staticmethod
    def create_kernel(spec: str) -> ExcitationKernel:
        """Parse `expk:<alpha>,<beta>` or `unifk:<alpha>,<c>`

        Raises:
            SpecParseError: naming the offending token
        """
        return _build(spec, KERNEL_SPECS, 'kernel')
