"""
Run configuration of the command-line interface.

Settings:

- command: subcommand to run (decompose, transform, extend, recover, band,
  cauchy, verify)
- suite: verification suite for ``verify`` (or ``all``)
- n, truncation, scheme: grid parameters; ``None`` selects the documented
  default of each command or suite
- convention: transform normalization (analysis, classical, unitary)
- density / density_csv: built-in density name or sample file, mutually
  exclusive
- output: report or result file, standard output if unset
- tolerances: overrides of named check tolerances
- seed: seed of the randomized suites
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union

import param

from bicomplex_paley_wiener.densities import Density, get_density
from bicomplex_paley_wiener.domains import SCHEMES, SampledProductFunction
from bicomplex_paley_wiener.transform import TransformConvention
from bicomplex_paley_wiener.utils import get_setting_optional

logger = logging.getLogger(__name__)

COMMANDS = [
    "decompose",
    "transform",
    "extend",
    "recover",
    "band",
    "cauchy",
    "verify",
]
SUITES = [
    "algebra",
    "fourier_example",
    "plancherel",
    "energy",
    "recovery",
    "contour",
    "exponential_type",
    "damping",
    "cauchy",
    "ray",
]
DEFAULT_DENSITY = "exp_decay"


class RunConfig(param.Parameterized):
    """Validated settings of one command-line run."""

    command = param.Selector(objects=COMMANDS, default="verify")
    suite = param.Selector(objects=SUITES + ["all"], default="all")
    n = param.Integer(default=None, allow_None=True, bounds=(2, None))
    truncation = param.Number(
        default=None,
        allow_None=True,
        bounds=(0, None),
        inclusive_bounds=(False, True),
        doc="Truncation T of infinite integration bounds.",
    )
    scheme = param.Selector(objects=list(SCHEMES), default="gauss_legendre")
    convention = param.Selector(
        objects=["analysis", "classical", "unitary"], default="analysis"
    )
    density = param.String(default=None, allow_None=True)
    density_csv = param.String(default=None, allow_None=True)
    output = param.String(default=None, allow_None=True)
    tolerances = param.Dict(
        default={}, doc="Mapping of check name to tolerance override."
    )
    seed = param.Integer(default=0, bounds=(0, None))
    points = param.List(default=[], item_type=str, doc="Bicomplex points.")
    x1 = param.Number(default=1.0, doc="Line height x1 for recover.")
    x2 = param.Number(default=0.0, doc="Line height x2 for recover.")
    band = param.Number(
        default=1.0,
        bounds=(0, None),
        inclusive_bounds=(False, True),
        doc="Band limit A for band.",
    )

    def __init__(self, **params: Any) -> None:
        super().__init__(**params)
        if self.density is not None and self.density_csv is not None:
            raise ValueError(
                "A named density and a density CSV are mutually exclusive"
            )
        if self.density is not None:
            get_density(self.density)
        for name, tolerance in self.tolerances.items():
            if not float(tolerance) > 0:
                raise ValueError(
                    f"Tolerance '{name}' must be positive, got {tolerance}"
                )

    @classmethod
    def from_mapping(cls, settings: Mapping[str, Any]) -> "RunConfig":
        known = set(cls.param.objects()) - {"name"}
        unknown = set(settings) - known
        if unknown:
            raise ValueError(
                f"Unknown configuration keys: {', '.join(sorted(unknown))}"
            )
        values = {
            name: get_setting_optional(settings, name) for name in known
        }
        return cls(
            **{
                name: value
                for name, value in values.items()
                if value is not None
            }
        )

    @staticmethod
    def load_file(path: Union[str, Path]) -> Dict[str, Any]:
        """Read a JSON configuration file into a plain mapping."""
        with open(path) as config_file:
            settings = json.load(config_file)
        if not isinstance(settings, dict):
            raise ValueError(f"Configuration file {path} must hold an object")
        return settings

    @property
    def transform_convention(self) -> TransformConvention:
        return TransformConvention.from_name(self.convention)

    def resolve_density(self) -> Density:
        return get_density(self.density or DEFAULT_DENSITY)

    def load_samples(self) -> SampledProductFunction:
        if self.density_csv is None:
            raise ValueError("No density CSV configured")
        return SampledProductFunction.from_csv(self.density_csv)

    def tolerance(self, name: str, default: float) -> float:
        return float(get_setting_optional(self.tolerances, name, default))

    def grid_parameters(self, n: int, truncation: float) -> Dict[str, Any]:
        """Grid parameters with configured values taking precedence over
        the command's defaults."""
        return {
            "n": self.n if self.n is not None else n,
            "truncation": (
                self.truncation if self.truncation is not None else truncation
            ),
            "scheme": self.scheme,
        }

    def selected_suites(self) -> List[str]:
        return list(SUITES) if self.suite == "all" else [self.suite]
