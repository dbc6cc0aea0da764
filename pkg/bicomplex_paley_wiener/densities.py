"""
Named built-in densities with closed-form oracles.

Each :class:`Density` has a profile on the real line. Its restriction to
``t > 0`` is the half-plane density, and its restriction to ``(-A, A)`` is
the band density. Where known in closed form, it also carries:

* ``transform(z) = int f(t) exp(-i t z) dt`` (forward prefactor one),
* ``extension(beta) = int_0^inf f(t) exp(i t beta) dt`` for
  ``Im beta > 0``,
* ``holomorphic(beta)``, the analytic continuation of a boundary profile
  into the upper half-plane (Hardy functions).

Densities are selected by name, e.g. ``exp_decay`` or ``indicator(2.5)``.
"""

import logging
import math
import re
from dataclasses import dataclass
from typing import Callable, Dict, Optional

import numpy as np

from bicomplex_paley_wiener.domains import (
    ComponentFunction,
    ProductFunction,
    ProductGrid,
    SampledProductFunction,
)

logger = logging.getLogger(__name__)

_SPEC = re.compile(
    r"^\s*(?P<name>[a-z_0-9]+)\s*(?:\((?P<argument>[^)]*)\))?\s*$"
)


@dataclass(frozen=True)
class Density:
    name: str
    profile: ComponentFunction
    transform: Optional[ComponentFunction] = None
    extension: Optional[ComponentFunction] = None
    holomorphic: Optional[ComponentFunction] = None
    band: Optional[float] = None

    def sample(self, grid: ProductGrid) -> SampledProductFunction:
        return SampledProductFunction.from_callables(grid, self.profile)

    def extension_function(self) -> Optional[ProductFunction]:
        if self.extension is None:
            return None
        return ProductFunction.symmetric(self.extension, f"ext({self.name})")

    def holomorphic_function(self) -> Optional[ProductFunction]:
        if self.holomorphic is None:
            return None
        return ProductFunction.symmetric(self.holomorphic, self.name)


def _complex(values: np.ndarray) -> np.ndarray:
    return np.asarray(values, dtype=complex)


def zero() -> Density:
    def vanish(values: np.ndarray) -> np.ndarray:
        return np.zeros(np.shape(values), dtype=complex)

    return Density("zero", vanish, vanish, vanish, vanish)


def exp_decay() -> Density:
    """``exp(-|t|)``, transform ``2 / (1 + z^2)``."""
    return Density(
        "exp_decay",
        lambda t: _complex(np.exp(-np.abs(t))),
        transform=lambda z: 2 / (1 + _complex(z) ** 2),
        extension=lambda beta: 1 / (1 - 1j * _complex(beta)),
    )


def gaussian() -> Density:
    """``exp(-t^2 / 2)``, transform ``sqrt(2 pi) exp(-z^2 / 2)``."""
    return Density(
        "gaussian",
        lambda t: _complex(np.exp(-np.asarray(t) ** 2 / 2)),
        transform=lambda z: math.sqrt(2 * math.pi)
        * np.exp(-(_complex(z) ** 2) / 2),
    )


def indicator(A: float = 1.0) -> Density:
    """Indicator of ``(-A, A)``, transform ``2 sin(A z) / z``."""
    if not A > 0:
        raise ValueError(f"Indicator band limit must be positive, got {A}")

    def profile(t: np.ndarray) -> np.ndarray:
        return _complex(np.where(np.abs(t) < A, 1.0, 0.0))

    def transform(z: np.ndarray) -> np.ndarray:
        # np.sinc(x) = sin(pi x) / (pi x), continuous at zero
        return 2 * A * np.sinc(A * _complex(z) / math.pi)

    def extension(beta: np.ndarray) -> np.ndarray:
        beta = _complex(beta)
        return (np.exp(1j * A * beta) - 1) / (1j * beta)

    return Density(
        f"indicator({A!r})",
        profile,
        transform=transform,
        extension=extension,
        band=A,
    )


def rational_hardy() -> Density:
    """``1 / (t + i)^2``, holomorphic in the upper half-plane."""

    def transform(z: np.ndarray) -> np.ndarray:
        z = _complex(z)
        return np.where(z.real > 0, -2 * math.pi * z * np.exp(-z), 0)

    return Density(
        "rational_hardy",
        lambda t: 1 / (_complex(t) + 1j) ** 2,
        transform=transform,
        holomorphic=lambda beta: 1 / (_complex(beta) + 1j) ** 2,
    )


def rational_hardy2() -> Density:
    """``1 / ((t + i)(t + 2i))``, holomorphic in the upper half-plane."""

    def transform(z: np.ndarray) -> np.ndarray:
        z = _complex(z)
        value = -2 * math.pi * (np.exp(-z) - np.exp(-2 * z))
        return np.where(z.real > 0, value, 0)

    def f(beta: np.ndarray) -> np.ndarray:
        beta = _complex(beta)
        return 1 / ((beta + 1j) * (beta + 2j))

    return Density("rational_hardy2", f, transform=transform, holomorphic=f)


DENSITIES: Dict[str, Callable[..., Density]] = {
    "zero": zero,
    "exp_decay": exp_decay,
    "gaussian": gaussian,
    "indicator": indicator,
    "rational_hardy": rational_hardy,
    "rational_hardy2": rational_hardy2,
}


def get_density(spec: str) -> Density:
    """Look up a built-in density by ``name`` or ``name(argument)``.

    Raises:
        ValueError: For unknown names or malformed arguments.
    """
    match = _SPEC.match(spec)
    if match is None or match["name"] not in DENSITIES:
        raise ValueError(
            f"Unknown density '{spec}', expected one of "
            f"{', '.join(DENSITIES)} (indicator takes a band limit, e.g. "
            "indicator(2.5))"
        )
    factory = DENSITIES[match["name"]]
    argument = match["argument"]
    if argument is None or not argument.strip():
        return factory()
    if match["name"] != "indicator":
        raise ValueError(f"Density '{match['name']}' takes no argument")
    return factory(float(argument))
