"""
Bicomplex Cauchy integral over the boundary line ``{x0 + k x3}``.

For boundary samples ``H = e H1 + e' H2`` the Cauchy integral splits as
``C(H)(Z) = e I1 + e' I2`` with::

    I_i = 1 / (2 pi i) int H_i(w) / (w - beta_i) dw

For ``H`` in the Hardy class of the upper half-plane, ``C(H)`` reproduces
the holomorphic extension there and vanishes in the lower half-plane.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np

from bicomplex_paley_wiener.algebra import (
    Bicomplex,
    Hyperbolic,
    conjugate_star,
)
from bicomplex_paley_wiener.domains import (
    ProductFunction,
    SampledProductFunction,
    in_lower_half_plane,
    in_upper_half_plane,
)
from bicomplex_paley_wiener.exception import (
    NonFiniteError,
    OnBoundaryError,
    OutOfDomainError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BoundaryFunction:
    """Boundary samples ``H`` on the truncated line ``(-T, T)``.

    Attributes:
        samples: Values of ``H`` on a real-line grid.
        p: Hardy exponent; only ``p = 2`` has shipped oracles.
        reference: Holomorphic function whose trace ``H`` is, if known.
    """

    samples: SampledProductFunction
    p: float = 2.0
    reference: Optional[ProductFunction] = None

    def __post_init__(self) -> None:
        if not self.p >= 1:
            raise ValueError(
                f"Hardy exponent p must be at least 1, got {self.p}"
            )
        norm = self.samples.lp_norm_p(self.p)
        if not all(math.isfinite(c) for c in norm.components):
            raise NonFiniteError(
                f"Boundary function has an infinite L{self.p} norm"
            )


def hardy_norm(boundary: BoundaryFunction) -> Hyperbolic:
    """Componentwise ``(int |H_i|^p)^(1/p)``."""
    norm = boundary.samples.lp_norm_p(boundary.p)
    return Hyperbolic.from_idempotent(
        *(component ** (1 / boundary.p) for component in norm.components)
    )


def _cauchy_component(
    nodes: np.ndarray, weights: np.ndarray, values: np.ndarray, beta: complex
) -> complex:
    if beta.imag == 0:
        raise OnBoundaryError(
            f"Cauchy kernel is singular at {beta} on the boundary line"
        )
    return complex(np.sum(weights * values / (nodes - beta))) / (2j * math.pi)


def cauchy_integral(boundary: BoundaryFunction, z: Bicomplex) -> Bicomplex:
    """Evaluate ``C(H)(Z)`` off the boundary.

    Raises:
        OnBoundaryError: If an idempotent component of ``z`` is real.
    """
    grid, samples = boundary.samples.grid, boundary.samples
    return Bicomplex.from_idempotent(
        _cauchy_component(
            grid.nodes1, grid.weights1, samples.values1, z.beta1
        ),
        _cauchy_component(
            grid.nodes2, grid.weights2, samples.values2, z.beta2
        ),
    )


def jump_identity_check(
    boundary: BoundaryFunction, z: Bicomplex
) -> Tuple[Bicomplex, Bicomplex]:
    """Both sides of ``C(H)(Z) - C(H)(Z*) = F(Z)`` for ``Z`` in the upper
    half-plane.

    The right side is ``boundary.reference(Z)`` when a reference function
    is known, and the reproduced value ``C(H)(Z)`` otherwise.

    Raises:
        OutOfDomainError: If ``z`` is not in the upper half-plane.
    """
    if not in_upper_half_plane(z):
        raise OutOfDomainError(f"{z} is not in the upper half-plane")
    upper = cauchy_integral(boundary, z)
    lhs = upper - cauchy_integral(boundary, conjugate_star(z))
    rhs = boundary.reference(z) if boundary.reference else upper
    return lhs, rhs


def lower_half_plane_residual(
    boundary: BoundaryFunction, points: Iterable[Bicomplex]
) -> Hyperbolic:
    """Componentwise ``max |C(H)(Z)|`` over points of the lower half-plane;
    zero exactly when ``H`` is the trace of a Hardy function."""
    largest = [0.0, 0.0]
    for z in points:
        if not in_lower_half_plane(z):
            raise OutOfDomainError(f"{z} is not in the lower half-plane")
        value = cauchy_integral(boundary, z)
        largest[0] = max(largest[0], abs(value.beta1))
        largest[1] = max(largest[1], abs(value.beta2))
    logger.debug(f"Lower half-plane residual {largest}")
    return Hyperbolic.from_idempotent(*largest)
