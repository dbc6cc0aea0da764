"""
Bicomplex Fourier transform by direct quadrature.

The transform of ``F = e F1 + e' F2`` at ``Z = e beta1 + e' beta2`` splits
into two one-dimensional complex transforms::

    F^(Z) = c (e int F1(t) exp(-i t beta1) dt
               + e' int F2(t) exp(-i t beta2) dt)

so everything reduces to :func:`scalar_transform`. The prefactor ``c`` and
the sign of the exponent are set by a :class:`TransformConvention`.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np

from bicomplex_paley_wiener.algebra import (
    Bicomplex,
    Hyperbolic,
    from_idempotent_arrays,
    idempotent_arrays,
)
from bicomplex_paley_wiener.domains import (
    DEFAULT_PANEL_ORDER,
    DInterval,
    ProductGrid,
    SampledProductFunction,
    gauss_legendre_rule,
    l2k_norm_squared,
)
from bicomplex_paley_wiener.exception import DivergenceError, NonFiniteError

logger = logging.getLogger(__name__)

GROWTH_LIMIT = 1e12
# complex entries per evaluation block
BLOCK_SIZE = 1 << 22
TRANSFORM_CSV_HEADER = [
    "x0",
    "x1",
    "x2",
    "x3",
    "re_beta1",
    "im_beta1",
    "re_beta2",
    "im_beta2",
]


@dataclass(frozen=True)
class TransformConvention:
    """Normalization of the forward transform ``c int F(t) exp(s i t Z) dt``.

    The inverse uses the opposite sign and the prefactor ``1 / (2 pi c)``,
    so the two prefactors always multiply to ``1 / (2 pi)``.
    """

    forward_prefactor: float = 1 / (2 * math.pi)
    sign: int = -1

    def __post_init__(self) -> None:
        if not (
            math.isfinite(self.forward_prefactor)
            and self.forward_prefactor > 0
        ):
            raise ValueError(
                f"Forward prefactor must be positive and finite, got "
                f"{self.forward_prefactor}"
            )
        if self.sign not in (-1, 1):
            raise ValueError(f"Sign must be -1 or 1, got {self.sign}")

    @classmethod
    def analysis(cls) -> TransformConvention:
        """Forward ``1 / (2 pi)``, inverse ``1`` (the half-plane theorems'
        pair)."""
        return cls(1 / (2 * math.pi))

    @classmethod
    def classical(cls) -> TransformConvention:
        """Forward ``1``, inverse ``1 / (2 pi)``."""
        return cls(1.0)

    @classmethod
    def unitary(cls) -> TransformConvention:
        """Forward and inverse ``1 / sqrt(2 pi)``."""
        return cls(1 / math.sqrt(2 * math.pi))

    @classmethod
    def from_name(cls, name: str) -> TransformConvention:
        constructors = {
            "analysis": cls.analysis,
            "classical": cls.classical,
            "unitary": cls.unitary,
        }
        if name not in constructors:
            raise ValueError(
                f"Unknown transform convention '{name}', expected one of "
                f"{', '.join(constructors)}"
            )
        return constructors[name]()

    @property
    def inverse_prefactor(self) -> float:
        return 1 / (2 * math.pi * self.forward_prefactor)

    @property
    def plancherel_factor(self) -> float:
        """``||F||^2 = plancherel_factor * ||F^||^2`` componentwise."""
        return 1 / (2 * math.pi * self.forward_prefactor**2)


def scalar_transform(
    nodes: np.ndarray,
    weights: np.ndarray,
    values: np.ndarray,
    points: np.ndarray,
    sign: int,
    prefactor: float,
    guard: bool = True,
) -> np.ndarray:
    """Evaluate ``prefactor * sum_n w_n f_n exp(sign i t_n z)`` at each
    complex ``z``.

    Points are processed in blocks; each sum runs over the contiguous node
    axis, so numpy's pairwise summation fixes the reduction order.

    Args:
        guard: Reject points where ``sum |terms|`` exceeds
            :data:`GROWTH_LIMIT`. Integrals over a bounded support converge
            everywhere and pass ``False``.

    Raises:
        DivergenceError: If the guard is on and ``sum |terms|`` exceeds
            :data:`GROWTH_LIMIT`, or if the terms overflow.
    """
    points = np.asarray(points, dtype=complex)
    flat = points.ravel()
    weighted = np.asarray(weights) * np.asarray(values, dtype=complex)
    result = np.empty(flat.shape, dtype=complex)
    block = max(1, BLOCK_SIZE // max(1, len(nodes)))
    for start in range(0, len(flat), block):
        chunk = flat[start : start + block]
        with np.errstate(over="ignore", invalid="ignore"):
            terms = np.exp(sign * 1j * np.outer(chunk, nodes)) * weighted
            magnitude = np.sum(np.abs(terms), axis=1)
        diverging = ~np.isfinite(magnitude)
        if guard:
            diverging |= magnitude > GROWTH_LIMIT
        if np.any(diverging):
            point = chunk[np.argmax(diverging)]
            raise DivergenceError(
                f"Quadrature terms at {point} sum to "
                f"{magnitude[np.argmax(diverging)]:.3g} in magnitude, beyond "
                f"the growth limit {GROWTH_LIMIT:.0e}; the integrand does not "
                "decay at this point"
            )
        result[start : start + block] = prefactor * np.sum(terms, axis=1)
    return result.reshape(points.shape)


def _check_points(beta1: np.ndarray, beta2: np.ndarray) -> None:
    if not (np.all(np.isfinite(beta1)) and np.all(np.isfinite(beta2))):
        raise NonFiniteError("Evaluation points must be finite")


def fourier_components(
    function: SampledProductFunction,
    beta1: np.ndarray,
    beta2: np.ndarray,
    conv: TransformConvention,
    inverse: bool = False,
) -> Tuple[np.ndarray, np.ndarray]:
    """Transform both components at arrays of idempotent components."""
    _check_points(beta1, beta2)
    sign = -conv.sign if inverse else conv.sign
    prefactor = conv.inverse_prefactor if inverse else conv.forward_prefactor
    grid = function.grid
    return (
        scalar_transform(
            grid.nodes1,
            grid.weights1,
            function.values1,
            beta1,
            sign,
            prefactor,
        ),
        scalar_transform(
            grid.nodes2,
            grid.weights2,
            function.values2,
            beta2,
            sign,
            prefactor,
        ),
    )


def bicomplex_fourier(
    function: SampledProductFunction,
    out_points: Sequence[Bicomplex],
    conv: Optional[TransformConvention] = None,
) -> List[Bicomplex]:
    """Bicomplex Fourier transform of sampled ``F`` at each output point.

    Args:
        function: Samples on a real-line grid.
        out_points: Points ``Z``; complex points are allowed where the
            integrand decays.
        conv: Normalization, the analysis convention by default.

    Returns:
        ``F^(Z)`` per point.
    """
    conv = conv or TransformConvention()
    beta1, beta2 = idempotent_arrays(out_points)
    value1, value2 = fourier_components(function, beta1, beta2, conv)
    return from_idempotent_arrays(value1, value2)


def inverse_fourier(
    transformed: SampledProductFunction,
    out_points: Sequence[Bicomplex],
    conv: Optional[TransformConvention] = None,
) -> List[Bicomplex]:
    """Inverse transform (opposite sign, complementary prefactor)."""
    conv = conv or TransformConvention()
    beta1, beta2 = idempotent_arrays(out_points)
    value1, value2 = fourier_components(
        transformed, beta1, beta2, conv, inverse=True
    )
    return from_idempotent_arrays(value1, value2)


def fourier_samples(
    function: SampledProductFunction,
    frequency_grid: ProductGrid,
    conv: Optional[TransformConvention] = None,
    inverse: bool = False,
) -> SampledProductFunction:
    """The transform of ``function`` sampled on the real nodes of
    ``frequency_grid``."""
    conv = conv or TransformConvention()
    value1, value2 = fourier_components(
        function,
        frequency_grid.nodes1.astype(complex),
        frequency_grid.nodes2.astype(complex),
        conv,
        inverse=inverse,
    )
    return SampledProductFunction(frequency_grid, value1, value2)


def resolvable_bandwidth(grid: ProductGrid) -> Tuple[float, float]:
    """Per component, the frequency up to which the grid resolves
    ``exp(-i w t)``: 1.5 nodes per unit length."""
    bandwidths = []
    for nodes in grid.nodes:
        length = float(nodes[-1] - nodes[0])
        bandwidths.append(1.5 * len(nodes) / length)
    return bandwidths[0], bandwidths[1]


def default_frequency_grid(grid: ProductGrid) -> ProductGrid:
    """Gauss-Legendre grid on ``[-W, W]`` per component, ``W`` the
    resolvable bandwidth, with panels no wider than one and an even panel
    count so that ``0`` is a panel boundary."""
    rules = []
    for bandwidth in resolvable_bandwidth(grid):
        panels = max(16, math.ceil(2 * bandwidth))
        panels += panels % 2
        rules.append(
            gauss_legendre_rule(
                -bandwidth, bandwidth, panels * DEFAULT_PANEL_ORDER
            )
        )
    logger.debug(
        f"Frequency grid up to {resolvable_bandwidth(grid)} with "
        f"{len(rules[0])}, {len(rules[1])} nodes"
    )
    bandwidth = max(resolvable_bandwidth(grid))
    return ProductGrid.from_rules(
        rules[0],
        rules[1],
        interval=DInterval.symmetric(-bandwidth, bandwidth),
    )


def plancherel_check(
    function: SampledProductFunction,
    conv: Optional[TransformConvention] = None,
    frequency_grid: Optional[ProductGrid] = None,
) -> Tuple[Hyperbolic, Hyperbolic]:
    """Both sides of the Plancherel identity.

    Args:
        function: Square integrable samples.
        conv: Normalization of the transform.
        frequency_grid: Grid for the frequency-side integral; derived from
            the sampling density of ``function`` by default.

    Returns:
        ``(||F||^2, normalized ||F^||^2)`` as hyperbolic numbers.
    """
    conv = conv or TransformConvention()
    frequency_grid = frequency_grid or default_frequency_grid(function.grid)
    lhs = l2k_norm_squared(function)
    transformed = fourier_samples(function, frequency_grid, conv)
    rhs = l2k_norm_squared(transformed) * conv.plancherel_factor
    logger.debug(f"Plancherel: lhs {lhs}, rhs {rhs}")
    return lhs, rhs


def write_transform_csv(
    output: Union[str, Path, TextIO],
    points: Sequence[Bicomplex],
    values: Sequence[Bicomplex],
) -> None:
    """Write one row ``x0,x1,x2,x3,re_beta1,im_beta1,re_beta2,im_beta2``
    per output point."""
    if isinstance(output, (str, Path)):
        with open(output, "w", newline="") as csv_file:
            write_transform_csv(csv_file, points, values)
        return
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(TRANSFORM_CSV_HEADER)
    for point, value in zip(points, values):
        writer.writerow(
            [repr(float(x)) for x in point.coefficients]
            + [
                repr(value.beta1.real),
                repr(value.beta1.imag),
                repr(value.beta2.real),
                repr(value.beta2.imag),
            ]
        )
    logger.debug(f"Wrote {len(points)} transform values")
