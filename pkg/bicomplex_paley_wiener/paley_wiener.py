"""
Paley-Wiener operators on the bicomplex upper half-plane.

A density supported on the half-line ``(0, inf)`` extends to a holomorphic
function on the upper half-plane through ``F(Z) = int f(t) exp(i t Z) dt``;
a density supported on a band ``(-A, A)`` extends to an entire function of
exponential type. This module evaluates both extensions, their line
energies, the recovery of the density from a single horizontal line, and
the contour and ray integrals used to verify holomorphy and the
exponential type numerically.

All operators act componentwise on the idempotent components of ``Z``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import xarray as xr
from numpy.polynomial.legendre import leggauss

from bicomplex_paley_wiener.algebra import (
    Bicomplex,
    Comparison,
    Hyperbolic,
    hyperbolic_norm,
    leq_d,
)
from bicomplex_paley_wiener.domains import (
    ComponentFunction,
    ProductFunction,
    ProductGrid,
    SampledProductFunction,
    in_upper_half_plane,
    l2k_norm_squared,
)
from bicomplex_paley_wiener.exception import DivergenceError, OutOfDomainError
from bicomplex_paley_wiener.transform import GROWTH_LIMIT, scalar_transform

logger = logging.getLogger(__name__)

CONTOUR_NODES = 256
# window scale as a fraction of the x0 grid half-width
WINDOW_FRACTION = 1 / 6


@dataclass(frozen=True, eq=False)
class HalfPlaneDensity:
    """Density supported on ``(0, inf)`` in both components."""

    samples: SampledProductFunction

    def __post_init__(self) -> None:
        grid = self.samples.grid
        if np.any(grid.nodes1 <= 0) or np.any(grid.nodes2 <= 0):
            raise ValueError(
                "Half-plane density nodes must all be positive; use an open "
                "rule such as gauss_legendre on (0, T)"
            )
        norm = l2k_norm_squared(self.samples)
        if not all(math.isfinite(c) for c in norm.components):
            raise ValueError("Half-plane density must have a finite L2k norm")

    @property
    def grid(self) -> ProductGrid:
        return self.samples.grid


@dataclass(frozen=True, eq=False)
class BandDensity:
    """Density supported on ``(-A, A)`` in both components."""

    samples: SampledProductFunction
    A: float

    def __post_init__(self) -> None:
        if not self.A > 0:
            raise ValueError(f"Band limit A must be positive, got {self.A}")
        grid = self.samples.grid
        if np.any(np.abs(grid.nodes1) >= self.A) or np.any(
            np.abs(grid.nodes2) >= self.A
        ):
            raise ValueError(
                f"Band density nodes must lie inside (-{self.A}, {self.A})"
            )
        norm = l2k_norm_squared(self.samples)
        if not all(math.isfinite(c) for c in norm.components):
            raise ValueError("Band density must have a finite L2k norm")

    @property
    def grid(self) -> ProductGrid:
        return self.samples.grid


@dataclass(frozen=True)
class HorizontalLine:
    """The line ``{x0 + i x1 + j x2 + k x3}`` at fixed heights ``x1, x2``.

    In idempotent components it is the pair of complex lines
    ``Im beta1 = x1 - x2`` and ``Im beta2 = x1 + x2``.
    """

    x1: float
    x2: float = 0.0

    def __post_init__(self) -> None:
        if not self.x1 > abs(self.x2):
            raise OutOfDomainError(
                f"Line (x1={self.x1}, x2={self.x2}) is not in the upper "
                "half-plane: need x1 > |x2|"
            )

    @property
    def heights(self) -> Tuple[float, float]:
        return (self.x1 - self.x2, self.x1 + self.x2)


@dataclass(frozen=True)
class ContourRect:
    """Rectangle with vertices ``-alpha + i``, ``alpha + i``,
    ``alpha + i y`` and ``-alpha + i y`` in each idempotent component."""

    alpha: float
    y: float

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise ValueError(
                f"Contour width alpha must be positive, got {self.alpha}"
            )
        if not self.y > 1:
            raise ValueError(
                f"Contour top height y must exceed 1, got {self.y}"
            )

    @property
    def vertices(self) -> Tuple[complex, complex, complex, complex]:
        return (
            complex(-self.alpha, 1.0),
            complex(self.alpha, 1.0),
            complex(self.alpha, self.y),
            complex(-self.alpha, self.y),
        )


@dataclass(frozen=True, eq=False)
class ExponentialTypeBound:
    """``||F(Z)||_k <= C exp(A ||Z||_k)`` for a band-limited synthesis."""

    density: BandDensity
    constant: float

    def rhs(self, z: Bicomplex) -> Hyperbolic:
        norm = hyperbolic_norm(z)
        return (norm * self.density.A).exp() * self.constant

    def check(self, z: Bicomplex) -> Comparison:
        value = band_synthesize(self.density, z)
        return leq_d(hyperbolic_norm(value), self.rhs(z))


def kernel_norm(t: float, z: Bicomplex) -> Hyperbolic:
    """``||exp(i t Z)||_k = e exp(-t (x1 - x2)) + e' exp(-t (x1 + x2))``."""
    return Hyperbolic.from_idempotent(
        math.exp(-t * (z.x1 - z.x2)), math.exp(-t * (z.x1 + z.x2))
    )


def _extension_components(
    samples: SampledProductFunction,
    beta1: np.ndarray,
    beta2: np.ndarray,
    guard: bool = True,
) -> Tuple[np.ndarray, np.ndarray]:
    grid = samples.grid
    return (
        scalar_transform(
            grid.nodes1, grid.weights1, samples.values1, beta1, 1, 1.0, guard
        ),
        scalar_transform(
            grid.nodes2, grid.weights2, samples.values2, beta2, 1, 1.0, guard
        ),
    )


def extend(density: HalfPlaneDensity, z: Bicomplex) -> Bicomplex:
    """Half-plane extension ``F(Z) = int_0^inf f(t) exp(i t Z) dt``.

    Raises:
        OutOfDomainError: If ``z`` is not in the upper half-plane.
    """
    if not in_upper_half_plane(z):
        raise OutOfDomainError(f"{z} is not in the upper half-plane")
    value1, value2 = _extension_components(
        density.samples, np.array([z.beta1]), np.array([z.beta2])
    )
    return Bicomplex.from_idempotent(value1[0], value2[0])


def _half_plane_component(
    nodes: np.ndarray, weights: np.ndarray, values: np.ndarray
) -> ComponentFunction:
    def f(beta: np.ndarray) -> np.ndarray:
        beta = np.asarray(beta, dtype=complex)
        if np.any(beta.imag <= 0):
            raise OutOfDomainError(
                "Half-plane extension needs Im(beta) > 0 in every component"
            )
        return scalar_transform(nodes, weights, values, beta, 1, 1.0)

    return f


def extension(density: HalfPlaneDensity) -> ProductFunction:
    """:func:`extend` as a vectorized product function."""
    grid, samples = density.grid, density.samples
    return ProductFunction(
        _half_plane_component(grid.nodes1, grid.weights1, samples.values1),
        _half_plane_component(grid.nodes2, grid.weights2, samples.values2),
        "extension",
    )


def line_restriction(
    function: ProductFunction, line: HorizontalLine, x0_grid: ProductGrid
) -> SampledProductFunction:
    """Samples of ``F`` along a horizontal line; the grid nodes are the
    real parts of the idempotent components."""
    height1, height2 = line.heights
    value1, value2 = function.evaluate(
        x0_grid.nodes1 + 1j * height1, x0_grid.nodes2 + 1j * height2
    )
    return SampledProductFunction(x0_grid, value1, value2)


def horizontal_line_energy(
    function: ProductFunction, line: HorizontalLine, x0_grid: ProductGrid
) -> Hyperbolic:
    """``(1 / 2 pi) int ||F||_k^2 dx0`` along ``line``, componentwise."""
    restriction = line_restriction(function, line, x0_grid)
    return l2k_norm_squared(restriction) * (1 / (2 * math.pi))


def energy_profile(
    function: ProductFunction,
    lines: Sequence[HorizontalLine],
    x0_grid: ProductGrid,
) -> xr.Dataset:
    """Line energies over a sweep of lines, indexed by a ``line``
    dimension with ``x1`` and ``x2`` coordinates."""
    if not lines:
        raise ValueError("Energy profile needs at least one line")
    energies = [
        horizontal_line_energy(function, line, x0_grid) for line in lines
    ]
    return xr.Dataset(
        {
            "energy1": ("line", [energy.s1 for energy in energies]),
            "energy2": ("line", [energy.s2 for energy in energies]),
        },
        coords={
            "x1": ("line", [line.x1 for line in lines]),
            "x2": ("line", [line.x2 for line in lines]),
        },
    )


def sup_energy(
    function: ProductFunction,
    lines: Sequence[HorizontalLine],
    x0_grid: ProductGrid,
) -> Hyperbolic:
    """Componentwise supremum of the line energies over ``lines``."""
    profile = energy_profile(function, lines, x0_grid)
    return Hyperbolic.from_idempotent(
        float(profile.energy1.max()), float(profile.energy2.max())
    )


def recover(
    function: ProductFunction,
    line: HorizontalLine,
    t_grid: ProductGrid,
    x0_grid: ProductGrid,
    window: bool = True,
    window_scale: Optional[float] = None,
) -> SampledProductFunction:
    """Recover the density from the restriction of ``F`` to one line.

    Per component, ``f(t) = exp(t h) (1 / 2 pi) int F(s + i h) exp(-i t s)
    ds`` with ``h`` the line height of that component.

    Args:
        function: Holomorphic extension of the density.
        line: Line in the upper half-plane.
        t_grid: Points at which to recover the density.
        x0_grid: Symmetric grid for the integral over ``s``.
        window: Apodize the ``s`` integral with ``exp(-(s / L)^2)``; the
            weight ``exp(t h)`` amplifies truncation errors exponentially
            in ``t`` without it.
        window_scale: ``L``, one sixth of the grid half-width by default.

    Returns:
        The recovered density on ``t_grid``.
    """
    restriction = line_restriction(function, line, x0_grid)
    recovered = []
    for nodes, weights, values, t, height in zip(
        x0_grid.nodes,
        x0_grid.weights,
        restriction.components,
        t_grid.nodes,
        line.heights,
    ):
        if window:
            scale = window_scale or WINDOW_FRACTION * float(
                np.max(np.abs(nodes))
            )
            values = values * np.exp(-((nodes / scale) ** 2))
            logger.debug(f"Recovery window scale {scale:.4g}")
        transformed = scalar_transform(
            nodes, weights, values, t.astype(complex), -1, 1 / (2 * math.pi)
        )
        recovered.append(np.exp(t * height) * transformed)
    return SampledProductFunction(t_grid, recovered[0], recovered[1])


def rectangle_contour_integral(
    function: ProductFunction,
    t: float,
    rect: ContourRect,
    nodes_per_edge: int = CONTOUR_NODES,
) -> Bicomplex:
    """``oint F(beta) exp(-i t beta) d beta`` around ``rect`` per
    component, counterclockwise, with Gauss-Legendre nodes on each edge."""
    x, w = leggauss(nodes_per_edge)
    vertices = rect.vertices
    totals = [0j, 0j]
    for start, end in zip(vertices, vertices[1:] + vertices[:1]):
        half = (end - start) / 2
        points = (start + end) / 2 + half * x
        value1, value2 = function.evaluate(points, points)
        kernel = np.exp(-1j * t * points)
        totals[0] += complex(np.sum(w * value1 * kernel)) * half
        totals[1] += complex(np.sum(w * value2 * kernel)) * half
    return Bicomplex.from_idempotent(totals[0], totals[1])


def _band_components(
    density: BandDensity, beta1: np.ndarray, beta2: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    # entire in Z: no growth guard
    return _extension_components(density.samples, beta1, beta2, guard=False)


def band_synthesize(density: BandDensity, z: Bicomplex) -> Bicomplex:
    """Entire extension ``F(Z) = int_{-A}^{A} f(t) exp(i t Z) dt``."""
    value1, value2 = _band_components(
        density, np.array([z.beta1]), np.array([z.beta2])
    )
    return Bicomplex.from_idempotent(value1[0], value2[0])


def band_function(density: BandDensity) -> ProductFunction:
    """:func:`band_synthesize` as a vectorized product function."""
    return ProductFunction(
        lambda beta: _band_components(density, beta, beta)[0],
        lambda beta: _band_components(density, beta, beta)[1],
        "band",
    )


def exponential_type_bound(density: BandDensity) -> ExponentialTypeBound:
    """Exponential-type constant ``C = sqrt(2) max_i int |f_i| dt``."""
    l1 = density.samples.lp_norm_p(1.0)
    constant = math.sqrt(2) * l1.max_component()
    logger.debug(f"Exponential type constant {constant:.6g} for A={density.A}")
    return ExponentialTypeBound(density, constant)


def epsilon_damped_transform(
    boundary: SampledProductFunction, eps: Hyperbolic, t: Hyperbolic
) -> Bicomplex:
    """``int F(s) exp(-eps |s|) exp(-i t s) ds`` per component, with ``F``
    sampled on the line ``x0 + k x3``."""
    if not (eps.s1 > 0 and eps.s2 > 0):
        raise ValueError(f"Damping {eps} must be positive in both components")
    grid = boundary.grid
    values = []
    for nodes, weights, samples, damping, frequency in zip(
        grid.nodes,
        grid.weights,
        boundary.components,
        eps.components,
        t.components,
    ):
        damped = samples * np.exp(-damping * np.abs(nodes))
        values.append(
            scalar_transform(
                nodes,
                weights,
                damped,
                np.array([frequency], dtype=complex),
                -1,
                1.0,
            )[0]
        )
    return Bicomplex.from_idempotent(values[0], values[1])


def ray_transform(
    function: ProductFunction,
    alpha: float,
    w: Bicomplex,
    u_grid: ProductGrid,
    bound: float = 0.0,
) -> Bicomplex:
    """``int_0^inf F(u e^{i alpha}) exp(-W u e^{i alpha}) e^{i alpha} du``
    per component.

    Args:
        function: Function evaluated along the ray.
        alpha: Ray direction.
        w: Transform variable; ``Re(W_i e^{i alpha}) > bound`` is required
            in both components.
        u_grid: Grid on the truncated half-line ``(0, T)``.
        bound: Exponential type of ``function`` along the ray.

    Raises:
        OutOfDomainError: If ``w`` violates the half-plane condition.
        DivergenceError: If the terms exceed the growth limit.
    """
    direction = complex(math.cos(alpha), math.sin(alpha))
    values = []
    for nodes, weights, beta, f in zip(
        u_grid.nodes, u_grid.weights, (w.beta1, w.beta2), function.components
    ):
        if not (beta * direction).real > bound:
            raise OutOfDomainError(
                f"Ray transform at alpha={alpha} needs Re(W e^(i alpha)) > "
                f"{bound}, got {(beta * direction).real}"
            )
        points = nodes * direction
        with np.errstate(over="ignore", invalid="ignore"):
            terms = weights * f(points) * np.exp(-beta * points) * direction
        magnitude = float(np.sum(np.abs(terms)))
        if not magnitude <= GROWTH_LIMIT:
            raise DivergenceError(
                f"Ray transform terms sum to {magnitude:.3g} in magnitude"
            )
        values.append(complex(np.sum(terms)))
    return Bicomplex.from_idempotent(values[0], values[1])


def omega_difference(
    function: ProductFunction,
    eps: Hyperbolic,
    t: Hyperbolic,
    u_grid: ProductGrid,
) -> Bicomplex:
    """``Omega_0(eps + i t) - Omega_pi(-eps + i t)``, which equals the
    damped transform of ``F`` on the real line."""
    forward = Bicomplex.from_idempotent(
        complex(eps.s1, t.s1), complex(eps.s2, t.s2)
    )
    backward = Bicomplex.from_idempotent(
        complex(-eps.s1, t.s1), complex(-eps.s2, t.s2)
    )
    return ray_transform(function, 0.0, forward, u_grid) - ray_transform(
        function, math.pi, backward, u_grid
    )
