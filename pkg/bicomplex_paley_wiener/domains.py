"""
Product-type domains, their quadrature grids and sampled product functions.

A product-type interval ``e I1 + e' I2`` is discretized by two independent
one-dimensional quadrature rules, one per idempotent component. Every
integral over such a domain (the D-integral, L2k norms, the ``dt (.) dt'``
pairings) is the componentwise pair of the two weighted sums.

Infinite bounds are truncated to ``[-T, T]`` (or ``[0, T]``, ``[-T, 0]``);
the truncation ``T`` and node count ``n`` are always explicit.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import (
    Any,
    Callable,
    Dict,
    Mapping,
    Optional,
    TextIO,
    Tuple,
    Union,
)

import numpy as np
from numpy.polynomial.legendre import leggauss

from bicomplex_paley_wiener.algebra import Bicomplex, Hyperbolic
from bicomplex_paley_wiener.exception import BadTruncationError, NonFiniteError
from bicomplex_paley_wiener.utils import get_setting_optional, parse_bound

logger = logging.getLogger(__name__)

DEFAULT_PANEL_ORDER = 16
SCHEMES = ("gauss_legendre", "trapezoid")
CSV_HEADER = ["t1", "f1_re", "f1_im", "t2", "f2_re", "f2_im"]

ComponentFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class DInterval:
    """Product-type interval ``e (i1_lo, i1_hi) + e' (i2_lo, i2_hi)``."""

    i1_lo: float
    i1_hi: float
    i2_lo: float
    i2_hi: float

    def __post_init__(self) -> None:
        for lo, hi, name in (
            (self.i1_lo, self.i1_hi, "first"),
            (self.i2_lo, self.i2_hi, "second"),
        ):
            if math.isnan(lo) or math.isnan(hi) or not lo < hi:
                raise ValueError(
                    f"Invalid {name} component interval ({lo}, {hi}): "
                    "lower bound must be smaller than upper bound"
                )

    @classmethod
    def symmetric(cls, lo: float, hi: float) -> DInterval:
        """The same interval in both components."""
        return cls(lo, hi, lo, hi)

    @classmethod
    def real_line(cls) -> DInterval:
        return cls.symmetric(-math.inf, math.inf)

    @classmethod
    def half_line(cls) -> DInterval:
        return cls.symmetric(0.0, math.inf)

    @property
    def components(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        return ((self.i1_lo, self.i1_hi), (self.i2_lo, self.i2_hi))

    @property
    def is_finite(self) -> bool:
        return all(
            math.isfinite(bound) for pair in self.components for bound in pair
        )

    def as_list(self) -> list:
        return [self.i1_lo, self.i1_hi, self.i2_lo, self.i2_hi]


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and weights of a one-dimensional quadrature."""

    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        nodes = _frozen(np.asarray(self.nodes, dtype=float))
        weights = _frozen(np.asarray(self.weights, dtype=float))
        if nodes.ndim != 1 or nodes.shape != weights.shape:
            raise ValueError(
                f"Nodes {nodes.shape} and weights {weights.shape} must be "
                "one-dimensional arrays of equal length"
            )
        if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(weights))):
            raise NonFiniteError("Quadrature nodes and weights must be finite")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("Quadrature nodes must be strictly increasing")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.nodes)

    def integrate(self, values: np.ndarray) -> complex:
        """Weighted sum in ascending node order (pairwise summation)."""
        return complex(np.sum(self.weights * values))


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array)
    array.setflags(write=False)
    return array


def gauss_legendre_rule(
    lo: float, hi: float, n: int, order: int = DEFAULT_PANEL_ORDER
) -> QuadratureRule:
    """Composite Gauss-Legendre rule with ``order``-node panels.

    ``n`` is rounded up to a whole number of panels; ``n <= order`` gives a
    single ``n``-node panel, exact for polynomials of degree ``2n - 1``.
    On an interval symmetric about zero the panel count is made even so
    that zero is a panel edge.
    """
    if n <= order:
        order, panels = n, 1
    else:
        panels = math.ceil(n / order)
        if lo == -hi:
            panels += panels % 2
    x, w = leggauss(order)
    edges = np.linspace(lo, hi, panels + 1)
    half = np.diff(edges) / 2
    middle = (edges[:-1] + edges[1:]) / 2
    nodes = (middle[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return QuadratureRule(nodes, weights)


def trapezoid_rule(lo: float, hi: float, n: int) -> QuadratureRule:
    nodes = np.linspace(lo, hi, n)
    return QuadratureRule(nodes, trapezoid_weights(nodes))


def trapezoid_weights(nodes: np.ndarray) -> np.ndarray:
    """Trapezoid weights for arbitrary increasing nodes."""
    steps = np.diff(nodes)
    weights = np.zeros(len(nodes))
    weights[:-1] += steps / 2
    weights[1:] += steps / 2
    return weights


def _truncate(
    lo: float, hi: float, truncation: Optional[float]
) -> Tuple[float, float]:
    if math.isfinite(lo) and math.isfinite(hi):
        return lo, hi
    if truncation is None or not truncation > 0:
        raise BadTruncationError(
            f"Interval ({lo}, {hi}) is infinite and needs a positive "
            f"truncation, got {truncation}"
        )
    lo = lo if math.isfinite(lo) else -truncation
    hi = hi if math.isfinite(hi) else truncation
    if not lo < hi:
        raise BadTruncationError(
            f"Truncation {truncation} leaves an empty interval ({lo}, {hi})"
        )
    return lo, hi


@dataclass(frozen=True, eq=False)
class ProductGrid:
    """Quadrature discretization of a product-type domain.

    The two weight sequences realize the hyperbolic measure
    ``m = e m1 + e' m2``; for Lebesgue measure they are the quadrature
    weights themselves.
    """

    nodes1: np.ndarray
    nodes2: np.ndarray
    weights1: np.ndarray
    weights2: np.ndarray
    truncation: Optional[float] = None
    scheme: str = "gauss_legendre"
    interval: Optional[DInterval] = None
    n: Optional[int] = None
    allow_signed: bool = False

    def __post_init__(self) -> None:
        rule1 = QuadratureRule(self.nodes1, self.weights1)
        rule2 = QuadratureRule(self.nodes2, self.weights2)
        if not self.allow_signed and (
            np.any(rule1.weights < 0) or np.any(rule2.weights < 0)
        ):
            raise ValueError(
                "Negative quadrature weights realize a signed measure; "
                "pass allow_signed=True to permit them"
            )
        object.__setattr__(self, "nodes1", rule1.nodes)
        object.__setattr__(self, "weights1", rule1.weights)
        object.__setattr__(self, "nodes2", rule2.nodes)
        object.__setattr__(self, "weights2", rule2.weights)

    @classmethod
    def from_rules(
        cls, rule1: QuadratureRule, rule2: QuadratureRule, **kwargs: Any
    ) -> ProductGrid:
        return cls(
            rule1.nodes, rule2.nodes, rule1.weights, rule2.weights, **kwargs
        )

    @property
    def rules(self) -> Tuple[QuadratureRule, QuadratureRule]:
        return (
            QuadratureRule(self.nodes1, self.weights1),
            QuadratureRule(self.nodes2, self.weights2),
        )

    @property
    def nodes(self) -> Tuple[np.ndarray, np.ndarray]:
        return (self.nodes1, self.nodes2)

    @property
    def weights(self) -> Tuple[np.ndarray, np.ndarray]:
        return (self.weights1, self.weights2)

    @property
    def config(self) -> Dict[str, Any]:
        """JSON-like description accepted by :func:`grid_from_config`."""
        interval = self.interval.as_list() if self.interval else None
        return {
            "interval": interval,
            "n": self.n if self.n is not None else len(self.nodes1),
            "scheme": self.scheme,
            "truncation": self.truncation,
        }

    def with_density(
        self,
        density1: ComponentFunction,
        density2: Optional[ComponentFunction] = None,
        allow_signed: bool = False,
    ) -> ProductGrid:
        """Reweight the grid by ``m = e rho1 dt + e' rho2 dt``."""
        density2 = density2 or density1
        return ProductGrid(
            self.nodes1,
            self.nodes2,
            self.weights1 * np.real(density1(self.nodes1)),
            self.weights2 * np.real(density2(self.nodes2)),
            truncation=self.truncation,
            scheme=self.scheme,
            interval=self.interval,
            n=self.n,
            allow_signed=allow_signed or self.allow_signed,
        )


def make_grid(
    interval: DInterval,
    n: int,
    scheme: str = "gauss_legendre",
    truncation: Optional[float] = None,
    panel_order: int = DEFAULT_PANEL_ORDER,
) -> ProductGrid:
    """Build the quadrature grid of a product-type interval.

    Args:
        interval: Domain, possibly with infinite bounds.
        n: Nodes per component (rounded up to whole panels for
            ``gauss_legendre``).
        scheme: ``gauss_legendre`` or ``trapezoid``.
        truncation: ``T`` replacing infinite bounds; ignored for finite
            intervals.
        panel_order: Nodes per Gauss-Legendre panel.

    Returns:
        The grid, identical for identical arguments.
    """
    if n < 2:
        raise ValueError(
            f"A grid needs at least 2 nodes per component, got {n}"
        )
    if scheme not in SCHEMES:
        raise ValueError(f"Unknown quadrature scheme '{scheme}'")
    rules = []
    for lo, hi in interval.components:
        lo, hi = _truncate(lo, hi, truncation)
        if scheme == "gauss_legendre":
            rules.append(gauss_legendre_rule(lo, hi, n, panel_order))
        else:
            rules.append(trapezoid_rule(lo, hi, n))
    logger.debug(
        f"Built {scheme} grid on {interval.as_list()} with {len(rules[0])} "
        f"nodes per component (truncation {truncation})"
    )
    effective_truncation = None if interval.is_finite else truncation
    return ProductGrid.from_rules(
        rules[0],
        rules[1],
        truncation=effective_truncation,
        scheme=scheme,
        interval=interval,
        n=n,
    )


def grid_from_config(config: Mapping[str, Any]) -> ProductGrid:
    """Build a grid from the keys ``interval``, ``n``, ``scheme`` and
    ``truncation``."""
    bounds = config.get("interval")
    if bounds is None or len(bounds) != 4:
        raise ValueError(
            "Grid config needs 'interval' as four bounds "
            "[i1_lo, i1_hi, i2_lo, i2_hi]"
        )
    n = get_setting_optional(config, "n")
    if n is None:
        raise ValueError("Grid config needs 'n'")
    return make_grid(
        DInterval(*(parse_bound(bound) for bound in bounds)),
        int(n),
        scheme=get_setting_optional(config, "scheme", "gauss_legendre"),
        truncation=get_setting_optional(config, "truncation"),
    )


@dataclass(frozen=True, eq=False)
class SampledProductFunction:
    """Samples of ``F = e F1 + e' F2`` on the nodes of a product grid."""

    grid: ProductGrid
    values1: np.ndarray
    values2: np.ndarray

    def __post_init__(self) -> None:
        values1 = _frozen(np.asarray(self.values1, dtype=complex))
        values2 = _frozen(np.asarray(self.values2, dtype=complex))
        if values1.shape != self.grid.nodes1.shape:
            raise ValueError(
                f"First component has {values1.shape} values for "
                f"{self.grid.nodes1.shape} nodes"
            )
        if values2.shape != self.grid.nodes2.shape:
            raise ValueError(
                f"Second component has {values2.shape} values for "
                f"{self.grid.nodes2.shape} nodes"
            )
        object.__setattr__(self, "values1", values1)
        object.__setattr__(self, "values2", values2)

    @classmethod
    def from_callables(
        cls,
        grid: ProductGrid,
        f1: ComponentFunction,
        f2: Optional[ComponentFunction] = None,
    ) -> SampledProductFunction:
        """Sample component functions on the grid; ``f2`` defaults to
        ``f1``."""
        f2 = f2 or f1
        return cls(
            grid,
            np.broadcast_to(f1(grid.nodes1), grid.nodes1.shape),
            np.broadcast_to(f2(grid.nodes2), grid.nodes2.shape),
        )

    @classmethod
    def zeros(cls, grid: ProductGrid) -> SampledProductFunction:
        return cls(
            grid, np.zeros(len(grid.nodes1)), np.zeros(len(grid.nodes2))
        )

    @classmethod
    def from_csv(cls, path: Union[str, Path]) -> SampledProductFunction:
        """Read samples written by :meth:`to_csv`.

        The weights are not stored; trapezoid weights are reconstructed from
        the nodes of each component.
        """
        columns: Dict[str, list] = {name: [] for name in CSV_HEADER}
        with open(path, newline="") as csv_file:
            reader = csv.DictReader(csv_file)
            if reader.fieldnames != CSV_HEADER:
                raise ValueError(
                    f"Invalid sample file {path}: expected header "
                    f"{','.join(CSV_HEADER)}, got {reader.fieldnames}"
                )
            for row in reader:
                for name in CSV_HEADER:
                    columns[name].append(float(row[name]))
        if len(columns["t1"]) < 2:
            raise ValueError(f"Sample file {path} needs at least two rows")
        arrays = {name: np.array(values) for name, values in columns.items()}
        grid = ProductGrid(
            arrays["t1"],
            arrays["t2"],
            trapezoid_weights(arrays["t1"]),
            trapezoid_weights(arrays["t2"]),
            scheme="trapezoid",
        )
        logger.info(
            f"Read {len(arrays['t1'])} samples per component from {path}"
        )
        return cls(
            grid,
            arrays["f1_re"] + 1j * arrays["f1_im"],
            arrays["f2_re"] + 1j * arrays["f2_im"],
        )

    def to_csv(self, output: Union[str, Path, TextIO]) -> None:
        """Write one row per node index with the header
        ``t1,f1_re,f1_im,t2,f2_re,f2_im``."""
        if len(self.values1) != len(self.values2):
            raise ValueError(
                "Sample files need the same node count in both components"
            )
        if isinstance(output, (str, Path)):
            with open(output, "w", newline="") as csv_file:
                self.to_csv(csv_file)
            return
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for t1, f1, t2, f2 in zip(
            self.grid.nodes1, self.values1, self.grid.nodes2, self.values2
        ):
            writer.writerow(
                [
                    repr(float(t1)),
                    repr(float(f1.real)),
                    repr(float(f1.imag)),
                    repr(float(t2)),
                    repr(float(f2.real)),
                    repr(float(f2.imag)),
                ]
            )

    @property
    def components(self) -> Tuple[np.ndarray, np.ndarray]:
        return (self.values1, self.values2)

    def is_finite(self) -> bool:
        return bool(
            np.all(np.isfinite(self.values1))
            and np.all(np.isfinite(self.values2))
        )

    def lp_norm_p(self, p: float = 2.0) -> Hyperbolic:
        """Componentwise ``int |F_i|^p dm_i``."""
        _check_finite(self)
        return Hyperbolic.from_idempotent(
            float(np.sum(self.grid.weights1 * np.abs(self.values1) ** p)),
            float(np.sum(self.grid.weights2 * np.abs(self.values2) ** p)),
        )

    def _same_grid(self, other: SampledProductFunction) -> None:
        if other.grid is self.grid:
            return
        if not all(
            np.array_equal(mine, theirs)
            for mine, theirs in zip(
                self.grid.nodes + self.grid.weights,
                other.grid.nodes + other.grid.weights,
            )
        ):
            raise ValueError("Sampled functions live on different grids")

    def __add__(self, other: object) -> SampledProductFunction:
        if not isinstance(other, SampledProductFunction):
            return NotImplemented
        self._same_grid(other)
        return SampledProductFunction(
            self.grid,
            self.values1 + other.values1,
            self.values2 + other.values2,
        )

    def __sub__(self, other: object) -> SampledProductFunction:
        if not isinstance(other, SampledProductFunction):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, scalar: object) -> SampledProductFunction:
        if not isinstance(scalar, (int, float, complex, np.number)):
            return NotImplemented
        return SampledProductFunction(
            self.grid, self.values1 * scalar, self.values2 * scalar
        )

    __rmul__ = __mul__

    def __neg__(self) -> SampledProductFunction:
        return self * -1.0


@dataclass(frozen=True)
class ProductFunction:
    """Analytic product-type function ``e f1(beta1) + e' f2(beta2)``.

    The components are vectorized complex callables acting on arrays of
    idempotent components.
    """

    f1: ComponentFunction
    f2: ComponentFunction
    name: str = field(default="F", compare=False)

    @classmethod
    def symmetric(
        cls, f: ComponentFunction, name: str = "F"
    ) -> ProductFunction:
        return cls(f, f, name)

    @classmethod
    def zero(cls) -> ProductFunction:
        return cls.symmetric(
            lambda beta: np.zeros(np.shape(beta), dtype=complex), "zero"
        )

    @property
    def components(self) -> Tuple[ComponentFunction, ComponentFunction]:
        return (self.f1, self.f2)

    def evaluate(
        self, beta1: np.ndarray, beta2: np.ndarray
    ) -> Tuple[np.ndarray, np.ndarray]:
        beta1 = np.asarray(beta1, dtype=complex)
        beta2 = np.asarray(beta2, dtype=complex)
        return (
            np.broadcast_to(
                np.asarray(self.f1(beta1), dtype=complex), beta1.shape
            ),
            np.broadcast_to(
                np.asarray(self.f2(beta2), dtype=complex), beta2.shape
            ),
        )

    def __call__(self, z: Bicomplex) -> Bicomplex:
        value1, value2 = self.evaluate(
            np.array([z.beta1]), np.array([z.beta2])
        )
        return Bicomplex.from_idempotent(value1[0], value2[0])

    def sample(self, grid: ProductGrid) -> SampledProductFunction:
        """Samples at the real nodes of ``grid`` (the line ``x0 + k x3``)."""
        value1, value2 = self.evaluate(grid.nodes1, grid.nodes2)
        return SampledProductFunction(grid, value1, value2)

    def conjugated(self) -> ProductFunction:
        """Componentwise complex conjugate; not holomorphic unless
        constant."""
        f1, f2 = self.f1, self.f2
        return ProductFunction(
            lambda beta: np.conj(f1(beta)),
            lambda beta: np.conj(f2(beta)),
            f"conj({self.name})",
        )


def _check_finite(function: SampledProductFunction) -> None:
    if not function.is_finite():
        raise NonFiniteError(
            "Sampled function contains NaN or infinite values"
        )


def d_integral(function: SampledProductFunction) -> Bicomplex:
    """D-integral ``e int F1 dm1 + e' int F2 dm2``.

    Raises:
        NonFiniteError: If a sample is NaN or infinite.
    """
    _check_finite(function)
    rule1, rule2 = function.grid.rules
    return Bicomplex.from_idempotent(
        rule1.integrate(function.values1), rule2.integrate(function.values2)
    )


def l2k_norm_squared(function: SampledProductFunction) -> Hyperbolic:
    """Hyperbolic squared L2k norm ``e int |F1|^2 dm1 + e' int |F2|^2 dm2``.

    Raises:
        NonFiniteError: If a sample is NaN or infinite.
    """
    return function.lp_norm_p(2.0)


def relative_l2k_error(
    approximation: SampledProductFunction, reference: SampledProductFunction
) -> Hyperbolic:
    """Componentwise ``||approximation - reference|| / ||reference||``.

    Components where the reference vanishes report the absolute error.
    """
    error = l2k_norm_squared(approximation - reference)
    norm = l2k_norm_squared(reference)
    components = [
        math.sqrt(e / r) if r > 0 else math.sqrt(e)
        for e, r in zip(error.components, norm.components)
    ]
    return Hyperbolic.from_idempotent(*components)


def in_upper_half_plane(z: Bicomplex) -> bool:
    """``x1 > |x2|``, i.e. both idempotent components have positive
    imaginary part."""
    return z.x1 > abs(z.x2)


def in_lower_half_plane(z: Bicomplex) -> bool:
    """``x1 < -|x2|``, i.e. both idempotent components have negative
    imaginary part."""
    return z.x1 < -abs(z.x2)
