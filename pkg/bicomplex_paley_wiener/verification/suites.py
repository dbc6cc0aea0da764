"""
Verification suites.

Each suite checks one family of identities numerically against closed-form
oracles and returns report rows. The density-driven suites (plancherel,
energy, recovery, contour) use the configured density; the others check
fixed closed-form examples.
"""

import logging
import math
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from bicomplex_paley_wiener.algebra import (
    E,
    E_DAGGER,
    ONE,
    Bicomplex,
    Comparison,
    Hyperbolic,
    conjugate_star,
    from_idempotent,
    hyperbolic_norm,
    leq_d,
    mul,
    to_idempotent,
)
from bicomplex_paley_wiener.cauchy import (
    BoundaryFunction,
    cauchy_integral,
    jump_identity_check,
    lower_half_plane_residual,
)
from bicomplex_paley_wiener.densities import (
    Density,
    exp_decay,
    indicator,
    rational_hardy,
    rational_hardy2,
)
from bicomplex_paley_wiener.domains import (
    DInterval,
    ProductFunction,
    ProductGrid,
    SampledProductFunction,
    l2k_norm_squared,
    make_grid,
    relative_l2k_error,
)
from bicomplex_paley_wiener.paley_wiener import (
    BandDensity,
    ContourRect,
    HalfPlaneDensity,
    HorizontalLine,
    band_synthesize,
    energy_profile,
    epsilon_damped_transform,
    exponential_type_bound,
    extension,
    omega_difference,
    ray_transform,
    recover,
    rectangle_contour_integral,
)
from bicomplex_paley_wiener.transform import (
    TransformConvention,
    bicomplex_fourier,
    plancherel_check,
)
from bicomplex_paley_wiener.verification.config import RunConfig

logger = logging.getLogger(__name__)

EPSILON = float(np.finfo(float).eps)
HALF_LINE_GRID = {"n": 4096, "truncation": 40.0}


@dataclass(frozen=True)
class CheckResult:
    """One report row: measured values per idempotent component against a
    bound."""

    test: str
    parameter: str
    component1_value: float
    component2_value: float
    bound: Optional[float] = None
    passed: bool = True

    @classmethod
    def at_most(
        cls, test: str, parameter: str, values: Sequence[float], bound: float
    ) -> "CheckResult":
        return cls(
            test,
            parameter,
            float(values[0]),
            float(values[1]),
            bound,
            bool(values[0] <= bound and values[1] <= bound),
        )

    @classmethod
    def at_least(
        cls, test: str, parameter: str, values: Sequence[float], bound: float
    ) -> "CheckResult":
        return cls(
            test,
            parameter,
            float(values[0]),
            float(values[1]),
            bound,
            bool(values[0] >= bound and values[1] >= bound),
        )

    @classmethod
    def info(
        cls, test: str, parameter: str, values: Sequence[float]
    ) -> "CheckResult":
        return cls(test, parameter, float(values[0]), float(values[1]))


Suite = Callable[[RunConfig], List[CheckResult]]
SUITE_FUNCTIONS: Dict[str, Suite] = {}


def suite(name: str) -> Callable[[Suite], Suite]:
    def register(function: Suite) -> Suite:
        SUITE_FUNCTIONS[name] = function
        return function

    return register


def run_suites(config: RunConfig) -> List[CheckResult]:
    rows: List[CheckResult] = []
    for name in config.selected_suites():
        logger.info(f"Running suite {name}...")
        start = time.perf_counter()
        results = SUITE_FUNCTIONS[name](config)
        failed = sum(not row.passed for row in results)
        logger.info(
            f"Finished suite {name} in {time.perf_counter() - start:.2f} s, "
            f"{len(results)} rows, {failed} failed"
        )
        rows.extend(results)
    return rows


def _real_line_grid(
    config: RunConfig, n: int, truncation: float
) -> ProductGrid:
    return make_grid(
        DInterval.real_line(), **config.grid_parameters(n, truncation)
    )


def _abs_error(
    values: Sequence[Bicomplex], expected: Sequence[Tuple[complex, complex]]
) -> Tuple[float, float]:
    errors1 = [abs(v.beta1 - e[0]) for v, e in zip(values, expected)]
    errors2 = [abs(v.beta2 - e[1]) for v, e in zip(values, expected)]
    return max(errors1, default=0.0), max(errors2, default=0.0)


def _random_bicomplex(rng: np.random.Generator, count: int) -> List[Bicomplex]:
    return [Bicomplex(*row) for row in rng.normal(size=(count, 4))]


@suite("algebra")
def algebra_suite(config: RunConfig) -> List[CheckResult]:
    """Ring isomorphism, idempotent identities, norm multiplicativity and
    the partial order on random values."""
    rng = np.random.default_rng(config.seed)
    count = 10_000
    left, right = _random_bicomplex(rng, count), _random_bicomplex(rng, count)

    ring_error = 0.0
    norm_error = [0.0, 0.0]
    round_trip_error = 0.0
    conjugate_error = 0.0
    for z, w in zip(left, right):
        cartesian, idempotent = z * w, mul(z, w)
        scale = sum(map(abs, z.coefficients)) * sum(map(abs, w.coefficients))
        deviation = max(
            abs(a - b)
            for a, b in zip(cartesian.coefficients, idempotent.coefficients)
        )
        ring_error = max(ring_error, deviation / scale)

        product = hyperbolic_norm(idempotent)
        nz, nw = hyperbolic_norm(z), hyperbolic_norm(w)
        expected = (nz.s1 * nw.s1, nz.s2 * nw.s2)
        magnitude = max(expected)
        for index in range(2):
            norm_error[index] = max(
                norm_error[index],
                abs(product.components[index] - expected[index]) / magnitude,
            )

        restored = from_idempotent(*to_idempotent(z))
        largest = max(map(abs, z.coefficients))
        round_trip_error = max(
            round_trip_error,
            max(
                abs(a - b)
                for a, b in zip(restored.coefficients, z.coefficients)
            )
            / largest,
        )

        conjugate = conjugate_star(z)
        if (
            conjugate_star(conjugate) != z
            or conjugate.beta1.imag != -z.beta1.imag
            or conjugate.beta2.imag != -z.beta2.imag
        ):
            conjugate_error += 1

    identities = [E * E - E, E_DAGGER * E_DAGGER - E_DAGGER, E * E_DAGGER]
    identities.append(E + E_DAGGER - ONE)
    identity_error = max(
        max(map(abs, value.coefficients)) for value in identities
    )

    order_violations = _order_violations(rng)

    ring_bound = config.tolerance("ring_isomorphism", 10 * EPSILON)
    return [
        CheckResult.at_most(
            "algebra", "ring_isomorphism", (ring_error, ring_error), ring_bound
        ),
        CheckResult.at_most(
            "algebra", "idempotent_identities", (identity_error,) * 2, 0.0
        ),
        CheckResult.at_most(
            "algebra",
            "norm_multiplicativity",
            norm_error,
            config.tolerance("norm_multiplicativity", 1e-12),
        ),
        CheckResult.at_most(
            "algebra",
            "idempotent_round_trip",
            (round_trip_error,) * 2,
            config.tolerance("idempotent_round_trip", 4 * EPSILON),
        ),
        CheckResult.at_most(
            "algebra", "conjugate_involution", (conjugate_error,) * 2, 0.0
        ),
        CheckResult.at_most(
            "algebra", "partial_order", (order_violations,) * 2, 0.0
        ),
    ]


def _order_violations(rng: np.random.Generator, count: int = 40) -> int:
    # integer components make ties and chains likely
    values = [
        Hyperbolic.from_idempotent(*pair)
        for pair in rng.integers(-3, 4, size=(count, 2)).astype(float)
    ]
    less = [[leq_d(a, b) is Comparison.TRUE for b in values] for a in values]
    violations = 0
    for i, a in enumerate(values):
        violations += not less[i][i]
        for j, b in enumerate(values):
            if less[i][j] and less[j][i] and a.components != b.components:
                violations += 1
            if less[i][j]:
                violations += sum(
                    less[j][k] and not less[i][k] for k in range(count)
                )
    return violations


@suite("fourier_example")
def fourier_example_suite(config: RunConfig) -> List[CheckResult]:
    """Transform of ``exp(-|t|)`` against ``2 / (1 + z^2)``, prefactor
    one."""
    density = exp_decay()
    grid = _real_line_grid(config, 2**14, 40.0)
    points = [Bicomplex(z) for z in np.linspace(-5, 5, 50)]
    values = bicomplex_fourier(
        density.sample(grid), points, TransformConvention.classical()
    )
    expected = [(2 / (1 + p.x0**2),) * 2 for p in points]
    return [
        CheckResult.at_most(
            "fourier_example",
            "max_abs_error",
            _abs_error(values, expected),
            config.tolerance("fourier_example", 1e-6),
        )
    ]


def _density_samples(
    config: RunConfig, grid: ProductGrid
) -> SampledProductFunction:
    if config.density_csv is not None:
        return config.load_samples()
    return config.resolve_density().sample(grid)


@suite("plancherel")
def plancherel_suite(config: RunConfig) -> List[CheckResult]:
    samples = _density_samples(config, _real_line_grid(config, 4096, 20.0))
    lhs, rhs = plancherel_check(samples, config.transform_convention)
    difference = [abs(a - b) for a, b in zip(lhs.components, rhs.components)]
    return [
        CheckResult.info("plancherel", "lhs", lhs.components),
        CheckResult.info("plancherel", "rhs", rhs.components),
        CheckResult.at_most(
            "plancherel",
            "difference",
            difference,
            config.tolerance("plancherel", 1e-6),
        ),
    ]


def _half_plane_inputs(
    config: RunConfig, closed_form: bool = False
) -> Tuple[SampledProductFunction, ProductFunction, Optional[Density]]:
    """Half-line density samples, their holomorphic extension and the
    named density, if any.

    The extension is the quadrature of the samples. ``closed_form`` takes
    the density's own extension where it has one, for lines sampled at
    frequencies the half-line grid does not resolve.
    """
    if config.density_csv is not None:
        samples = config.load_samples()
        return samples, extension(HalfPlaneDensity(samples)), None
    density = config.resolve_density()
    grid = make_grid(
        DInterval.half_line(), scheme="gauss_legendre", **HALF_LINE_GRID
    )
    samples = density.sample(grid)
    function = density.extension_function() if closed_form else None
    if function is None:
        if closed_form:
            logger.warning(
                f"No closed-form extension for {density.name}, "
                "using quadrature"
            )
        function = extension(HalfPlaneDensity(samples))
    return samples, function, density


@suite("energy")
def energy_suite(config: RunConfig) -> List[CheckResult]:
    """Line energies decrease away from the boundary and approach the
    density norm."""
    samples, function, density = _half_plane_inputs(config)
    norm = l2k_norm_squared(samples)
    x0_grid = _real_line_grid(config, 6400, 200.0)
    lines = [HorizontalLine(x1) for x1 in (1e-3, 1e-2, 1e-1)]
    profile = energy_profile(function, lines, x0_grid).sortby("x1")

    rows = [
        CheckResult.info("energy", f"x1={x1:g}", (e1, e2))
        for x1, e1, e2 in zip(
            profile.x1.values, profile.energy1.values, profile.energy2.values
        )
    ]
    supremum = (float(profile.energy1.max()), float(profile.energy2.max()))
    increase = (
        float(np.max(np.diff(profile.energy1.values))),
        float(np.max(np.diff(profile.energy2.values))),
    )
    rows += [
        CheckResult.info("energy", "density_norm", norm.components),
        CheckResult.at_most(
            "energy",
            "sup_to_norm",
            [abs(s - n) for s, n in zip(supremum, norm.components)],
            config.tolerance("energy", 1e-2),
        ),
        CheckResult.at_most(
            "energy",
            "sup_above_norm",
            [s - n for s, n in zip(supremum, norm.components)],
            1e-6,
        ),
        CheckResult.at_most("energy", "monotone_increase", increase, 0.0),
    ]
    oracle = density.extension_function() if density else None
    if oracle is not None:
        closed = energy_profile(oracle, lines, x0_grid).sortby("x1")
        difference = np.abs(profile - closed)
        rows.append(
            CheckResult.info(
                "energy",
                "closed_form_difference",
                (
                    float(difference.energy1.max()),
                    float(difference.energy2.max()),
                ),
            )
        )
    return rows


@suite("recovery")
def recovery_suite(config: RunConfig) -> List[CheckResult]:
    """Recover the density from the lines (1, 0) and (2, 0)."""
    samples, function, density = _half_plane_inputs(config, closed_form=True)
    x0_grid = _real_line_grid(config, 96_000, 3000.0)
    if density is not None:
        t_grid = make_grid(DInterval.symmetric(0.5, 10.0), 320)
        reference = density.sample(t_grid)
    else:
        t_grid, reference = samples.grid, samples
    negative_grid = make_grid(DInterval.symmetric(-10.0, -0.5), 320)
    tolerance = config.tolerance("recovery", 1e-4)

    rows = []
    recovered = []
    for line in (HorizontalLine(1.0), HorizontalLine(2.0)):
        parameter = f"line=({line.x1:g},{line.x2:g})"
        result = recover(function, line, t_grid, x0_grid)
        recovered.append(result)
        rows.append(
            CheckResult.at_most(
                "recovery",
                f"{parameter} relative_error",
                relative_l2k_error(result, reference).components,
                tolerance,
            )
        )
        negative = recover(function, line, negative_grid, x0_grid)
        rows.append(
            CheckResult.at_most(
                "recovery",
                f"{parameter} negative_t_max",
                (
                    float(np.max(np.abs(negative.values1))),
                    float(np.max(np.abs(negative.values2))),
                ),
                tolerance,
            )
        )
    rows.append(
        CheckResult.at_most(
            "recovery",
            "line_independence",
            relative_l2k_error(recovered[1], recovered[0]).components,
            tolerance,
        )
    )
    return rows


@suite("contour")
def contour_suite(config: RunConfig) -> List[CheckResult]:
    """Rectangle integrals of the extension vanish; those of its conjugate
    do not."""
    samples, function, _ = _half_plane_inputs(config)
    tolerance = config.tolerance("contour", 1e-6)
    rows = []
    for alpha in (2.0, 5.0):
        rect = ContourRect(alpha, 2.0)
        value = rectangle_contour_integral(function, 1.0, rect)
        rows.append(
            CheckResult.at_most(
                "contour",
                f"alpha={alpha:g}",
                (abs(value.beta1), abs(value.beta2)),
                tolerance,
            )
        )
    norm = l2k_norm_squared(samples)
    if norm.s1 > 0 and norm.s2 > 0:
        control = rectangle_contour_integral(
            function.conjugated(), 1.0, ContourRect(5.0, 2.0)
        )
        rows.append(
            CheckResult.at_least(
                "contour",
                "conjugate_control",
                (abs(control.beta1), abs(control.beta2)),
                config.tolerance("contour_control", 1e-3),
            )
        )
    else:
        logger.info("Zero density: skipping the conjugate contour control")
    return rows


def _band_density(A: float, n: int = 128) -> BandDensity:
    grid = make_grid(DInterval.symmetric(-A, A), n)
    return BandDensity(indicator(A).sample(grid), A)


@suite("exponential_type")
def exponential_type_suite(config: RunConfig) -> List[CheckResult]:
    """Indicator of ``(-A, A)``: the synthesis is ``2 sin(A Z) / Z`` and of
    exponential type ``A``."""
    A = config.band
    density = _band_density(A)
    oracle = indicator(A).transform
    assert oracle is not None
    bound = exponential_type_bound(density)
    rng = np.random.default_rng(config.seed)

    cloud = []
    for _ in range(100):
        radius = rng.uniform(0, 10, size=2)
        angle = rng.uniform(0, 2 * np.pi, size=2)
        beta = radius * np.exp(1j * angle)
        cloud.append(from_idempotent(beta[0], beta[1]))
    failures = sum(bound.check(z) is not Comparison.TRUE for z in cloud)

    points = []
    for _ in range(20):
        beta = rng.uniform(-5, 5, size=2) + 1j * rng.uniform(-5, 5, size=2)
        points.append(from_idempotent(beta[0], beta[1]))
    values = [band_synthesize(density, z) for z in points]
    expected = [
        (complex(oracle(-z.beta1)), complex(oracle(-z.beta2))) for z in points
    ]
    closed_form_constant = 2 * math.sqrt(2) * A
    return [
        CheckResult.at_most(
            "exponential_type",
            "constant_error",
            (abs(bound.constant - closed_form_constant),) * 2,
            1e-12,
        ),
        CheckResult.at_most(
            "exponential_type", "bound_failures", (failures,) * 2, 0.0
        ),
        CheckResult.at_most(
            "exponential_type",
            "synthesis_error",
            _abs_error(values, expected),
            config.tolerance("exponential_type", 1e-8),
        ),
    ]


def _damped_oracle(t: float, eps: float) -> float:
    return 2 * (math.atan((1 + t) / eps) + math.atan((1 - t) / eps))


@suite("damping")
def damping_suite(config: RunConfig) -> List[CheckResult]:
    """Damped transforms of ``2 sin(s) / s`` vanish outside the band as the
    damping goes to zero."""
    boundary_function = ProductFunction.symmetric(
        lambda s: 2 * np.sinc(np.asarray(s, dtype=complex) / np.pi), "sinc"
    )
    grid = _real_line_grid(config, 128_000, 4000.0)
    boundary = boundary_function.sample(grid)
    outside, inside = Hyperbolic(3.0), Hyperbolic(0.5)

    rows = []
    magnitudes = []
    oracle_error = [0.0, 0.0]
    for eps in (0.1, 0.03, 0.01):
        value = epsilon_damped_transform(boundary, Hyperbolic(eps), outside)
        components = (abs(value.beta1), abs(value.beta2))
        magnitudes.append(components)
        rows.append(CheckResult.info("damping", f"eps={eps:g}", components))
        expected = _damped_oracle(3.0, eps)
        oracle_error = [
            max(error, abs(component - expected))
            for error, component in zip(
                oracle_error, (value.beta1, value.beta2)
            )
        ]
    steps = np.diff(np.array(magnitudes), axis=0)
    rows += [
        CheckResult.at_most(
            "damping", "oracle_error", oracle_error, 1e-6
        ),
        CheckResult.at_most(
            "damping", "magnitude_increase", np.max(steps, axis=0), -1e-15
        ),
        CheckResult.at_most(
            "damping",
            "final_magnitude",
            magnitudes[-1],
            config.tolerance("damping", 1e-2),
        ),
    ]

    control = epsilon_damped_transform(boundary, Hyperbolic(0.01), inside)
    rows.append(
        CheckResult.at_least(
            "damping",
            "in_band_control",
            (abs(control.beta1), abs(control.beta2)),
            1.0,
        )
    )

    u_grid = make_grid(DInterval.half_line(), 64_000, truncation=4000.0)
    difference = omega_difference(
        boundary_function, Hyperbolic(0.1), outside, u_grid
    )
    damped = epsilon_damped_transform(boundary, Hyperbolic(0.1), outside)
    rows.append(
        CheckResult.at_most(
            "damping",
            "ray_difference",
            (
                abs(difference.beta1 - damped.beta1),
                abs(difference.beta2 - damped.beta2),
            ),
            1e-6,
        )
    )
    return rows


@suite("cauchy")
def cauchy_suite(config: RunConfig) -> List[CheckResult]:
    """Reproduction, vanishing and jump identity for two rational Hardy
    functions."""
    rng = np.random.default_rng(config.seed)
    grid = _real_line_grid(config, 32_000, 1000.0)
    tolerance = config.tolerance("cauchy", 1e-4)

    def cloud(low: float, high: float) -> List[Bicomplex]:
        real = rng.uniform(-5, 5, size=(20, 2))
        imag = rng.uniform(low, high, size=(20, 2))
        beta = real + 1j * imag
        return [from_idempotent(b[0], b[1]) for b in beta]

    upper, lower = cloud(0.5, 5.0), cloud(-5.0, -0.5)
    rows = []
    for density in (rational_hardy(), rational_hardy2()):
        reference = density.holomorphic_function()
        assert reference is not None
        boundary = BoundaryFunction(density.sample(grid), reference=reference)
        values = [cauchy_integral(boundary, z) for z in upper]
        expected = [(reference(z).beta1, reference(z).beta2) for z in upper]
        jumps = [jump_identity_check(boundary, z) for z in upper]
        jump_error = _abs_error(
            [lhs for lhs, _ in jumps],
            [(rhs.beta1, rhs.beta2) for _, rhs in jumps],
        )
        rows += [
            CheckResult.at_most(
                "cauchy",
                f"{density.name} reproduction",
                _abs_error(values, expected),
                tolerance,
            ),
            CheckResult.at_most(
                "cauchy",
                f"{density.name} vanishing",
                lower_half_plane_residual(boundary, lower).components,
                tolerance,
            ),
            CheckResult.at_most(
                "cauchy", f"{density.name} jump", jump_error, 2 * tolerance
            ),
        ]
    return rows


@suite("ray")
def ray_suite(config: RunConfig) -> List[CheckResult]:
    """Ray transforms along the real axis against Laplace transforms."""
    u_grid = make_grid(
        DInterval.half_line(), **config.grid_parameters(1920, 60.0)
    )
    decaying = ProductFunction.symmetric(
        lambda beta: np.exp(-np.asarray(beta, dtype=complex)), "exp(-x)"
    )
    points = [Bicomplex(w) for w in np.linspace(0.5, 5.0, 10)]
    values = [ray_transform(decaying, 0.0, w, u_grid) for w in points]
    expected = [(1 / (w.x0 + 1),) * 2 for w in points]

    growing = ProductFunction.symmetric(
        lambda beta: np.exp(np.asarray(beta, dtype=complex)), "exp(x)"
    )
    reflected = ray_transform(growing, math.pi, Bicomplex(-1.0), u_grid)
    tolerance = config.tolerance("ray", 1e-6)
    return [
        CheckResult.at_most(
            "ray",
            "alpha=0 laplace_error",
            _abs_error(values, expected),
            tolerance,
        ),
        CheckResult.at_most(
            "ray",
            "alpha=pi reflected_error",
            (abs(reflected.beta1 + 0.5), abs(reflected.beta2 + 0.5)),
            tolerance,
        ),
    ]
