"""
Command-line interface for the bicomplex Paley-Wiener toolkit.
"""

import contextlib
import functools
import logging
import sys
from typing import (
    Any,
    Callable,
    Dict,
    Iterator,
    List,
    Optional,
    TextIO,
    Tuple,
)

import click
from click.core import ParameterSource
from rich.console import Console

from bicomplex_paley_wiener.algebra import Bicomplex
from bicomplex_paley_wiener.cauchy import BoundaryFunction, cauchy_integral
from bicomplex_paley_wiener.domains import (
    SCHEMES,
    DInterval,
    ProductFunction,
    SampledProductFunction,
    make_grid,
)
from bicomplex_paley_wiener.exception import BicomplexError
from bicomplex_paley_wiener.paley_wiener import (
    BandDensity,
    HalfPlaneDensity,
    HorizontalLine,
    band_synthesize,
    exponential_type_bound,
    extend,
    extension,
    recover,
)
from bicomplex_paley_wiener.transform import (
    bicomplex_fourier,
    write_transform_csv,
)
from bicomplex_paley_wiener.utils import format_complex
from bicomplex_paley_wiener.verification.config import SUITES, RunConfig
from bicomplex_paley_wiener.verification.report import (
    render_summary,
    write_report,
)
from bicomplex_paley_wiener.verification.suites import run_suites

logger = logging.getLogger(__name__)

# options that configure the invocation rather than the run
INVOCATION_OPTIONS = ("config_file", "verbose")


class RunError(click.ClickException):
    """Invalid run: the library rejected the configured computation."""

    exit_code = 2


def parse_tolerances(tolerances: Tuple[str, ...]) -> Dict[str, float]:
    """Convert --tolerance args into a mapping of check name to tolerance.

    Args:
        tolerances: Tuple of cli arguments like 'plancherel=1e-8'.

    Returns:
        Dictionary containing mapping from check name to tolerance.
    """
    tolerance_dict = {}
    for tolerance_arg in tolerances:
        if "=" not in tolerance_arg:
            raise click.BadParameter(
                f"Invalid tolerance '{tolerance_arg}'. "
                "Expected input to be in the format name=value"
            )
        name, value = tolerance_arg.split("=", 1)
        try:
            tolerance_dict[name.strip()] = float(value)
        except ValueError:
            raise click.BadParameter(
                f"Tolerance '{name.strip()}' has a non-numeric value "
                f"'{value}'"
            )
    return tolerance_dict


def parse_points(points: List[str]) -> List[Bicomplex]:
    try:
        return [Bicomplex.parse(point) for point in points]
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--z")


def build_config(ctx: click.Context, command: str) -> RunConfig:
    """Merge the --config file with explicitly given flags; flags win."""
    config_file = ctx.params.get("config_file")
    try:
        settings: Dict[str, Any] = (
            RunConfig.load_file(config_file) if config_file else {}
        )
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"Cannot read configuration: {exc}")
    for name, value in ctx.params.items():
        if name in INVOCATION_OPTIONS:
            continue
        if ctx.get_parameter_source(name) in (ParameterSource.DEFAULT, None):
            continue
        if name == "tolerances":
            value = {
                **settings.get("tolerances", {}),
                **parse_tolerances(value),
            }
        elif name == "points":
            value = list(value)
        settings[name] = value
    settings["command"] = command
    try:
        config = RunConfig.from_mapping(settings)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    logger.debug(f"Run configuration: {config.param.values()}")
    return config


def run_command(function: Callable[..., None]) -> Callable[..., None]:
    """Set up logging, build the config and map library errors to exit
    status 2."""

    @functools.wraps(function)
    def wrapper(ctx: click.Context, **kwargs: Any) -> None:
        logging.basicConfig(
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            level=logging.DEBUG if kwargs.get("verbose") else logging.INFO,
        )
        config = build_config(ctx, ctx.command.name or "")
        try:
            function(config)
        except (BicomplexError, ValueError, OSError) as exc:
            raise RunError(str(exc)) from exc

    return click.pass_context(wrapper)


def run_options(function: Callable[..., None]) -> Callable[..., None]:
    options = [
        click.option(
            "--config",
            "config_file",
            type=click.Path(exists=True, dir_okay=False),
            help="JSON configuration file; explicit flags override it.",
        ),
        click.option("--n", type=int, help="Nodes per component."),
        click.option(
            "--T",
            "--truncation",
            "truncation",
            type=float,
            help="Truncation T of infinite integration bounds.",
        ),
        click.option("--scheme", type=click.Choice(SCHEMES)),
        click.option(
            "--convention",
            type=click.Choice(["analysis", "classical", "unitary"]),
            help="Transform normalization.",
        ),
        click.option(
            "--density",
            type=str,
            help="Built-in density: zero, exp_decay, gaussian, "
            "indicator(A), rational_hardy, rational_hardy2.",
        ),
        click.option(
            "--density-csv",
            type=click.Path(exists=True, dir_okay=False),
            help="Sample file with header t1,f1_re,f1_im,t2,f2_re,f2_im.",
        ),
        click.option(
            "--output",
            "-o",
            type=click.Path(dir_okay=False),
            help="Output file, standard output if omitted.",
        ),
        click.option(
            "--tolerance",
            "tolerances",
            multiple=True,
            type=str,
            help="Tolerance override, e.g. `--tolerance plancherel=1e-8`.",
        ),
        click.option("--seed", type=int, help="Seed of randomized checks."),
        click.option("--verbose", "-v", is_flag=True, help="Debug logging."),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def point_option(function: Callable[..., None]) -> Callable[..., None]:
    return click.option(
        "--z",
        "points",
        multiple=True,
        type=str,
        help="Bicomplex point as 'x0 + x1 i + x2 j + x3 k' or "
        "'x0,x1,x2,x3'.",
    )(function)


@contextlib.contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", newline="") as output:
        yield output
    logger.info(f"Wrote {path}")


def real_line_samples(
    config: RunConfig, n: int, truncation: float
) -> SampledProductFunction:
    if config.density_csv is not None:
        return config.load_samples()
    grid = make_grid(
        DInterval.real_line(), **config.grid_parameters(n, truncation)
    )
    return config.resolve_density().sample(grid)


def half_line_samples(config: RunConfig) -> SampledProductFunction:
    if config.density_csv is not None:
        return config.load_samples()
    grid = make_grid(
        DInterval.half_line(), **config.grid_parameters(4096, 40.0)
    )
    return config.resolve_density().sample(grid)


def require_points(config: RunConfig) -> List[Bicomplex]:
    if not config.points:
        raise click.UsageError("At least one --z point is required")
    return parse_points(config.points)


@click.group()
def main() -> None:
    """Bicomplex Fourier, Paley-Wiener and Cauchy computations, and their
    numerical verification.

    Example:

        bicomplex-pw verify --suite plancherel --density exp_decay --n 4096
        --T 20
    """


@main.command()
@point_option
@run_options
@run_command
def decompose(config: RunConfig) -> None:
    """Print the idempotent components of each point."""
    for point in require_points(config):
        click.echo(
            f"(beta1, beta2) = ({format_complex(point.beta1)}, "
            f"{format_complex(point.beta2)})"
        )


@main.command()
@point_option
@run_options
@run_command
def transform(config: RunConfig) -> None:
    """Bicomplex Fourier transform of the density at each point."""
    points = require_points(config)
    samples = real_line_samples(config, 4096, 20.0)
    values = bicomplex_fourier(samples, points, config.transform_convention)
    with open_output(config.output) as output:
        write_transform_csv(output, points, values)


@main.command("extend")
@point_option
@run_options
@run_command
def extend_command(config: RunConfig) -> None:
    """Half-plane extension of the density restricted to t > 0."""
    points = require_points(config)
    density = HalfPlaneDensity(half_line_samples(config))
    values = [extend(density, point) for point in points]
    with open_output(config.output) as output:
        write_transform_csv(output, points, values)


@main.command("recover")
@click.option("--x1", type=float, help="Line height x1.")
@click.option("--x2", type=float, help="Line height x2.")
@run_options
@run_command
def recover_command(config: RunConfig) -> None:
    """Recover the density on (0, 10] from one horizontal line."""
    line = HorizontalLine(config.x1, config.x2)
    function: Optional[ProductFunction] = None
    if config.density_csv is None:
        function = config.resolve_density().extension_function()
    if function is None:
        function = extension(HalfPlaneDensity(half_line_samples(config)))
    x0_grid = make_grid(
        DInterval.real_line(), **config.grid_parameters(96_000, 3000.0)
    )
    t_grid = make_grid(DInterval.symmetric(0.0, 10.0), 320)
    recovered = recover(function, line, t_grid, x0_grid)
    with open_output(config.output) as output:
        recovered.to_csv(output)


@main.command()
@point_option
@click.option("--A", "band", type=float, help="Band limit A.")
@run_options
@run_command
def band(config: RunConfig) -> None:
    """Entire extension of the density restricted to (-A, A)."""
    points = require_points(config)
    if config.density_csv is not None:
        samples = config.load_samples()
    else:
        grid = make_grid(
            DInterval.symmetric(-config.band, config.band), config.n or 128
        )
        samples = config.resolve_density().sample(grid)
    density = BandDensity(samples, config.band)
    constant = exponential_type_bound(density).constant
    logger.info(f"Exponential type constant C={constant:.6g}")
    values = [band_synthesize(density, point) for point in points]
    with open_output(config.output) as output:
        write_transform_csv(output, points, values)


@main.command()
@point_option
@run_options
@run_command
def cauchy(config: RunConfig) -> None:
    """Cauchy integral of the density's boundary values at each point."""
    points = require_points(config)
    reference = None
    if config.density_csv is None:
        reference = config.resolve_density().holomorphic_function()
    boundary = BoundaryFunction(
        real_line_samples(config, 32_000, 1000.0), reference=reference
    )
    values = [cauchy_integral(boundary, point) for point in points]
    with open_output(config.output) as output:
        write_transform_csv(output, points, values)


@main.command()
@click.option(
    "--suite",
    type=click.Choice(SUITES + ["all"]),
    help="Verification suite to run.",
)
@run_options
@run_command
def verify(config: RunConfig) -> None:
    """Run verification suites; exit status 1 if any check fails."""
    rows = run_suites(config)
    with open_output(config.output) as output:
        write_report(rows, output)
    render_summary(rows, Console(stderr=True))
    if not all(row.passed for row in rows):
        sys.exit(1)


if __name__ == "__main__":
    main()
