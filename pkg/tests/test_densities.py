import math

import numpy
import pytest

from bicomplex_paley_wiener.algebra import Bicomplex
from bicomplex_paley_wiener.densities import DENSITIES, get_density
from bicomplex_paley_wiener.domains import DInterval, make_grid
from bicomplex_paley_wiener.transform import (
    TransformConvention,
    bicomplex_fourier,
)


@pytest.mark.parametrize("name", sorted(DENSITIES))
def test_get_density(name):
    density = get_density(name)
    assert density.name.startswith(name)


def test_indicator_argument():
    density = get_density(" indicator(2.5) ")
    assert density.band == 2.5
    assert density.name == "indicator(2.5)"
    assert get_density("indicator").band == 1.0


@pytest.mark.parametrize(
    "spec", ["cauchy", "exp_decay(2)", "indicator(-1)", "indicator(x)", ""]
)
def test_invalid_density(spec):
    with pytest.raises(ValueError):
        get_density(spec)


def test_zero_density(real_line_grid):
    samples = get_density("zero").sample(real_line_grid)
    assert not numpy.any(samples.values1)
    assert not numpy.any(samples.values2)


def test_indicator_profile():
    density = get_density("indicator(1.0)")
    values = density.profile(numpy.array([-1.5, -0.5, 0.0, 0.99, 1.0]))
    numpy.testing.assert_array_equal(values, [0, 1, 1, 1, 0])
    assert density.transform(numpy.array([0.0]))[0] == 2.0
    assert density.transform(numpy.array([math.pi]))[0] == pytest.approx(
        0.0, abs=1e-15
    )


def test_extension_function():
    assert get_density("gaussian").extension_function() is None
    assert get_density("exp_decay").holomorphic_function() is None
    function = get_density("exp_decay").extension_function()
    assert function(Bicomplex(0.0, 1.0)) == Bicomplex(0.5)


@pytest.mark.parametrize(
    "name, truncation, n, tolerance",
    [
        ("exp_decay", 40.0, 8192, 1e-8),
        ("gaussian", 20.0, 4096, 1e-10),
        ("rational_hardy", 1000.0, 32_000, 1e-5),
        ("rational_hardy2", 1000.0, 32_000, 1e-5),
    ],
)
def test_closed_form_transforms(name, truncation, n, tolerance):
    density = get_density(name)
    grid = make_grid(DInterval.real_line(), n, truncation=truncation)
    frequencies = numpy.array([-2.0, -0.5, 0.5, 1.0, 3.0])
    values = bicomplex_fourier(
        density.sample(grid),
        [Bicomplex(w) for w in frequencies],
        TransformConvention.classical(),
    )
    expected = density.transform(frequencies)
    for value, reference in zip(values, expected):
        assert abs(value.beta1 - reference) < tolerance
        assert abs(value.beta2 - reference) < tolerance
