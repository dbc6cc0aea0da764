import numpy
import pytest

from bicomplex_paley_wiener.densities import exp_decay
from bicomplex_paley_wiener.domains import DInterval, make_grid


@pytest.fixture
def rng():
    return numpy.random.default_rng(20240611)


@pytest.fixture
def real_line_grid():
    # 256 panels of width 0.156, with 0 as a panel boundary
    return make_grid(DInterval.real_line(), 4096, truncation=20.0)


@pytest.fixture
def half_line_grid():
    return make_grid(DInterval.half_line(), 4096, truncation=40.0)


@pytest.fixture
def exp_decay_samples(real_line_grid):
    return exp_decay().sample(real_line_grid)


@pytest.fixture
def half_line_exp_decay(half_line_grid):
    return exp_decay().sample(half_line_grid)
