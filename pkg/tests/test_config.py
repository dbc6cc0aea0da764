import json

import pytest

from bicomplex_paley_wiener.transform import TransformConvention
from bicomplex_paley_wiener.verification.config import SUITES, RunConfig


def test_defaults():
    config = RunConfig()
    assert config.command == "verify"
    assert config.selected_suites() == SUITES
    assert config.resolve_density().name == "exp_decay"
    assert config.transform_convention == TransformConvention.analysis()
    assert config.grid_parameters(4096, 20.0) == {
        "n": 4096,
        "truncation": 20.0,
        "scheme": "gauss_legendre",
    }


def test_grid_parameters_override():
    config = RunConfig(n=128, truncation=5.0, scheme="trapezoid")
    assert config.grid_parameters(4096, 20.0) == {
        "n": 128,
        "truncation": 5.0,
        "scheme": "trapezoid",
    }


def test_tolerance():
    config = RunConfig(tolerances={"energy": 0.5})
    assert config.tolerance("energy", 1e-2) == 0.5
    assert config.tolerance("ray", 1e-6) == 1e-6


def test_from_mapping():
    config = RunConfig.from_mapping(
        {"suite": "ray", "seed": 4, "density": None}
    )
    assert config.suite == "ray"
    assert config.seed == 4
    assert config.density is None
    assert config.selected_suites() == ["ray"]


@pytest.mark.parametrize(
    "settings",
    [
        {"suit": "ray"},
        {"suite": "nonsense"},
        {"n": 1},
        {"truncation": 0.0},
        {"tolerances": {"ray": 0.0}},
        {"density": "lorentzian"},
        {"density": "gaussian", "density_csv": "samples.csv"},
    ],
)
def test_invalid_settings(settings):
    with pytest.raises(ValueError):
        RunConfig.from_mapping(settings)


def test_load_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"suite": "energy", "n": 2048}))
    assert RunConfig.load_file(path) == {"suite": "energy", "n": 2048}
    path.write_text("[]")
    with pytest.raises(ValueError):
        RunConfig.load_file(path)
