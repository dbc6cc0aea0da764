import cmath
import csv
import json

import pytest
from click.testing import CliRunner

from bicomplex_paley_wiener.densities import exp_decay
from bicomplex_paley_wiener.domains import (
    CSV_HEADER,
    DInterval,
    SampledProductFunction,
    make_grid,
)
from bicomplex_paley_wiener.verification.cli import main, parse_tolerances
from bicomplex_paley_wiener.verification.report import REPORT_HEADER


@pytest.fixture
def runner():
    return CliRunner()


def read_rows(path):
    with open(path, newline="") as csv_file:
        return list(csv.DictReader(csv_file))


def test_decompose(runner):
    result = runner.invoke(main, ["decompose", "--z", "0 + 0 i + 1 j + 0 k"])
    assert result.exit_code == 0, result.output
    assert "(beta1, beta2) = (0.0-1.0i, 0.0+1.0i)" in result.output


def test_decompose_invalid_point(runner):
    result = runner.invoke(main, ["decompose", "--z", "1 + 2x"])
    assert result.exit_code == 2


def test_decompose_needs_point(runner):
    result = runner.invoke(main, ["decompose"])
    assert result.exit_code == 2


def test_transform(runner, tmp_path):
    output = tmp_path / "transform.csv"
    result = runner.invoke(
        main,
        [
            "transform",
            "--z",
            "1,0,0,0",
            "--z",
            "0.5,0,0,-0.5",
            "--convention",
            "classical",
            "--density",
            "exp_decay",
            "-o",
            str(output),
        ],
    )
    assert result.exit_code == 0, result.output
    rows = read_rows(output)
    assert list(rows[0]) == [
        "x0",
        "x1",
        "x2",
        "x3",
        "re_beta1",
        "im_beta1",
        "re_beta2",
        "im_beta2",
    ]
    assert float(rows[0]["re_beta1"]) == pytest.approx(1.0, abs=1e-6)
    # beta1 = 0, beta2 = 1
    assert float(rows[1]["re_beta1"]) == pytest.approx(2.0, abs=1e-6)
    assert float(rows[1]["re_beta2"]) == pytest.approx(1.0, abs=1e-6)


def test_transform_from_csv(runner, tmp_path):
    samples_path = tmp_path / "samples.csv"
    grid = make_grid(DInterval.real_line(), 4001, "trapezoid", truncation=20)
    exp_decay().sample(grid).to_csv(samples_path)
    output = tmp_path / "transform.csv"
    result = runner.invoke(
        main,
        [
            "transform",
            "--z",
            "0,0,0,0",
            "--density-csv",
            str(samples_path),
            "--convention",
            "classical",
            "-o",
            str(output),
        ],
    )
    assert result.exit_code == 0, result.output
    assert float(read_rows(output)[0]["re_beta1"]) == pytest.approx(
        2.0, abs=1e-3
    )


def test_density_and_csv_are_exclusive(runner, tmp_path):
    samples_path = tmp_path / "samples.csv"
    grid = make_grid(DInterval.symmetric(0.0, 1.0), 4, "trapezoid")
    exp_decay().sample(grid).to_csv(samples_path)
    result = runner.invoke(
        main,
        [
            "transform",
            "--z",
            "0,0,0,0",
            "--density",
            "exp_decay",
            "--density-csv",
            str(samples_path),
        ],
    )
    assert result.exit_code == 2


def test_unknown_density(runner):
    result = runner.invoke(
        main, ["transform", "--z", "0,0,0,0", "--density", "lorentzian"]
    )
    assert result.exit_code == 2


def test_divergent_transform_is_a_run_error(runner):
    result = runner.invoke(main, ["transform", "--z", "0,40,0,0"])
    assert result.exit_code == 2
    assert "growth limit" in result.output


def test_extend(runner, tmp_path):
    output = tmp_path / "extend.csv"
    result = runner.invoke(
        main, ["extend", "--z", "0 + 1 i", "-o", str(output)]
    )
    assert result.exit_code == 0, result.output
    row = read_rows(output)[0]
    assert float(row["re_beta1"]) == pytest.approx(0.5, abs=1e-9)
    assert float(row["im_beta2"]) == pytest.approx(0.0, abs=1e-9)


def test_extend_outside_domain(runner):
    result = runner.invoke(main, ["extend", "--z", "0 - 1 i"])
    assert result.exit_code == 2


def test_recover(runner, tmp_path):
    output = tmp_path / "recovered.csv"
    result = runner.invoke(
        main,
        [
            "recover",
            "--x1",
            "1",
            "--n",
            "8000",
            "--T",
            "400",
            "-o",
            str(output),
        ],
    )
    assert result.exit_code == 0, result.output
    rows = read_rows(output)
    assert list(rows[0]) == CSV_HEADER
    assert len(rows) == 320
    restored = SampledProductFunction.from_csv(output)
    assert restored.grid.nodes1.min() > 0


def test_recover_line_below_boundary(runner):
    result = runner.invoke(main, ["recover", "--x1", "0.5", "--x2", "1"])
    assert result.exit_code == 2


def test_band(runner, tmp_path):
    output = tmp_path / "band.csv"
    result = runner.invoke(
        main,
        [
            "band",
            "--A",
            "1",
            "--density",
            "indicator(1.0)",
            "--z",
            "0.5,0.2,0,0",
            "-o",
            str(output),
        ],
    )
    assert result.exit_code == 0, result.output
    row = read_rows(output)[0]
    expected = 2 * cmath.sin(0.5 + 0.2j) / (0.5 + 0.2j)
    assert float(row["re_beta1"]) == pytest.approx(expected.real, abs=1e-8)
    assert float(row["im_beta2"]) == pytest.approx(expected.imag, abs=1e-8)


def test_cauchy(runner, tmp_path):
    output = tmp_path / "cauchy.csv"
    result = runner.invoke(
        main,
        [
            "cauchy",
            "--density",
            "rational_hardy",
            "--z",
            "0,1.5,0,0",
            "-o",
            str(output),
        ],
    )
    assert result.exit_code == 0, result.output
    row = read_rows(output)[0]
    # 1 / (2.5 i)^2
    assert float(row["re_beta1"]) == pytest.approx(-0.16, abs=1e-4)


def test_cauchy_on_boundary(runner):
    result = runner.invoke(
        main, ["cauchy", "--density", "rational_hardy", "--z", "1,0,0,0"]
    )
    assert result.exit_code == 2


def test_verify(runner, tmp_path):
    output = tmp_path / "report.csv"
    result = runner.invoke(
        main, ["verify", "--suite", "algebra", "-o", str(output)]
    )
    assert result.exit_code == 0, result.output
    rows = read_rows(output)
    assert list(rows[0]) == REPORT_HEADER
    assert {row["passed"] for row in rows} == {"pass"}


def test_verify_is_reproducible(runner, tmp_path):
    paths = [tmp_path / "first.csv", tmp_path / "second.csv"]
    for path in paths:
        result = runner.invoke(
            main,
            ["verify", "--suite", "algebra", "--seed", "3", "-o", str(path)],
        )
        assert result.exit_code == 0, result.output
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_failure_exit_code(runner, tmp_path):
    output = tmp_path / "report.csv"
    result = runner.invoke(
        main,
        [
            "verify",
            "--suite",
            "ray",
            "--tolerance",
            "ray=1e-30",
            "-o",
            str(output),
        ],
    )
    assert result.exit_code == 1
    assert "fail" in {row["passed"] for row in read_rows(output)}


def test_verify_config_file(runner, tmp_path):
    config_path = tmp_path / "config.json"
    config_path.write_text(
        json.dumps({"suite": "ray", "tolerances": {"ray": 1e-30}})
    )
    output = tmp_path / "report.csv"
    # flags win over the file
    result = runner.invoke(
        main,
        [
            "verify",
            "--config",
            str(config_path),
            "--tolerance",
            "ray=1e-5",
            "-o",
            str(output),
        ],
    )
    assert result.exit_code == 0, result.output
    assert {row["test"] for row in read_rows(output)} == {"ray"}


@pytest.mark.parametrize(
    "settings",
    [{"suite": "ray", "colour": "blue"}, {"suite": "nonsense"}, [1, 2]],
)
def test_verify_invalid_config_file(runner, tmp_path, settings):
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps(settings))
    result = runner.invoke(main, ["verify", "--config", str(config_path)])
    assert result.exit_code == 2


@pytest.mark.parametrize("tolerance", ["ray", "ray=small", "ray=-1"])
def test_verify_invalid_tolerance(runner, tolerance):
    result = runner.invoke(
        main, ["verify", "--suite", "ray", "--tolerance", tolerance]
    )
    assert result.exit_code == 2


def test_parse_tolerances():
    assert parse_tolerances(("ray=1e-6", " energy = 0.01")) == {
        "ray": 1e-6,
        "energy": 0.01,
    }
