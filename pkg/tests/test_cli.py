import json

import pytest
from pydantic import ValidationError

import cli
from cli import EXIT_OK, EXIT_USAGE, EXIT_WITNESS, RunConfig, build_parser, main, run_config
from config import settings
from koszul.exceptions import CapViolationError, GradingError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize(
    "polynomial,field,expected",
    [
        ("x1^3 - 6*x1^2 + 12*x1 - 8", "q", EXIT_OK),
        ("x1^2 + 1", "q", EXIT_OK),
        ("x1^3 + x1^2", "f2", EXIT_WITNESS),
        ("x1^3 + x1^2", "f3", EXIT_OK),
        ("2*x1^2 + 1", "q", EXIT_USAGE),
        ("x1 +", "q", EXIT_USAGE),
        ("x1^2", "f4", EXIT_USAGE),
        ("x1*x2", "q", EXIT_USAGE),
    ],
)
def test_check_poly_exit_codes(capsys, polynomial, field, expected):
    code, out, err = run(capsys, "check-poly", polynomial, "--field", field)
    assert code == expected
    assert bool(out) == (expected != EXIT_USAGE)
    if expected == EXIT_USAGE:
        assert err.startswith("check-poly:")


def test_check_poly_report(capsys):
    code, out, _ = run(capsys, "check-poly", "x1^3 + x1^2", "--field", "f2")
    report = json.loads(out)
    assert list(report) == ["schema", "command", "config", "passed", "result", "version", "wall_clock"]
    assert report["schema"] == 1
    assert report["passed"] is False
    assert report["config"] == {"field": "f2", "polynomial": "x1^3 + x1^2", "depth": 3, "seed": 0}
    assert report["result"]["resultants"] == ["0", "0"]
    assert report["result"]["verdict"]["counterexample"] is True
    assert report["result"]["consistent"] is True


def test_verify_degree(capsys):
    code, out, _ = run(capsys, "verify-degree", "3", "--field", "f2", "--workers", "1")
    assert code == EXIT_WITNESS
    report = json.loads(out)
    assert report["result"]["passed"] is False
    assert "workers" not in report["config"]

    code, _, _ = run(capsys, "verify-degree", "3", "--field", "q", "--workers", "1")
    assert code == EXIT_OK


def test_verify_degree_out_of_range(capsys):
    code, out, err = run(capsys, "verify-degree", "2", "--workers", "1")
    assert code == EXIT_USAGE
    assert not out and err.startswith("verify-degree:")


def test_scan_bad_primes(capsys):
    code, out, _ = run(capsys, "scan-bad-primes", "--d", "3", "--bound", "3", "--workers", "1")
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["bad_primes"] == [2]
    assert result["primes_scanned"] == [2, 3]


def test_koszul_polys(capsys):
    code, out, _ = run(capsys, "koszul", "--polys", "x1,x2", "--nvars", "2", "--field", "q")
    assert code == EXIT_OK
    result = json.loads(out)["result"]
    assert result["name"] == "K(f)"
    assert result["ranks"] == [1, 2, 1]
    assert result["degree_bound"] == 2
    dimensions = {(row["homological_index"], row["graded_degree"]): row["dimension"] for row in result["homology"]}
    assert len(dimensions) == 9
    assert dimensions[0, 0] == 1
    assert sum(dimensions.values()) == 1


def test_koszul_truncated(capsys):
    code, out, _ = run(capsys, "koszul", "--n", "3", "--indices", "4,4", "--k", "1", "--degree-bound", "2")
    assert code == EXIT_OK
    assert json.loads(out)["result"]["name"].endswith("^3_1")


@pytest.mark.parametrize(
    "argv",
    [
        ["koszul"],
        ["koszul", "--n", "3"],
        ["koszul", "--n", "3", "--indices", "4,4", "--polys", "x1"],
        ["koszul", "--polys", "x1"],
        ["koszul", "--n", "3", "--indices", "4,4", "--degree-bound", "-1"],
        ["koszul", "--n", "3", "--indices", "4,4", "--k", "-1"],
        ["verify-proof", "--n", "3", "--indices", "4,4,1", "--jn", "2"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert not out


def test_text_output_with_timing(capsys):
    code, out, _ = run(capsys, "check-poly", "x1^2 - 2*x1 + 1", "--output", "text", "--timing")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "check-poly: pass"
    assert lines[-1].startswith("wall clock: ")


def test_parser_errors_exit_with_usage_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify-proof"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit):
        main(["koszul", "--indices", "1,x"])


def test_indices_argument():
    parser = build_parser()
    assert parser.parse_args(["verify-proof", "--n", "3", "--indices", "all"]).indices is None
    assert parser.parse_args(["verify-proof", "--n", "3", "--indices", "4, 1", "--jn", "2"]).indices == [4, 1]


def test_run_config_uses_settings(monkeypatch):
    monkeypatch.setattr(settings, "field", "f5")
    monkeypatch.setattr(settings.koszul, "degree_bound", 4)
    config = run_config(build_parser().parse_args(["verify-proof", "--n", "3"]))
    assert config.field == "f5"
    assert config.degree_bound == 4
    assert config.depth == 3

    config = run_config(build_parser().parse_args(["check-poly", "x1", "--field", "q"]))
    assert config.field == "q"
    assert config.degree_bound is None


@pytest.mark.parametrize(
    "values",
    [
        {"command": "verify-degree"},
        {"command": "check-poly"},
        {"command": "verify-proof"},
        {"command": "check-poly", "polynomial": "x1", "prime_bound": 5},
        {"command": "verify-degree", "d": 3, "workers": 0},
        {"command": "koszul", "n": 3, "polys": ["x1"], "indices": [4, 4]},
        {"command": "koszul", "n": 3, "indices": [4, 4], "k": -1},
    ],
)
def test_run_config_validation(values):
    with pytest.raises(ValidationError):
        RunConfig(field="q", **values)


@pytest.mark.parametrize(
    "error",
    [GradingError("усечение k=-1 < 0"), CapViolationError("x3^5", 4)],
)
def test_koszul_input_errors_exit_with_usage_code(capsys, monkeypatch, error):
    def failing(config):
        raise error

    monkeypatch.setitem(cli.HANDLERS, "koszul", failing)
    code, out, err = run(capsys, "koszul", "--n", "3", "--indices", "4,4")
    assert code == EXIT_USAGE
    assert not out
    assert str(error) in err
