import json

import pytest

from eisenzeta.cli import build_parser, main, resolve_config


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def test_tables(capsys):
    status, out = run(capsys, "tables")
    assert status == 0
    assert "x^12-33x^8y^4-33x^4y^8+y^12" in out
    assert "-1/15-2T/15-2T^2/15+4T^4/15+8T^5/15+8T^6/15" in out


def test_json_output_is_deterministic(capsys):
    first = run(capsys, "zeta", "--type", "IV", "--ell", "6", "--format", "json")
    second = run(capsys, "zeta", "--type", "IV", "--ell", "6", "--format", "json")
    assert first == second
    results = json.loads(first[1])
    assert [r["method"] for r in results] == ["LINEAR", "SERIES", "CLOSED"]


def test_out_writes_a_file(capsys, tmp_path):
    path = tmp_path / "tables.json"
    status, out = run(capsys, "tables", "--format", "json", "--out", str(path))
    assert status == 0
    assert out == ""
    assert set(json.loads(path.read_text())) == {"table2", "table3"}


def test_gen_both(capsys):
    status, out = run(capsys, "gen", "--type", "IV", "--ell", "2", "--method", "both", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["closed_full_agrees"]
    assert not payload["closed_printed_agrees"]


def test_modular_csv(capsys):
    status, out = run(capsys, "modular", "eisenstein-series", "--k", "4", "--order", "4", "--format", "csv")
    assert status == 0
    assert out == "exponent,coefficient\n0,1\n1,240\n2,2160\n3,6720\n"


def test_groups_dump(capsys):
    status, out = run(capsys, "groups", "dump", "--type", "IV", "--format", "json")
    assert status == 0
    assert json.loads(out)["order"] == 12


def test_verify_type_iii_step_3(capsys):
    status, out = run(capsys, "verify", "--types", "III", "--ell-max", "16", "--step", "3", "--suites", "interlace")
    assert status == 0
    assert "FLAGGED" in out
    assert out.rstrip().endswith("0 passed, 0 failed, 3 flagged")


def test_padic(capsys):
    status, out = run(capsys, "padic", "--types", "I,IV", "--primes", "3,5", "--what", "zeta", "--format", "json")
    assert status == 0
    report = json.loads(out)
    assert report["counts"] == {"PASS": 4, "FAIL": 0, "FLAGGED": 4}


def test_computation_errors_exit_1(capsys):
    assert run(capsys, "zeta", "--type", "I", "--ell", "5")[0] == 1
    assert run(capsys, "modular", "theta", "--type", "II", "--ell", "4")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["padic", "--primes", "4"],
        ["padic", "--primes", "2"],
        ["verify", "--suites", "plots"],
        ["rha", "--ell-min", "12", "--ell-max", "4"],
        ["rha", "--tol", "0"],
        ["gen", "--type", "II", "--ell", "8", "--method", "closed"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["rha", "--types", "V"],
        ["rha", "--ell-range", "12"],
        ["tables", "--format", "xml"],
        ["gen", "--type", "IV"],
    ],
)
def test_argument_errors_exit_2(argv):
    with pytest.raises(SystemExit) as error:
        main(argv)
    assert error.value.code == 2


def test_config_file_and_flags(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("types = I, III\nell-max = 24\ntol = 1e-10\n")
    args = build_parser().parse_args(["rha", "--config", str(path), "--ell-range", "4..12"])
    config = resolve_config(args)
    assert config.types == ("I", "III")
    assert (config.ell_min, config.ell_max) == (4, 12)
    assert config.tol == 1e-10
    assert config.method == "ALL"
