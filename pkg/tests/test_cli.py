import json
import math

import pytest

from shellspectra import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEig:
    def test_punctured_ball_constant(self, capsys):
        code, out, err = run_cli(capsys, "--command", "eig", "--a", "0")
        assert code == cli.EXIT_OK
        assert "0.2225481584" in out
        assert err == ""

    def test_header(self, capsys):
        _, out, _ = run_cli(capsys, "--command", "eig", "--a", "2")
        assert out.splitlines()[0] == \
            "A,sigma,kappa_L,lambda_L,c_p,kappa_S,lambda_S,c_pS"

    def test_sigma_input(self, capsys):
        code, out, _ = run_cli(capsys, "--command", "eig", "--sigma", "0.5")
        row = out.splitlines()[1].split(",")
        assert code == cli.EXIT_OK
        assert float(row[0]) == pytest.approx(2.0)

    def test_json_format(self, capsys):
        _, out, _ = run_cli(capsys, "--command", "eig", "--a", "1",
                            "--format", "json")
        rows = json.loads(out)
        assert rows[0]["kappa_L"] == pytest.approx(math.pi, rel=1e-14)


class TestTable:
    def test_deterministic(self, capsys):
        args = ("--command", "table", "--grid", "0.1:10:25:log")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second
        assert len(first.splitlines()) == 26

    def test_linear_grid(self, capsys):
        code, out, _ = run_cli(capsys, "--command", "table",
                               "--grid", "1:2:3:linear")
        values = [float(line.split(",")[0]) for line in out.splitlines()[1:]]
        assert code == cli.EXIT_OK
        assert values == pytest.approx([1.0, 1.5, 2.0])

    def test_invariants_hold_on_rows(self, capsys):
        _, out, _ = run_cli(capsys, "--command", "table",
                            "--grid", "0.001:1000:40:log")
        for line in out.splitlines()[1:]:
            row = dict(zip(out.splitlines()[0].split(","), map(float, line.split(","))))
            assert row["c_pS"] <= row["c_p"] + 1e-14
            assert row["c_p"] == pytest.approx(1 / math.pi, rel=1e-12)


class TestBounds:
    def test_vacuous_bound_renders_empty_cell(self, capsys):
        code, out, _ = run_cli(capsys, "--command", "bounds",
                               "--grid", "0:2:3:linear")
        first_row = out.splitlines()[1].split(",")
        assert code == cli.EXIT_OK
        assert first_row[3] == ""  # no finite bound at A = 0

    def test_values_at_two(self, capsys):
        _, out, _ = run_cli(capsys, "--command", "bounds",
                            "--grid", "2:3:2:linear")
        row = out.splitlines()[1].split(",")
        assert float(row[3]) == pytest.approx(2 / math.pi, rel=1e-11)
        assert float(row[4]) == pytest.approx(2 / math.pi, rel=1e-11)


class TestProfile:
    def test_boundary_values_vanish(self, capsys):
        _, out, _ = run_cli(capsys, "--command", "profile", "--a", "2",
                            "--operator", "stokes", "--samples", "33")
        lines = out.splitlines()
        assert lines[0] == "r,value"
        assert len(lines) == 34
        assert abs(float(lines[1].split(",")[1])) < 1e-12
        assert abs(float(lines[-1].split(",")[1])) < 1e-12

    def test_no_negative_zero_cells(self, capsys):
        _, out, _ = run_cli(capsys, "--command", "profile", "--a", "2",
                            "--operator", "laplace", "--samples", "65")
        assert ",-0\n" not in out and not out.endswith(",-0")


class TestValidationCommands:
    def test_greens_validate_passes(self, capsys):
        code, out, _ = run_cli(capsys, "--command", "greens-validate",
                               "--sigma", "0.5")
        report = json.loads(out)
        assert code == cli.EXIT_OK
        assert report["passed"] is True
        assert report["results"][0]["rel_error"] < 0.01

    def test_oracle_check_passes(self, capsys):
        code, out, _ = run_cli(capsys, "--command", "oracle-check", "--a", "1")
        report = json.loads(out)
        assert code == cli.EXIT_OK
        assert report["passed"] is True

    def test_oracle_check_fails_with_unreachable_tolerance(self, capsys):
        code, _, err = run_cli(capsys, "--command", "oracle-check", "--a", "1",
                               "--tol", "oracle=1e-12")
        assert code == cli.EXIT_VALIDATION
        assert json.loads(err.splitlines()[0])["error"]["type"] == "validation"


class TestErrors:
    def test_missing_command_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys)
        assert code == cli.EXIT_USAGE
        assert json.loads(err)["error"]["type"] == "usage"

    def test_both_geometry_flags_rejected(self, capsys):
        code, _, _ = run_cli(capsys, "--command", "eig", "--a", "1",
                             "--sigma", "0.5")
        assert code == cli.EXIT_USAGE

    def test_invalid_geometry(self, capsys):
        code, _, err = run_cli(capsys, "--command", "eig", "--a", "-1")
        assert code == cli.EXIT_USAGE
        assert json.loads(err)["error"]["type"] == "geometry"

    def test_bad_grid_spec(self, capsys):
        code, _, _ = run_cli(capsys, "--command", "table", "--grid", "1:2:3")
        assert code == cli.EXIT_USAGE

    def test_unwritable_output_path(self, capsys):
        code, _, err = run_cli(capsys, "--command", "eig", "--a", "1",
                               "--out", "/nonexistent-dir/x.csv")
        assert code == cli.EXIT_IO
        assert json.loads(err)["error"]["type"] == "io"


class TestConfigFile:
    def test_config_file_supplies_defaults(self, capsys, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"command": "eig", "a": 2.0}))
        code, out, _ = run_cli(capsys, "--config", str(path))
        assert code == cli.EXIT_OK
        assert out.splitlines()[1].startswith("2,")

    def test_flags_override_config(self, capsys, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"command": "eig", "a": 2.0}))
        code, out, _ = run_cli(capsys, "--config", str(path), "--a", "4")
        assert code == cli.EXIT_OK
        assert out.splitlines()[1].startswith("4,")

    def test_malformed_config(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, _ = run_cli(capsys, "--config", str(path))
        assert code == cli.EXIT_USAGE

    def test_output_file_written(self, capsys, tmp_path):
        target = tmp_path / "row.csv"
        code, out, _ = run_cli(capsys, "--command", "eig", "--a", "1",
                               "--out", str(target))
        assert code == cli.EXIT_OK
        assert out == ""
        assert target.read_text().splitlines()[1].startswith("1,")


def test_fmt_is_twelve_significant_digits():
    assert cli.fmt(math.pi) == "3.14159265359"
    assert cli.fmt(-0.0) == "0"
