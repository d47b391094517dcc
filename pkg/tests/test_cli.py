"""CLI contract: subcommands, n-range syntax, output formats, exit codes,
and byte-level reproducibility."""

import json
import math
import subprocess
import sys

import pytest

from spheremin.cli import (
    EXIT_HYPOTHESIS,
    EXIT_NONCONVERGENT,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    CliParseError,
    main,
    parse_distribution,
    parse_n_range,
)
from spheremin.minima import nmin


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    def test_distributions(self):
        assert parse_distribution("half-normal").name == "half-normal"
        assert parse_distribution("exponential:2.5").density_at_zero == 2.5
        assert parse_distribution("uniform01").support_upper == 1.0
        assert parse_distribution("power-law:2").density_at_zero == 0.0
        assert parse_distribution("heavy-tail:0.5").density_at_zero == 0.5

    @pytest.mark.parametrize("bad", ["gaussian", "exponential", "exponential:abc",
                                     "heavy-tail:-1"])
    def test_bad_distribution(self, bad):
        with pytest.raises(CliParseError):
            parse_distribution(bad)

    def test_n_range_multiplicative(self):
        assert parse_n_range("10:100000:x10") == [10, 100, 1000, 10000, 100000]

    def test_n_range_additive(self):
        assert parse_n_range("1:10:3") == [1, 4, 7, 10]
        assert parse_n_range("1:10:+3") == [1, 4, 7, 10]

    @pytest.mark.parametrize("bad", ["10:1:x10", "0:5:1", "1:10", "a:b:c", "1:10:x1"])
    def test_bad_n_range(self, bad):
        with pytest.raises(CliParseError):
            parse_n_range(bad)


class TestCommands:
    def test_emin_n1(self, capsys):
        code, out, _ = run(["emin", "--n", "1", "--format", "csv"], capsys)
        assert code == EXIT_OK
        header, row = out.strip().splitlines()
        assert header == "n,value,error_bound,method"
        fields = row.split(",")
        assert fields[0] == "1"
        assert float(fields[1]) == pytest.approx(1.0, abs=1e-12)
        assert fields[3] == "quadrature"

    def test_expected_min_exponential(self, capsys):
        code, out, _ = run(
            ["expected-min", "--dist", "exponential:1", "--n", "7", "--format", "csv"],
            capsys,
        )
        assert code == EXIT_OK
        value = float(out.strip().splitlines()[1].split(",")[1])
        assert value == pytest.approx(0.14285714285714285, abs=1e-10)

    def test_asymptotic_output(self, capsys):
        code, out, _ = run(
            ["asymptotic", "--dist", "exponential:2", "--n", "9", "--format", "csv"],
            capsys,
        )
        assert code == EXIT_OK
        fields = out.strip().splitlines()[1].split(",")
        assert float(fields[1]) == 0.05
        assert fields[2] == "unknown"
        assert fields[3] == "asymptotic"

    def test_json_format(self, capsys):
        code, out, _ = run(["nmin", "--n", "2", "--format", "json"], capsys)
        assert code == EXIT_OK
        rows = json.loads(out)
        assert rows[0]["n"] == 2
        assert rows[0]["value"] == pytest.approx(0.3304946062926472, abs=1e-9)

    def test_sweep_scaled_column(self, capsys):
        code, out, _ = run(
            ["sweep", "--command", "nmin", "--n-range", "10:1000:x10",
             "--columns", "n,value,scaled", "--format", "csv"],
            capsys,
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "n,value,scaled"
        assert len(lines) == 4
        for line in lines[1:]:
            n, value, scaled = line.split(",")
            assert float(scaled) == pytest.approx((int(n) + 1) * float(value), rel=1e-15)

    def test_sphere_mean(self, capsys):
        code, out, _ = run(
            ["sphere-mean", "--fn", "sum-squares", "--n", "5",
             "--samples", "1000", "--seed", "1", "--format", "csv"],
            capsys,
        )
        assert code == EXIT_OK
        fields = out.strip().splitlines()[1].split(",")
        assert float(fields[2]) == 1.0
        assert float(fields[3]) == 0.0


class TestExitCodes:
    def test_parse_error_missing_n(self, capsys):
        code, _, err = run(["emin"], capsys)
        assert code == EXIT_PARSE_ERROR
        assert "error" in err

    def test_parse_error_bad_subcommand(self, capsys):
        assert run(["frobnicate"], capsys)[0] == EXIT_PARSE_ERROR

    def test_parse_error_bad_tol(self, capsys):
        assert run(["emin", "--n", "1", "--tol", "0.5"], capsys)[0] == EXIT_PARSE_ERROR

    def test_nonconvergent(self, capsys):
        code, _, err = run(
            ["expected-min", "--dist", "heavy-tail:0.5", "--n", "1"], capsys
        )
        assert code == EXIT_NONCONVERGENT

    def test_hypothesis_violated(self, capsys):
        code, _, err = run(
            ["asymptotic", "--dist", "power-law:2", "--n", "10"], capsys
        )
        assert code == EXIT_HYPOTHESIS
        assert "density" in err


class TestReproducibilityAndRoundTrip:
    def test_identical_config_identical_bytes(self, capsys):
        argv = ["sphere-mean", "--fn", "min-abs", "--n", "3",
                "--samples", "20000", "--seed", "9", "--format", "csv"]
        _, out1, _ = run(argv, capsys)
        _, out2, _ = run(argv, capsys)
        assert out1 == out2

    def test_csv_round_trip_exact(self, capsys):
        _, out, _ = run(["nmin", "--n-range", "1:5:1", "--format", "csv"], capsys)
        for line in out.strip().splitlines()[1:]:
            n_str, value_str, bound_str, _ = line.split(",")
            n = int(n_str)
            assert float(value_str) == nmin(n).value  # 17 sig digits round-trip
            assert math.isfinite(float(bound_str))

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "rows.csv"
        code, out, _ = run(
            ["emin", "--n", "2", "--format", "csv", "--output", str(target)], capsys
        )
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text().startswith("n,value")


class TestVerify:
    def test_verify_passes_and_is_deterministic(self, tmp_path):
        argv = ["verify", "--seed", "42", "--samples", "50000"]
        outs = []
        for name in ("a.txt", "b.txt"):
            path = tmp_path / name
            code = main(argv + ["--output", str(path)])
            assert code == EXIT_OK
            outs.append(path.read_bytes())
        assert outs[0] == outs[1]
        assert b"OK" in outs[0]
        assert b"FAIL " not in outs[0]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "spheremin.cli", "emin", "--n", "1", "--format", "csv"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("n,value")
