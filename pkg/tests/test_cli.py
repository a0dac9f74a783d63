import csv
import io
import json
import subprocess
import sys

import pytest

from hardwall import __version__
from hardwall.cli import format_value, main, render


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


class TestFormatting:
    def test_precision_cap(self):
        assert format_value(1 / 3, 6) == "0.333333"
        assert format_value(1.5, 12) == "1.5"
        assert format_value(3, 12) == "3"
        assert format_value(True, 12) == "true"

    def test_lf_line_endings(self):
        text = render(["a", "b"], [(1, 0.25)], "csv", 12, {})
        assert text == "a,b\n1,0.25\n"

    @pytest.mark.parametrize("precision", [6, 12, 17])
    def test_csv_round_trip(self, capsys, precision):
        code, out, _ = run(capsys, "scan", "--steps", "9", "--n-max", "2", "--precision", str(precision))
        assert code == 0
        header, rows = parse_csv(out)
        again = render(header, [[float(v) for v in r] for r in rows], "csv", precision, {})
        assert again == out


class TestEigen:
    def test_half_line(self, capsys):
        code, out, _ = run(capsys, "eigen", "--q0", "0", "--n-max", "2")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["n", "epsilon", "weber_order", "node_count"]
        assert [float(r[1]) for r in rows] == [1.5, 3.5, 5.5]
        assert [int(r[3]) for r in rows] == [0, 1, 2]

    def test_hydrogen(self, capsys):
        _, out, _ = run(capsys, "eigen", "--q0", "1.55", "--n-max", "0")
        assert round(float(parse_csv(out)[1][0][1]), 2) == 0.57

    def test_negative_q0(self, capsys):
        code, out, err = run(capsys, "eigen", "--q0", "-1")
        assert code == 2 and out == "" and "q0" in err

    def test_beyond_range_points_to_oracle(self, capsys):
        code, out, err = run(capsys, "eigen", "--q0", "5")
        assert code == 3 and out == "" and "--oracle" in err

    def test_oracle_flag(self, capsys):
        code, out, _ = run(capsys, "eigen", "--q0", "5", "--n-max", "1", "--oracle")
        assert code == 0
        rows = parse_csv(out)[1]
        assert abs(float(rows[0][1]) - 0.5) < 1e-6
        assert [int(r[3]) for r in rows] == [0, 1]

    def test_json(self, capsys):
        code, out, _ = run(capsys, "eigen", "--q0", "1", "--n-max", "1", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["meta"]["version"] == __version__
        assert doc["meta"]["flags"]["q0"] == 1.0
        assert "hbar_J_s" in doc["meta"]["constants"]
        assert [r["n"] for r in doc["rows"]] == [0, 1]


class TestScan:
    def test_columns_monotone_and_gaps(self, capsys):
        code, out, _ = run(capsys, "scan", "--q0-start", "0", "--q0-end", "4", "--steps", "21", "--n-max", "3")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["q0", "eps0", "eps1", "eps2", "eps3", "gap0", "gap1", "gap2"]
        values = [[float(v) for v in r] for r in rows]
        for col in range(1, 5):
            column = [r[col] for r in values]
            assert all(a > b for a, b in zip(column, column[1:]))
        for r in values:
            assert min(r[5:]) >= 1
            if r[0] > 0:
                assert r[5] < r[6] < r[7]

    def test_endpoints_match_eigen(self, capsys):
        _, out, _ = run(capsys, "scan", "--q0-start", "0.5", "--q0-end", "2.5", "--steps", "5", "--n-max", "2")
        rows = parse_csv(out)[1]
        for row in (rows[0], rows[-1]):
            _, eig, _ = run(capsys, "eigen", "--q0", row[0], "--n-max", "2")
            assert [r[1] for r in parse_csv(eig)[1]] == row[1:4]

    @pytest.mark.parametrize(
        "argv",
        [
            ["--q0-start", "2", "--q0-end", "1"],
            ["--steps", "1"],
            ["--n-max", "7"],
            ["--precision", "5"],
            ["--format", "xml"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, "scan", *argv)[0] == 2

    def test_beyond_range(self, capsys):
        assert run(capsys, "scan", "--q0-end", "4.5")[0] == 3


class TestOtherCommands:
    def test_variational_exact_case(self, capsys):
        code, out, _ = run(capsys, "variational", "--q0", "0", "--n", "1")
        header, rows = parse_csv(out)
        assert code == 0
        assert header == ["n", "w", "w_minus_epsilon"]
        assert float(rows[0][1]) == 1.5

    def test_variational_gap_positive(self, capsys):
        _, out, _ = run(capsys, "variational", "--q0", "1", "--n", "8")
        assert all(float(r[2]) > 0 for r in parse_csv(out)[1][:3])

    def test_variational_far_wall_has_no_gap_column(self, capsys):
        code, out, _ = run(capsys, "variational", "--q0", "6", "--n", "3")
        assert code == 0 and parse_csv(out)[0] == ["n", "w"]

    def test_variational_ill_conditioned(self, capsys):
        assert run(capsys, "variational", "--q0", "0", "--n", "20")[0] == 3

    def test_identities(self, capsys):
        code, out, _ = run(capsys, "identities", "--q0", "1", "--n-max", "1")
        header, rows = parse_csv(out)
        assert code == 0
        assert header == ["n", "q0", "identity", "lhs", "rhs", "residual"]
        assert {r[2] for r in rows} == {"Virial", "Hypervirial", "BoundaryDerivative"}
        assert all(float(r[5]) < 1e-6 for r in rows)

    def test_adsorb_preset(self, capsys):
        code, out, _ = run(capsys, "adsorb", "--preset", "H-Pd100", "--format", "json")
        row = json.loads(out)["rows"][0]
        assert code == 0
        assert abs(row["q0"] - 1.55) < 0.02
        assert round(row["epsilon0"], 2) == 0.57
        assert row["E0_meV"] > 0

    def test_adsorb_custom(self, capsys):
        code, out, _ = run(capsys, "adsorb", "--mass-amu", "2.0141", "--k-npm", "15", "--d-angstrom", "0.45")
        assert code == 0 and parse_csv(out)[1][0][0] == "custom"

    @pytest.mark.parametrize(
        "argv",
        [[], ["--mass-amu", "1"], ["--preset", "H-Pd100", "--k-npm", "3"], ["--mass-amu", "-1", "--k-npm", "1", "--d-angstrom", "1"]],
    )
    def test_adsorb_usage(self, capsys, argv):
        assert run(capsys, "adsorb", *argv)[0] == 2

    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "oracle", "--q0", "0", "--n-max", "1")
        assert code == 0
        assert [round(float(r[1]), 6) for r in parse_csv(out)[1]] == [1.5, 3.5]

    def test_oracle_too_coarse_is_convergence_failure(self, capsys, monkeypatch):
        from hardwall import cli, errors

        def boom(*_a, **_k):
            raise errors.GridTooCoarse("forced")

        monkeypatch.setattr(cli, "fd_eigenvalues_richardson", boom)
        assert run(capsys, "oracle", "--q0", "1")[0] == 4

    def test_no_command(self, capsys):
        assert run(capsys)[0] == 2


def test_deterministic_bytes():
    argv = [sys.executable, "-m", "hardwall", "scan", "--steps", "11", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["rows"]
