import csv
import io
import json

import pytest

from bismash.cli import EXIT_INVALID, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOrbits:
    def test_table_lists_all_orbits(self, capsys):
        code, out, _ = run(capsys, "orbits", "--n", "5", "--variant", "J")
        assert code == EXIT_OK
        assert len(out.strip().splitlines()) == 8

    def test_csv_reproduces_action_table(self, capsys):
        code, out, _ = run(
            capsys, "orbits", "--n", "5", "--variant", "J", "--format", "csv"
        )
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        header, body = rows[0], rows[1:]
        assert header[0] == "x" and header[-1] == "stabilizer_order"
        by_rep = {r[0]: r for r in body}
        # the C_5 action on transpositions: one full orbit of 5
        row = next(r for r in body if "(1 2)" in r[1:-1])
        assert set(row[1:-1]) == {"(1 2)", "(1 4 3 2)", "(1 2 3 4)", "(3 4)", "(2 3)"}
        assert row[-1] == "1"
        # invariant involution: constant row, full stabilizer
        row = by_rep["(1 4)(2 3)"]
        assert set(row[1:-1]) == {"(1 4)(2 3)"}
        assert row[-1] == "5"

    def test_json_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "orbits", "--n", "5", "--variant", "H", "--format", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["columns"]) == 24
        assert {r["stabilizer_order"] for r in payload["rows"]} == {24, 6}

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "orbits.csv"
        code, out, _ = run(
            capsys, "orbits", "--n", "4", "--variant", "J",
            "--format", "csv", "--output", str(target),
        )
        assert code == EXIT_OK and out == ""
        assert target.read_text().startswith("x,")


class TestSimples:
    def test_json_counts(self, capsys):
        code, out, _ = run(
            capsys, "simples", "--n", "5", "--variant", "J", "--format", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload) == 24
        assert sorted({d["dimension"] for d in payload}) == [1, 5]

    def test_table_totals(self, capsys):
        code, out, _ = run(capsys, "simples", "--n", "5", "--variant", "H")
        assert code == EXIT_OK
        assert "total: 8 simple modules" in out


class TestIndicators:
    def test_h6_all_positive_json(self, capsys):
        code, out, _ = run(
            capsys, "indicators", "--n", "6", "--variant", "H", "--format", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["trace_alpha"] == 76
        nus = [s["indicator"] for s in payload["simples"]]
        assert set(nus) == {1}
        assert sum(s["indicator"] * s["dimension"] for s in payload["simples"]) == 76

    def test_j5_table(self, capsys):
        code, out, _ = run(capsys, "indicators", "--n", "5", "--variant", "J")
        assert code == EXIT_OK
        assert "Tr(alpha) = 26, sum nu*dim = 26" in out
        assert "m0 = 0, m1 = 4" in out

    def test_custom_generators(self, capsys):
        code, out, _ = run(
            capsys, "indicators", "--degree", "4",
            "--gen-f", "(1 2)", "--gen-f", "(1 2 3)",
            "--gen-g", "(1 2 3 4)", "--format", "json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["factorization"]["variant"] == "custom"
        assert payload["trace_alpha"] == 10


class TestCounts:
    def test_with_build_cross_check(self, capsys):
        code, out, _ = run(
            capsys, "counts", "--p", "5", "--build", "--format", "json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["m1"] == payload["built_m1"] == 4
        assert payload["m0"] == payload["built_m0"] == 0

    def test_closed_form_only(self, capsys):
        code, out, _ = run(capsys, "counts", "--p", "11", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["m1"] == 3244


class TestRatio:
    def test_p11(self, capsys):
        code, out, _ = run(capsys, "ratio", "--p", "11", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert 0.00986 <= payload["decimal"] < 0.00988

    def test_p5_table(self, capsys):
        code, out, _ = run(capsys, "ratio", "--p", "5")
        assert code == EXIT_OK
        assert out.startswith("5/12")


class TestVerify:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "5", "--variant", "J")
        assert code == EXIT_OK
        assert out.count("pass") == 4
        assert "FAIL" not in out


class TestErrorHandling:
    def test_invalid_prime(self, capsys):
        code, _, err = run(capsys, "ratio", "--p", "9")
        assert code == EXIT_INVALID
        assert "error:" in err

    def test_bad_factorization(self, capsys):
        # F and G overlap, so FG cannot factor L uniquely
        code, _, err = run(
            capsys, "orbits", "--degree", "4",
            "--gen-f", "(1 2 3 4)", "--gen-g", "(1 3)(2 4)",
        )
        assert code == EXIT_INVALID

    def test_missing_group_spec(self, capsys):
        code, _, err = run(capsys, "orbits")
        assert code == EXIT_INVALID

    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "indicators", "--n", "5", "--variant", "J",
                      "--format", "csv")
    _, second, _ = run(capsys, "indicators", "--n", "5", "--variant", "J",
                       "--format", "csv")
    assert first == second
