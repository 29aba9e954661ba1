"""End-to-end tests of the command-line driver via main(argv)."""

import json

import pytest

from incgb.cli import EXIT_BUDGET, EXIT_NO, EXIT_OK, EXIT_USAGE, REPORT_FORMAT, main

from conftest import MEMBER_H, MEMBER_TEXT, TORIC_TEXT, X_RING_TEXT


@pytest.fixture
def toric_file(tmp_path):
    f = tmp_path / "toric.egb"
    f.write_text(TORIC_TEXT)
    return str(f)


@pytest.fixture
def member_file(tmp_path):
    f = tmp_path / "member.egb"
    f.write_text(MEMBER_TEXT)
    return str(f)


class TestSolve:
    def test_exit_and_output(self, toric_file, capsys):
        assert main(["solve", toric_file]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("ring {")
        assert "generators {" in out
        assert out.count(";") >= 6  # six basis elements

    def test_json_report(self, toric_file, capsys):
        assert main(["solve", toric_file, "--json"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["format"] == REPORT_FORMAT
        assert report["status"] == "complete"
        assert report["algorithm"] == "buchberger"
        assert len(report["basis"]) == 6
        assert report["stats"]["pairs_processed"] > 0
        assert report["options"]["max_width"] == 16

    def test_signature_algorithm(self, toric_file, capsys):
        assert main(["solve", toric_file, "--algorithm", "signature", "--json"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["status"] == "complete"
        assert "y[3,1]*y[2,0] - y[3,0]*y[2,1]" in report["basis"]

    def test_budget_exit(self, toric_file, capsys):
        assert main(["solve", toric_file, "--max-pairs", "1", "--json"]) == EXIT_BUDGET
        captured = capsys.readouterr()
        report = json.loads(captured.out)
        assert report["status"] == "budget_exhausted"
        assert report["basis"]  # partial basis still reported
        assert "budget" in captured.err

    def test_report_file_byte_stable(self, toric_file, tmp_path, capsys):
        r1, r2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["solve", toric_file, "--report", str(r1)]) == EXIT_OK
        assert main(["solve", toric_file, "--report", str(r2)]) == EXIT_OK
        capsys.readouterr()
        assert r1.read_bytes() == r2.read_bytes()

    def test_stdout_byte_stable(self, toric_file, capsys):
        main(["solve", toric_file])
        a = capsys.readouterr().out
        main(["solve", toric_file])
        b = capsys.readouterr().out
        assert a == b

    def test_unknown_algorithm_in_options(self, tmp_path, capsys):
        f = tmp_path / "bad.egb"
        f.write_text(X_RING_TEXT + "\noptions { algorithm = nonsense; }\n")
        assert main(["solve", str(f)]) == EXIT_USAGE


class TestReduce:
    def test_member_h_reduces_to_zero(self, member_file, capsys):
        assert main(["reduce", member_file, "--poly", MEMBER_H]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "0"

    def test_nonmember_keeps_remainder(self, member_file, capsys):
        assert main(["reduce", member_file, "--poly", "x[0] + 1"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "x[0] + 1"

    def test_trailing_garbage_in_poly(self, member_file, capsys):
        assert main(["reduce", member_file, "--poly", "x[0] x"]) == EXIT_USAGE


class TestMember:
    def test_positive(self, member_file):
        assert main(["member", member_file, "--poly", MEMBER_H]) == EXIT_OK

    def test_negative(self, member_file):
        assert main(["member", member_file, "--poly", "x[0] + 1"]) == EXIT_NO


class TestOrbit:
    def test_width_three(self, tmp_path, capsys):
        f = tmp_path / "x.egb"
        f.write_text(X_RING_TEXT)
        assert main(["orbit", str(f), "--width", "3"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["x[0]", "x[1]", "x[2]"]

    def test_width_below_generator(self, member_file, capsys):
        assert main(["orbit", member_file, "--width", "1"]) == EXIT_USAGE


class TestCheck:
    def test_not_an_egb(self, member_file, capsys):
        assert main(["check", member_file]) == EXIT_NO
        assert capsys.readouterr().out.strip() == "not an EGB"

    def test_is_an_egb(self, toric_file, tmp_path, capsys):
        main(["solve", toric_file])
        solved = tmp_path / "solved.egb"
        solved.write_text(capsys.readouterr().out)
        assert main(["check", str(solved)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "EGB"


class TestErrors:
    def test_missing_file(self, capsys):
        assert main(["solve", "/nonexistent/input.egb"]) == EXIT_USAGE
        assert "cannot read" in capsys.readouterr().err

    def test_parse_error_with_location(self, tmp_path, capsys):
        f = tmp_path / "broken.egb"
        f.write_text(X_RING_TEXT.replace("x[0];", "x[0] + ;"))
        assert main(["solve", str(f)]) == EXIT_USAGE
        # diagnostics carry file:line:col
        assert str(f) in capsys.readouterr().err

    def test_usage_error(self, capsys):
        assert main(["solve"]) == EXIT_USAGE

    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate", "x"]) == EXIT_USAGE
