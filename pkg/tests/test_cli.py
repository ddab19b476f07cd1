"""Command line interface: subcommands, formats, and exit codes."""

import json

import pytest

from shifted_tableaux.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEnum:
    def test_members(self, capsys):
        code, out, _ = run(capsys, "enum", "--outer", "2", "--n", "2")
        assert code == 0
        assert out.split("\n\n")[0].strip() == "1 1"
        assert "2 2" in out

    def test_count_only(self, capsys):
        code, out, _ = run(capsys, "enum", "--outer", "2", "--n", "2",
                           "--count-only")
        assert code == 0 and out.strip() == "3"

    def test_skew(self, capsys):
        code, out, _ = run(capsys, "enum", "--outer", "3,1", "--inner", "1",
                           "--n", "4", "--count-only")
        assert code == 0 and out.strip().isdigit()

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "enum", "--outer", "2",
                           "--n", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["count"] == 3


class TestApply:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "apply", "--op", "t1",
                           "--in", "1 1 2' 2\n2 3'\n3", "--n", "3")
        assert code == 0
        assert out.strip().splitlines() == ["1 1 1 2", "2 3'", "3"]

    def test_trace_lists_rules(self, capsys):
        code, out, _ = run(capsys, "apply", "--op", "t1", "--trace",
                           "--in", "1 1 2' 2\n2 3'\n3", "--n", "3")
        assert code == 0
        assert "S5" in out and "S3" in out

    def test_bad_word(self, capsys):
        code, _, err = run(capsys, "apply", "--op", "zap",
                           "--in", "1 2", "--n", "2")
        assert code == 2 and "error" in err


class TestSwitch:
    def test_golden(self, capsys):
        code, out, _ = run(capsys, "switch", "--s", "1 1 1 / 2",
                           "--t", ". . . 1 / . 1", "--n", "2", "--trace")
        assert code == 0
        assert "S1, S1, S7, S1" in out
        assert "1' 1" in out


class TestRectify:
    def test_straight_result(self, capsys):
        code, out, _ = run(capsys, "rectify", "--in", ". 1 2 / 2", "--n", "2")
        assert code == 0
        assert out.strip().splitlines()[0].startswith("1")

    def test_strategies_agree(self, capsys):
        res = []
        for strat in ("first", "last"):
            code, out, _ = run(capsys, "rectify", "--in", ". 1 2 / 2",
                               "--n", "2", "--strategy", strat)
            assert code == 0
            res.append(out.strip())
        assert res[0] == res[1]


class TestVerify:
    def test_schema_holds(self, capsys):
        code, out, _ = run(capsys, "verify", "--schema", "t{i} t{i} = e",
                           "--n", "2")
        assert code == 0 and "holds" in out

    def test_schema_fails(self, capsys):
        code, out, _ = run(capsys, "verify", "--schema", "(t1 t2)^6 = e",
                           "--n", "3")
        assert code == 1

    def test_preset(self, capsys):
        code, out, _ = run(capsys, "verify", "--preset", "evac-agreement",
                           "--n", "3")
        assert code == 0 and "PASS" in out


class TestSearch:
    def test_witness_found(self, capsys):
        code, out, _ = run(capsys, "search", "--schema", "(t1 t2)^6 = e",
                           "--n", "3", "--max-cells", "9")
        assert code == 0

    def test_budget_exhausted(self, capsys):
        code, out, _ = run(capsys, "search", "--schema", "t1 t1 = e",
                           "--n", "2", "--max-cells", "4")
        assert code == 1


class TestOrbit:
    def test_dot_output(self, capsys, tmp_path):
        dot = tmp_path / "orbit.dot"
        code, out, _ = run(capsys, "orbit", "--gens", "t1,t2",
                           "--in", "1 2\n3", "--n", "3", "--dot", str(dot))
        assert code == 0
        assert dot.read_text().startswith("digraph")


class TestErrors:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_invalid_tableau(self, capsys):
        code, _, err = run(capsys, "apply", "--op", "t1", "--in", "2 1",
                           "--n", "2")
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "rectify", "--in", "/nonexistent/t.txt",
                         "--n", "2")
        assert code == 2
