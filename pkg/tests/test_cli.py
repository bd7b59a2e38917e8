import json
import os
import sys

import pytest

# Adiciona o diretório raiz ao path para importação
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from census.records import SCHEMA_HEADER
from graphs.enumeration import enumerate_connected
from graphs.graph6 import write_graph6
from solitaire_cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, dispatch


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    monkeypatch.delenv("SOLITAIRE_CACHE_DIR", raising=False)
    monkeypatch.delenv("SOLITAIRE_SEARCH_CAP", raising=False)
    monkeypatch.chdir(tmp_path)


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


class TestFoolsCommand:
    def test_path3(self, capsys):
        assert dispatch(["fools", "path:3"]) == EXIT_OK
        data = _json_out(capsys)
        assert data["f_value"] == 2
        assert data["terminal"] == [0, 2]

    def test_dual_method(self, capsys):
        assert dispatch(["fools", "path:3", "--method", "dual"]) == EXIT_OK
        assert _json_out(capsys)["method"] == "dual"

    def test_all_terminals(self, capsys):
        assert dispatch(["fools", "path:3", "--all-terminals"]) == EXIT_OK
        assert _json_out(capsys)["terminal_states"] == {"2": [[0, 2]], "1": [[0], [2]]}

    def test_graph6_literal(self, capsys):
        assert dispatch(["fools", "g6:A_"]) == EXIT_OK
        assert _json_out(capsys)["f_value"] == 1

    @pytest.mark.parametrize(
        "argv",
        [
            ["fools", "nope:3"],
            ["fools", "empty:2"],
            ["--cap", "2", "fools", "path:3"],
            ["fools", "path:3", "--method", "sideways"],
            ["frobnicate"],
        ],
    )
    def test_input_errors(self, argv, capsys):
        assert dispatch(argv) == EXIT_INPUT
        assert capsys.readouterr().out == ""


class TestSolveAndProfile:
    def test_unsolvable(self, capsys):
        assert dispatch(["solve", "path:3", "--holes", "1"]) == EXIT_OK
        data = _json_out(capsys)
        assert data["result"] == "unsolvable"
        assert data["sequence"] is None

    def test_solved(self, capsys):
        assert dispatch(["solve", "path:3", "--holes", "0"]) == EXIT_OK
        assert _json_out(capsys)["sequence"] == [[2, 1, 0]]

    def test_hole_outside_graph(self):
        assert dispatch(["solve", "path:3", "--holes", "7"]) == EXIT_INPUT
        assert dispatch(["solve", "path:3", "--holes", "a,b"]) == EXIT_INPUT

    def test_profile(self, capsys):
        assert dispatch(["profile", "cycle:12"]) == EXIT_OK
        data = _json_out(capsys)
        assert data["freely_solvable"] is True
        assert data["freely_nbhd_solvable"] is False

    def test_profile_experimental(self, capsys):
        assert dispatch(["profile", "path:3", "--experimental"]) == EXIT_OK
        data = _json_out(capsys)
        assert data["upper_bound"]["alpha"] == 2
        assert data["weak_hypothesis"]["satisfied"] is True


class TestStrategyAndCheck:
    def test_join_certificate_round_trip(self, capsys, tmp_path):
        assert dispatch(["strategy", "join", "path:3", "path:2"]) == EXIT_OK
        text = capsys.readouterr().out
        cert_file = tmp_path / "cert.json"
        cert_file.write_text(text, encoding="utf-8")

        assert dispatch(["check", str(cert_file)]) == EXIT_OK
        assert _json_out(capsys)["valid"] is True

        data = json.loads(text)
        data["jumps"] = list(reversed(data["jumps"]))
        cert_file.write_text(json.dumps(data), encoding="utf-8")
        assert dispatch(["check", str(cert_file)]) == EXIT_FAILED
        result = _json_out(capsys)
        assert result["valid"] is False
        assert result["error"].startswith("salto #0")

    def test_join_needs_two_graphs(self):
        assert dispatch(["strategy", "join", "path:3"]) == EXIT_INPUT

    def test_other_kinds(self, capsys):
        assert dispatch(["strategy", "cartesian", "path:3", "--k", "3"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["claim"]["kind"] == "cartesian_kk"
        assert dispatch(["strategy", "product", "path:2", "path:2"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["claim"]["terminal_size"] == 1
        assert dispatch(["strategy", "hampath", "path:4"]) == EXIT_OK
        capsys.readouterr()

    def test_strategy_precondition(self):
        assert dispatch(["strategy", "hampath", "path:3"]) == EXIT_INPUT

    def test_check_missing_or_malformed(self, tmp_path):
        assert dispatch(["check", str(tmp_path / "nada.json")]) == EXIT_INPUT
        bad = tmp_path / "bad.json"
        bad.write_text("{", encoding="utf-8")
        assert dispatch(["check", str(bad)]) == EXIT_INPUT


class TestCensusCommands:
    def test_enumerate(self, capsys):
        assert dispatch(["enumerate", "--n", "4"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 6
        assert lines == [write_graph6(g) for g in enumerate_connected(4)]

    def test_enumerate_all(self, capsys):
        assert dispatch(["enumerate", "--n", "4", "--all"]) == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 11

    def test_census_to_file(self, capsys, tmp_path):
        source = tmp_path / "in.g6"
        source.write_text("".join(write_graph6(g) + "\n" for g in enumerate_connected(4)), encoding="ascii")
        out = tmp_path / "out.jsonl"
        assert dispatch(["census", "--in", str(source), "--out", str(out), "--jobs", "1"]) == EXIT_OK
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == SCHEMA_HEADER
        assert len(lines) == 7
        summary = json.loads(capsys.readouterr().err.splitlines()[-1])
        assert summary["connected"] == 6

    def test_census_reuses_cache(self, capsys, tmp_path):
        source = tmp_path / "in.g6"
        source.write_text("A_\nBw\n", encoding="ascii")
        first = tmp_path / "first.jsonl"
        assert dispatch(["census", "--in", str(source), "--out", str(first), "--jobs", "1"]) == EXIT_OK
        capsys.readouterr()
        second = tmp_path / "second.jsonl"
        argv = ["census", "--in", str(source), "--out", str(second), "--jobs", "1", "--cache", str(first)]
        assert dispatch(argv) == EXIT_OK
        summary = json.loads(capsys.readouterr().err.splitlines()[-1])
        assert summary["cached"] == 2

    def test_census_missing_input(self, tmp_path):
        assert dispatch(["census", "--in", str(tmp_path / "nada.g6")]) == EXIT_INPUT

    def test_verify_families(self, capsys):
        assert dispatch(["verify", "--suite", "families"]) == EXIT_OK
        reports = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert [r["passed"] for r in reports] == [True]

    def test_verify_unknown_suite(self):
        assert dispatch(["verify", "--suite", "nope"]) == EXIT_INPUT
