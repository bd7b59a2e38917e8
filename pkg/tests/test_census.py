import io
import json
import os
import sys

import pytest

# Adiciona o diretório raiz ao path para importação
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from census.records import SCHEMA_HEADER, CensusRecord, CensusSummary
from census.runner import evaluate_graph, load_cache, run_census, summary_line, write_census
from census.suites import (
    cartesian_suite,
    counterexample_suite,
    cycles_suite,
    families_suite,
    joins_suite,
    k2_suite,
    paths_suite,
    product_suite,
    verify_theorems,
)
from engine.fools import fools_number
from graphs.enumeration import enumerate_all, enumerate_connected
from graphs.generators import cartesian
from graphs.graph6 import write_graph6
from graphs.specs import parse_graph_spec


def _lines(n, connected=True):
    graphs = enumerate_connected(n) if connected else enumerate_all(n)
    return [write_graph6(g) + "\n" for g in graphs]


class TestEvaluateGraph:
    def test_k2(self):
        record = evaluate_graph("A_")
        assert record.n == 2
        assert record.connected
        assert record.alpha == 1
        assert record.f_value == 1
        assert record.solvable is True
        assert record.freely_solvable is True
        assert record.freely_nbhd_solvable is True
        assert record.error is None

    def test_disconnected(self):
        record = evaluate_graph("B?")
        assert not record.connected
        assert record.alpha is None
        assert record.f_value is None

    def test_question_subset(self):
        record = evaluate_graph("A_", questions=["alpha"])
        assert record.questions == ["alpha"]
        assert record.alpha == 1
        assert record.f_value is None
        assert record.solvable is None

    def test_cap_becomes_error(self):
        record = evaluate_graph(write_graph6(enumerate_all(5)[-1]), cap=3)
        assert record.error is not None


class TestRecords:
    def test_violations(self):
        record = CensusRecord(graph6="A_", n=2, connected=True, alpha=1, f_value=2)
        assert len(record.violations()) == 1
        record = CensusRecord(graph6="A_", n=2, connected=True, solvable=False, freely_solvable=True)
        assert len(record.violations()) == 1

    def test_threshold_report(self):
        summary = CensusSummary(connected=200, freely_solvable=100, freely_nbhd_solvable=98)
        assert summary.nbhd_over_freely == pytest.approx(0.98)
        assert summary.threshold_report(0.98) == {"over_freely_solvable": True, "over_connected": False}
        assert CensusSummary().threshold_report(0.98) == {"over_freely_solvable": None, "over_connected": None}

    def test_summary_line(self):
        data = json.loads(summary_line(CensusSummary(connected=1, freely_solvable=1), 0.5))
        assert data["threshold"] == 0.5
        assert data["meets_threshold"]["over_connected"] is False


class TestRunCensus:
    def test_six_vertices(self):
        records, summary = run_census(_lines(6), jobs=1)
        assert len(records) == 112
        assert summary.connected == 112
        assert summary.freely_solvable == 103
        assert summary.freely_nbhd_solvable == 95
        assert summary.violations == []
        assert sum(summary.f_distribution.values()) == 112

    @pytest.mark.slow
    def test_seven_vertices(self):
        records, summary = run_census(_lines(7), jobs=2)
        assert summary.connected == 853
        assert summary.freely_solvable == 820
        assert summary.freely_nbhd_solvable == 796

    def test_disconnected_graphs_are_counted_but_not_played(self):
        _, summary = run_census(_lines(4, connected=False), jobs=1)
        assert summary.total == 11
        assert summary.connected == 6

    def test_bad_line_is_skipped(self):
        records, summary = run_census(["A_\n", "!!!\n", "B?\n"], jobs=1)
        assert [r.graph6 for r in records] == ["A_", "B?"]
        assert len(summary.skipped) == 1
        assert summary.skipped[0].line_number == 2
        assert summary.total == 2
        assert summary.connected == 1

    def test_parallel_matches_serial(self):
        serial, serial_summary = run_census(_lines(5), jobs=1)
        parallel, parallel_summary = run_census(_lines(5), jobs=2)
        assert [r.stable_dict() for r in serial] == [r.stable_dict() for r in parallel]
        assert serial_summary.freely_solvable == parallel_summary.freely_solvable

    def test_unknown_question(self):
        with pytest.raises(ValueError):
            run_census(["A_\n"], questions=["colour"], jobs=1)

    def test_output_and_cache(self, tmp_path):
        records, _ = run_census(_lines(4), jobs=1)
        out = io.StringIO()
        assert write_census(records, out) == 6
        lines = out.getvalue().splitlines()
        assert lines[0] == SCHEMA_HEADER
        assert json.loads(lines[1])["graph6"] == records[0].graph6

        cache_file = tmp_path / "census.jsonl"
        cache_file.write_text(out.getvalue(), encoding="utf-8")
        assert len(load_cache(str(cache_file))) == 6

        again, summary = run_census(_lines(4), jobs=1, cache_path=str(cache_file))
        assert summary.cached == 6
        assert [r.stable_dict() for r in again] == [r.stable_dict() for r in records]

    def test_cache_is_keyed_by_questions(self, tmp_path):
        records, _ = run_census(["A_\n"], questions=["alpha"], jobs=1)
        cache_file = tmp_path / "census.jsonl"
        with open(cache_file, "w", encoding="utf-8") as f:
            write_census(records, f)
        _, summary = run_census(["A_\n"], jobs=1, cache_path=str(cache_file))
        assert summary.cached == 0

    def test_missing_cache(self, tmp_path):
        assert load_cache(str(tmp_path / "nada.jsonl")) == {}
        assert load_cache(None) == {}


class TestSuites:
    def test_families(self):
        report = families_suite()
        assert report.passed, report.failures
        assert len(report.instances) > 10

    def test_counterexamples(self):
        report = counterexample_suite()
        assert report.passed, report.failures
        values = {item.instance: (item.computed, item.claimed) for item in report.instances}
        # os pares com estrela ficam acima de F(G)F(H) - 1
        assert values["star:3 □ path:3"] == (6, 5)
        assert values["star:3 □ paw"] == (7, 5)
        assert values["path:2 □ path:2"] == (1, None)

    def test_k4_minus_e_square_exceeds_product(self):
        g = parse_graph_spec("k4_minus_e")
        product, _ = cartesian(g, g)
        assert fools_number(g).f_value == 2
        assert fools_number(product).f_value == 6
        assert fools_number(product, method="dual").f_value == 6

    def test_k2(self):
        report = k2_suite()
        assert report.passed, report.failures

    def test_paths(self):
        report = paths_suite()
        assert report.passed, report.failures

    def test_small_joins(self):
        report = joins_suite(max_side=3)
        assert report.passed, report.failures
        assert report.skipped == []

    def test_small_cartesian(self):
        report = cartesian_suite(max_n=3, ks=(3,))
        assert report.passed, report.failures

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            verify_theorems("nope")

    @pytest.mark.slow
    def test_joins(self):
        assert joins_suite().passed

    @pytest.mark.slow
    def test_cartesian(self):
        assert cartesian_suite().passed

    @pytest.mark.slow
    def test_products(self):
        report = product_suite()
        assert report.passed, report.failures
        square = next(item for item in report.instances if item.instance == "k4_minus_e □ k4_minus_e")
        assert (square.computed, square.claimed) == (6, 4)

    @pytest.mark.slow
    def test_cycles(self):
        report = cycles_suite()
        assert report.passed, report.failures
