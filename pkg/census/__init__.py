# Inicialização do pacote census
"""
Censo em lote sobre fluxos graph6 e suítes de verificação dos teoremas.
"""

from .records import QUESTIONS, SCHEMA_HEADER, CensusRecord, CensusSummary, SkippedLine
from .runner import evaluate_graph, iter_census, load_cache, run_census, summary_line, write_census
from .suites import SUITES, SuiteInstance, SuiteReport, counterexample_suite, verify_theorems

__all__ = [
    "QUESTIONS",
    "SCHEMA_HEADER",
    "SUITES",
    "CensusRecord",
    "CensusSummary",
    "SkippedLine",
    "SuiteInstance",
    "SuiteReport",
    "evaluate_graph",
    "iter_census",
    "load_cache",
    "run_census",
    "write_census",
    "summary_line",
    "verify_theorems",
    "counterexample_suite",
]
