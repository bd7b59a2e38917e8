# Inicialização do pacote graphs
"""
Representação de grafos, geradores, invariantes estruturais e graph6.
"""

from .enumeration import canonical_form, enumerate_all, enumerate_connected
from .generators import PLATONIC_SOLIDS, ProductLayout, cartesian, join, make_named
from .graph import Graph, VertexSet, bits, mask_of, popcount
from .graph6 import parse_graph6, read_graph6_lines, write_graph6
from .invariants import (
    StructureReport,
    bipartition,
    chromatic_number,
    hamiltonian_path,
    independence_number,
    independent_sets_of_size,
    is_connected,
    product_ham_path,
    structure_checks,
)
from .specs import parse_graph_spec

__all__ = [
    "Graph",
    "VertexSet",
    "ProductLayout",
    "PLATONIC_SOLIDS",
    "bits",
    "mask_of",
    "popcount",
    "make_named",
    "join",
    "cartesian",
    "independence_number",
    "independent_sets_of_size",
    "chromatic_number",
    "is_connected",
    "bipartition",
    "hamiltonian_path",
    "product_ham_path",
    "structure_checks",
    "StructureReport",
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
    "canonical_form",
    "enumerate_all",
    "enumerate_connected",
    "parse_graph_spec",
]
