"""Estratégias do hypothesis e utilitários compartilhados pelos testes."""

import networkx as nx
from hypothesis import strategies as st

from graphs.graph import Graph
from graphs.invariants import is_connected


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])
    if connected and not is_connected(g):
        # liga as componentes por um caminho 0-1-...-(n-1)
        edges = set(g.edges()) | {(i, i + 1) for i in range(n - 1)}
        g = Graph.from_edges(n, edges)
    return g


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out
