import logging
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterator, List, Tuple

from graphs.graph import Graph, bits, popcount
from graphs.invariants import is_connected
from utils.errors import GraphError

logger = logging.getLogger(__name__)

MAX_ENUMERATION_N = 7


def _refined_colors(adj: Tuple[int, ...]) -> List[int]:
    """Refinamento de cores a partir do grau até estabilizar (invariante por isomorfismo)."""
    n = len(adj)
    colors = [popcount(a) for a in adj]
    classes = len(set(colors))
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in bits(adj[v])))) for v in range(n)]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [palette[sig] for sig in signatures]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def _code(adj: Tuple[int, ...], order: Tuple[int, ...]) -> int:
    # bits do triângulo superior na nova rotulagem, coluna a coluna
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_form(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    """
    Forma canônica: menor código de adjacência entre as permutações que
    respeitam as classes do refinamento de cores.

    Returns:
        Tuple[int, Tuple[int, ...]]: (código, ordem dos vértices originais)
    """
    colors = _refined_colors(g.adj)
    cells: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]

    best_code, best_order = None, None
    for parts in product(*(permutations(cell) for cell in ordered_cells)):
        order = tuple(v for part in parts for v in part)
        code = _code(g.adj, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return best_code, best_order


def relabel(g: Graph, order: Tuple[int, ...]) -> Graph:
    """Novo grafo em que o vértice i é o vértice order[i] de g."""
    position = {old: new for new, old in enumerate(order)}
    return Graph.from_edges(g.n, ((position[u], position[v]) for u, v in g.edges()))


@lru_cache(maxsize=None)
def enumerate_all(n: int) -> Tuple[Graph, ...]:
    """
    Um representante (rotulagem canônica) por classe de isomorfismo de grafos com n vértices.

    Cresce a partir de n-1 acrescentando um vértice com cada vizinhança possível.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise GraphError(f"Enumeração suportada para 1 <= n <= {MAX_ENUMERATION_N}, recebido {n}")
    if n == 1:
        return (Graph(1, [0]),)

    seen: Dict[int, Graph] = {}
    for base in enumerate_all(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = [a | ((nbrs >> v & 1) << (n - 1)) for v, a in enumerate(base.adj)] + [nbrs]
            candidate = Graph(n, adj)
            code, order = canonical_form(candidate)
            if code not in seen:
                seen[code] = relabel(candidate, order)
    logger.debug(f"{len(seen)} grafos com {n} vértices")
    return tuple(seen[code] for code in sorted(seen))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Grafos conexos com n vértices, um por classe de isomorfismo (1, 1, 2, 6, 21, 112, 853)."""
    for g in enumerate_all(n):
        if is_connected(g):
            yield g
