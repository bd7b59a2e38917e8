"""
Bipartidos com caminho hamiltoniano: os vértices de índice ímpar, exceto o
primeiro, formam um estado terminal, então F(H) >= ⌈n/2⌉ - 1.
"""

import logging
from typing import List, Optional

from engine.models import Jump
from graphs.generators import cartesian, path
from graphs.graph import Graph, mask_of
from graphs.invariants import bipartition, hamiltonian_path, is_connected, product_ham_path
from strategies.certificates import StrategyCertificate, certify
from utils.errors import StrategyError

logger = logging.getLogger(__name__)


def _check_walk(h: Graph, walk: List[int]) -> None:
    if sorted(walk) != list(range(h.n)):
        raise StrategyError("O caminho não passa uma vez por cada vértice")
    for a, b in zip(walk, walk[1:]):
        if not h.has_edge(a, b):
            raise StrategyError(f"O caminho usa a não-aresta {a}-{b}")


def hampath_solve(h: Graph, walk: Optional[List[int]] = None, description: str = "H") -> StrategyCertificate:
    """
    O pino em v_1 percorre o caminho saltando os vértices pares; com n par
    termina com o salto v_n v_{n-1} v_{n-2}.

    Args:
        h (Graph): conexo, bipartido, com pelo menos 4 vértices
        walk (Optional[List[int]]): caminho hamiltoniano v_1..v_n; por omissão
            o devolvido por hamiltonian_path

    Returns:
        StrategyCertificate: terminal de tamanho ⌈n/2⌉ - 1
    """
    if h.n < 4:
        raise StrategyError(f"São necessários pelo menos 4 vértices, recebido {h.n}")
    if not is_connected(h) or bipartition(h) is None:
        raise StrategyError("O grafo precisa ser conexo e bipartido")
    if walk is None:
        walk = hamiltonian_path(h)
        if walk is None:
            raise StrategyError("O grafo não tem caminho hamiltoniano")
    _check_walk(h, walk)

    n = h.n
    terminal = mask_of(walk[i] for i in range(2, n, 2))
    seq = [Jump(walk[i], walk[i + 1], walk[i + 2]) for i in range(0, n - 2, 2)]
    if n % 2 == 0:
        seq.append(Jump(walk[n - 1], walk[n - 2], walk[n - 3]))

    size = (n + 1) // 2 - 1
    logger.debug(f"Caminho {walk}: terminal de tamanho {size}")
    return certify(
        h,
        description,
        "hampath",
        h.full_mask & ~terminal,
        seq,
        f"F({description}) >= ⌈{n}/2⌉ - 1 = {size}",
    )


def product_path_solve(g: Graph, k: int) -> StrategyCertificate:
    """
    G□P_k com G bipartido e com caminho hamiltoniano: o caminho em zigue-zague
    do produto leva a F(G□P_k) >= α(G□P_k) - 1.
    """
    if k < 2:
        raise StrategyError(f"P_k exige k >= 2, recebido {k}")
    g_walk = hamiltonian_path(g)
    if g_walk is None:
        raise StrategyError("G não tem caminho hamiltoniano")
    product, _ = cartesian(g, path(k))
    return hampath_solve(product, product_ham_path(g_walk, k), f"G□P_{k}")
