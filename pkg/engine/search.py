import logging
import sys
from typing import Dict, List, Optional, Set

from engine.models import Config, Jump, JumpSequence, SolvabilityProfile, WeakHypothesisReport, single_hole
from engine.moves import iter_jumps
from graphs.graph import Graph, bits
from graphs.invariants import is_connected
from utils.common import get_engine_config
from utils.errors import DisconnectedGraphError, SearchCapExceeded

logger = logging.getLogger(__name__)

# profundidade da DFS é limitada pelo número de pinos
sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


def require_playable(g: Graph, cap: Optional[int] = None) -> None:
    """Rejeita grafos desconexos ou acima do limite de busca."""
    limit = cap if cap is not None else get_engine_config()["search_cap"]
    if g.n > limit:
        raise SearchCapExceeded("busca exaustiva", g.n, limit)
    if not is_connected(g):
        raise DisconnectedGraphError(f"O jogo exige grafo conexo (n={g.n}, arestas={g.edge_count})")


class PegSolver:
    """
    Busca em profundidade memoizada sobre bitsets de pinos.

    A memória guarda, por conjunto-alvo, os estados dos quais nenhum pino
    único dentro do alvo é alcançável. Vive enquanto o solver viver.
    """

    def __init__(self, g: Graph, cap: Optional[int] = None, check: bool = True):
        if check:
            require_playable(g, cap)
        self.g = g
        self._adj = g.adj
        self._full = g.full_mask
        self._dead: Dict[int, Set[int]] = {}

    def reduce(self, pegs: Config, targets: Optional[int] = None) -> Optional[JumpSequence]:
        """
        Procura saltos que reduzam `pegs` a um único pino dentro de `targets`.

        A ordem de exploração é a ordem lexicográfica dos saltos, então a
        testemunha devolvida é a primeira nessa ordem.

        Returns:
            Optional[JumpSequence]: a sequência, ou None se não existir
        """
        targets = self._full if targets is None else targets
        dead = self._dead.setdefault(targets, set())
        adj, full = self._adj, self._full
        path: List[Jump] = []

        def dfs(state: int) -> bool:
            if state & (state - 1) == 0:
                return bool(state & targets)
            if state in dead:
                return False
            for j in iter_jumps(adj, full, state):
                path.append(j)
                if dfs(state ^ (1 << j.x) ^ (1 << j.y) ^ (1 << j.z)):
                    return True
                path.pop()
            dead.add(state)
            return False

        if dfs(pegs):
            return path
        return None

    def solvable_from(self, pegs: Config, targets: Optional[int] = None) -> bool:
        return self.reduce(pegs, targets) is not None

    def final_vertices(self, pegs: Config) -> List[int]:
        """Vértices onde pode terminar o último pino a partir de `pegs`."""
        return [v for v in range(self.g.n) if self.reduce(pegs, 1 << v) is not None]

    def profile(self) -> SolvabilityProfile:
        g = self.g
        solvable_holes, nbhd_holes = [], []
        for v in range(g.n):
            start = single_hole(g, v)
            if self.reduce(start) is None:
                continue
            solvable_holes.append(v)
            if self.reduce(start, g.closed_neighborhood(v)) is not None:
                nbhd_holes.append(v)
        logger.debug(f"Perfil: {len(solvable_holes)}/{g.n} buracos resolvíveis, {len(nbhd_holes)} na vizinhança")
        return SolvabilityProfile(
            solvable=bool(solvable_holes),
            freely_solvable=len(solvable_holes) == g.n,
            freely_nbhd_solvable=len(nbhd_holes) == g.n,
            solvable_holes=solvable_holes,
            nbhd_solvable_holes=nbhd_holes,
        )


def reachable_to_single_peg(
    g: Graph, c: Config, targets: Optional[int] = None, cap: Optional[int] = None
) -> Optional[JumpSequence]:
    """Sequência legal que termina com exatamente um pino (em `targets`, se dado)."""
    return PegSolver(g, cap).reduce(c, targets)


def solvability_profile(g: Graph, cap: Optional[int] = None) -> SolvabilityProfile:
    """
    Resolvível, livremente resolvível e livremente resolvível na vizinhança.

    Raises:
        DisconnectedGraphError: G desconexo
        SearchCapExceeded: G acima do limite de busca
    """
    return PegSolver(g, cap).profile()


def neighbor_hole_solvable(g: Graph, v: int, solver: Optional[PegSolver] = None) -> Optional[int]:
    """Algum vizinho u de v tal que o buraco único em u é resolvível (ou None)."""
    solver = solver or PegSolver(g)
    for u in bits(g.neighbors(v)):
        if solver.solvable_from(single_hole(g, u)):
            return u
    return None


def weak_product_hypothesis(g: Graph, s_g: int, cap: Optional[int] = None) -> WeakHypothesisReport:
    """
    Versão enfraquecida da hipótese sobre G no limite F(G□H) >= F(G)F(H):
    basta que exista v, destino final de alguma redução dos buracos em S_G,
    com um vizinho u cujo buraco único é resolvível.
    """
    solver = PegSolver(g, cap)
    finals = solver.final_vertices(g.full_mask & ~s_g)
    for v in finals:
        u = neighbor_hole_solvable(g, v, solver)
        if u is not None:
            return WeakHypothesisReport(final_vertices=finals, satisfied=True, witness=(v, u))
    return WeakHypothesisReport(final_vertices=finals, satisfied=False)
