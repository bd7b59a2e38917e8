import logging
from typing import Dict, List, Optional, Tuple

from engine.models import Config, FoolsReport, Jump, UpperBoundReport, as_triples
from engine.moves import has_jump, iter_jumps
from engine.search import PegSolver, require_playable
from graphs.graph import Graph, bits, popcount
from graphs.invariants import independence_number, independent_sets_of_size

logger = logging.getLogger(__name__)

METHODS = ("forward", "dual")


def _walk_back(parents: Dict[int, Optional[Tuple[int, Jump]]], state: int) -> List[Jump]:
    seq = []
    while parents[state] is not None:
        prev, j = parents[state]
        seq.append(j)
        state = prev
    seq.reverse()
    return seq


def _forward(g: Graph) -> FoolsReport:
    """
    Varre os níveis de número de pinos, do maior para o menor, partindo de
    todos os buracos únicos ao mesmo tempo; o primeiro nível com um estado
    morto dá F(G).
    """
    adj, full = g.adj, g.full_mask
    parents: Dict[int, Optional[Tuple[int, Jump]]] = {}
    level = sorted(full ^ (1 << v) for v in range(g.n))
    for s in level:
        parents[s] = None

    while level:
        dead = [s for s in level if not has_jump(adj, full, s)]
        if dead:
            terminal = dead[0]
            seq = _walk_back(parents, terminal)
            start = terminal
            for j in reversed(seq):
                start ^= (1 << j.x) | (1 << j.y) | (1 << j.z)
            hole = (full & ~start).bit_length() - 1
            logger.debug(f"F={popcount(terminal)} (avanço), {len(parents)} estados visitados")
            return FoolsReport(
                f_value=popcount(terminal),
                witness_hole=hole,
                terminal=list(bits(terminal)),
                witness_sequence=as_triples(seq),
                method="forward",
            )
        nxt = set()
        for s in level:
            for j in iter_jumps(adj, full, s):
                t = s ^ (1 << j.x) ^ (1 << j.y) ^ (1 << j.z)
                if t not in parents:
                    parents[t] = (s, j)
                    nxt.add(t)
        level = sorted(nxt)
    raise AssertionError("busca para frente terminou sem estado morto")


def _dual(g: Graph, solver: PegSolver) -> FoolsReport:
    """
    T é estado terminal sse os buracos em T se reduzem a um pino; percorre os
    conjuntos independentes por tamanho decrescente. Invertendo a redução
    obtém-se o jogo a partir do buraco único.
    """
    alpha, maximum = independence_number(g)
    for size in range(alpha, -1, -1):
        candidates = maximum if size == alpha else independent_sets_of_size(g, size)
        for terminal in candidates:
            seq = solver.reduce(g.full_mask & ~terminal)
            if seq is None:
                continue
            final = g.full_mask & ~terminal
            for j in seq:
                final ^= (1 << j.x) | (1 << j.y) | (1 << j.z)
            # o mesmo salto leva o complemento do estado seguinte ao complemento do anterior
            forward = list(reversed(seq))
            logger.debug(f"F={size} (dual), terminal {list(bits(terminal))}")
            return FoolsReport(
                f_value=size,
                witness_hole=final.bit_length() - 1,
                terminal=list(bits(terminal)),
                witness_sequence=as_triples(forward),
                method="dual",
            )
    raise AssertionError("nenhum conjunto independente é terminal")


def fools_number(
    g: Graph, method: str = "forward", cap: Optional[int] = None, solver: Optional[PegSolver] = None
) -> FoolsReport:
    """
    Número de paciência do tolo F(G) com testemunha.

    Args:
        g (Graph): grafo conexo
        method (str): "forward" (níveis a partir dos buracos únicos) ou
            "dual" (conjuntos independentes decrescentes)
        cap (Optional[int]): limite de vértices
        solver (Optional[PegSolver]): solver a reaproveitar no método dual

    Returns:
        FoolsReport: valor, buraco inicial, estado terminal e sequência
    """
    if method not in METHODS:
        raise ValueError(f"Método desconhecido: {method}")
    require_playable(g, cap)
    if method == "forward":
        return _forward(g)
    return _dual(g, solver or PegSolver(g, check=False))


def terminal_states(g: Graph, cap: Optional[int] = None) -> Dict[int, List[int]]:
    """Todos os estados terminais alcançáveis de algum buraco único, agrupados por tamanho."""
    require_playable(g, cap)
    adj, full = g.adj, g.full_mask
    seen = set(full ^ (1 << v) for v in range(g.n))
    stack = list(seen)
    grouped: Dict[int, List[int]] = {}
    while stack:
        s = stack.pop()
        moved = False
        for j in iter_jumps(adj, full, s):
            moved = True
            t = s ^ (1 << j.x) ^ (1 << j.y) ^ (1 << j.z)
            if t not in seen:
                seen.add(t)
                stack.append(t)
        if not moved:
            grouped.setdefault(popcount(s), []).append(s)
    return {size: sorted(states) for size, states in sorted(grouped.items(), reverse=True)}


def upper_bound_check(g: Graph, cap: Optional[int] = None) -> UpperBoundReport:
    """
    α(G) e se a cota F(G) <= α(G) - 1 se aplica: α <= |V|-2 e o complemento
    de todo conjunto independente máximo também é independente.
    """
    alpha, maximum = independence_number(g, cap)
    applies = alpha <= g.n - 2 and all(g.is_independent(g.full_mask & ~a) for a in maximum)
    return UpperBoundReport(alpha=alpha, prop2_applies=applies, maximum_sets=len(maximum))


def is_dead(g: Graph, c: Config) -> bool:
    return not has_jump(g.adj, g.full_mask, c)
