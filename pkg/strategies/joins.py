"""
Estratégias construtivas para junções G∨H.

F(G∨H) = α(G∨H), exceto quando os dois lados são independentes com pelo
menos dois vértices cada (K_{n,m}), caso em que F = α - 1.
"""

import logging
from typing import List, Optional

from engine.models import Config, Jump
from graphs.generators import join
from graphs.graph import Graph, bits, popcount
from graphs.invariants import independence_number
from strategies.certificates import StrategyCertificate, certify
from strategies.complete import clique_solve
from utils.errors import StrategyError

logger = logging.getLogger(__name__)


def _first(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class _Play:
    def __init__(self, graph: Graph, start: Config):
        self.graph = graph
        self.pegs = start
        self.seq: List[Jump] = []

    def jump(self, x: int, y: int, z: int) -> None:
        self.seq.append(Jump(x, y, z))
        self.pegs ^= (1 << x) | (1 << y) | (1 << z)

    def on(self, side: int) -> int:
        return self.pegs & side


def _sweep(play: _Play, a_side: int, b_side: int) -> None:
    """O único pino de A salta sobre os pinos de B, sempre caindo num buraco de A."""
    while play.on(b_side):
        a = _first(play.on(a_side))
        b = _first(play.on(b_side))
        hole = _first(a_side & ~play.pegs)
        play.jump(a, b, hole)


def _with_apex(play: _Play, g_side: int, z: int) -> None:
    """G∨K_1 com G não independente: pares de saltos passando por z."""
    while popcount(play.on(g_side)) >= 2:
        pegs = play.on(g_side)
        q = next(v for v in bits(pegs) if _adjacent_hole(play, v, g_side) is not None)
        h = _adjacent_hole(play, q, g_side)
        p = _first(pegs & ~(1 << q))
        play.jump(p, z, h)
        play.jump(q, h, z)
    if play.on(g_side):
        p = _first(play.on(g_side))
        play.jump(p, z, _first(g_side & ~play.pegs))


def _adjacent_hole(play: _Play, v: int, side: int) -> Optional[int]:
    holes = play.graph.adj[v] & side & ~play.pegs
    return _first(holes) if holes else None


def _general(play: _Play, a_side: int, b_side: int, a_has_edge: bool) -> None:
    g = play.graph
    if a_has_edge:
        x = _first(play.on(a_side))
        y = _first(a_side & ~play.pegs)
        play.jump(x, _first(play.on(b_side)), y)
        while popcount(play.on(a_side)) > 1:
            b = _first(play.on(b_side))
            a = _first(play.on(a_side))
            play.jump(b, a, _first(b_side & ~play.pegs))
    else:
        p, q = next((u, v) for u in bits(b_side) for v in bits(g.adj[u] & b_side))
        play.jump(p, q, _first(a_side))
    _sweep(play, a_side, b_side)


def solve_join(g: Graph, h: Graph, s: Optional[int] = None) -> StrategyCertificate:
    """
    Certificado de que S é um estado terminal de G∨H.

    Os vértices de G vêm primeiro (0..|G|-1) e os de H depois. Para K_{n,m}
    com n, m >= 2 os buracos iniciais são n - 1 vértices da parte maior e o
    certificado prova F = α - 1.

    Args:
        g (Graph): primeiro lado
        h (Graph): segundo lado
        s (Optional[int]): máscara de um conjunto independente máximo de
            G∨H contido num dos lados; por omissão o primeiro máximo

    Returns:
        StrategyCertificate: saltos dos buracos em S até um único pino

    Raises:
        StrategyError: S não independente, não máximo ou espalhado pelos dois lados
    """
    if g.n == 0 or h.n == 0:
        raise StrategyError("Os dois lados da junção precisam de vértices")
    joined = join(g, h)
    g_side = g.full_mask
    h_side = h.full_mask << g.n
    alpha, maximum = independence_number(joined)
    bipartite = g.edge_count == 0 and h.edge_count == 0 and g.n >= 2 and h.n >= 2

    if s is None:
        s = maximum[0]
    if not joined.is_independent(s):
        raise StrategyError("S não é independente em G∨H")
    if s & g_side and s & h_side:
        raise StrategyError("S precisa estar contido num único lado")
    a_side, b_side = (g_side, h_side) if s & g_side else (h_side, g_side)

    if bipartite:
        if popcount(s) == alpha:
            s &= ~(1 << (s.bit_length() - 1))
        if popcount(s) != alpha - 1 or popcount(a_side) != alpha:
            raise StrategyError(f"Em K_{{n,m}} os buracos devem ser n - 1 = {alpha - 1} vértices da parte maior")
    elif popcount(s) != alpha:
        raise StrategyError(f"S tem {popcount(s)} vértices, α(G∨H) = {alpha}")

    start = joined.full_mask & ~s
    play = _Play(joined, start)

    if bipartite:
        kind = "join_bipartite"
        _sweep(play, a_side, b_side)
    elif alpha == 1:
        kind = "join_complete"
        play.seq = clique_solve(range(joined.n), start)
    elif popcount(b_side) == 1:
        kind = "join_apex"
        _with_apex(play, a_side, _first(b_side))
    else:
        kind = "join"
        a_graph = g if a_side == g_side else h
        _general(play, a_side, b_side, a_graph.edge_count > 0)

    size = popcount(s)
    logger.info(f"Junção |G|={g.n}, |H|={h.n}: {len(play.seq)} saltos, terminal de tamanho {size}")
    return certify(
        joined,
        f"G∨H (|G|={g.n}, |H|={h.n})",
        kind,
        start,
        play.seq,
        f"F(G∨H) >= {size}",
    )
