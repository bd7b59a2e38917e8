import logging
from typing import Iterator, List, Optional

from engine.models import Config, Jump
from graphs.graph import Graph, bits
from utils.errors import IllegalJumpError

logger = logging.getLogger(__name__)


def iter_jumps(adj, full: int, pegs: Config) -> Iterator[Jump]:
    """Saltos legais em ordem lexicográfica (x, y, z)."""
    holes = full & ~pegs
    for x in bits(pegs):
        for y in bits(adj[x] & pegs):
            for z in bits(adj[y] & holes):
                yield Jump(x, y, z)


def has_jump(adj, full: int, pegs: Config) -> bool:
    holes = full & ~pegs
    for y in bits(pegs):
        if adj[y] & pegs and adj[y] & holes:
            return True
    return False


def legal_jumps(g: Graph, c: Config) -> List[Jump]:
    return list(iter_jumps(g.adj, g.full_mask, c))


def check_jump(g: Graph, c: Config, j: Jump, index: Optional[int] = None) -> None:
    """Levanta IllegalJumpError com o primeiro motivo de ilegalidade encontrado."""
    x, y, z = j
    for v in (x, y, z):
        if not 0 <= v < g.n:
            raise IllegalJumpError(f"vértice {v} fora do grafo", index)
    if not g.has_edge(x, y):
        raise IllegalJumpError(f"não-aresta {x}{y}", index)
    if not g.has_edge(y, z):
        raise IllegalJumpError(f"não-aresta {y}{z}", index)
    if x == z:
        raise IllegalJumpError(f"origem e destino iguais em {x}{y}{z}", index)
    if not c >> x & 1:
        raise IllegalJumpError(f"sem pino em {x}", index)
    if not c >> y & 1:
        raise IllegalJumpError(f"sem pino em {y}", index)
    if c >> z & 1:
        raise IllegalJumpError(f"sem buraco em {z}", index)


def apply_jump(g: Graph, c: Config, j: Jump, index: Optional[int] = None) -> Config:
    """
    Aplica o salto j: x e y viram buracos e z recebe o pino.

    Raises:
        IllegalJumpError: pino ou buraco ausente, ou não-aresta
    """
    check_jump(g, c, j, index)
    return c ^ (1 << j.x) ^ (1 << j.y) ^ (1 << j.z)
