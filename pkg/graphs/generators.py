import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Tuple

from graphs.graph import Graph, bits, mask_of
from utils.errors import GraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProductLayout:
    """
    Numeração dos vértices de G□H: (v, w) -> v * hn + w.

    H(v) = {(v, w) : w} é a cópia de H sobre v; G(w) = {(v, w) : v} a cópia de G sobre w.
    Em G□K_k, H(v) é o K(v) usado nas estratégias.
    """

    gn: int
    hn: int

    def encode(self, v: int, w: int) -> int:
        return v * self.hn + w

    def decode(self, x: int) -> Tuple[int, int]:
        return divmod(x, self.hn)

    def copy_of_h(self, v: int) -> int:
        return ((1 << self.hn) - 1) << (v * self.hn)

    def copy_of_g(self, w: int) -> int:
        return mask_of(v * self.hn + w for v in range(self.gn))

    def lift(self, v: int, h_mask: int) -> int:
        """Leva um subconjunto de V(H) para a cópia H(v)."""
        return h_mask << (v * self.hn)

    def lift_g(self, w: int, g_mask: int) -> int:
        """Leva um subconjunto de V(G) para a cópia G(w)."""
        return mask_of(v * self.hn + w for v in bits(g_mask))

    def product_set(self, g_mask: int, h_mask: int) -> int:
        """S_G × S_H."""
        out = 0
        for v in bits(g_mask):
            out |= h_mask << (v * self.hn)
        return out


def _require_positive(family: str, *params: int) -> None:
    for p in params:
        if p <= 0:
            raise GraphError(f"Parâmetro inválido para {family}: {p}")


def complete(n: int) -> Graph:
    _require_positive("complete", n)
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _require_positive("empty", n)
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    _require_positive("path", n)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require_positive("cycle", n)
    if n < 3:
        raise GraphError(f"Ciclo exige pelo menos 3 vértices, recebido {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """K_{1,n}: centro 0, folhas 1..n."""
    _require_positive("star", n)
    return Graph.from_edges(n + 1, ((0, i) for i in range(1, n + 1)))


def complete_bipartite(n: int, m: int) -> Graph:
    """K_{n,m}: partes 0..n-1 e n..n+m-1."""
    _require_positive("complete_bipartite", n, m)
    return Graph.from_edges(n + m, ((i, n + j) for i in range(n) for j in range(m)))


def hypercube(d: int) -> Graph:
    _require_positive("hypercube", d)
    n = 1 << d
    return Graph.from_edges(n, ((x, x ^ (1 << i)) for x in range(n) for i in range(d) if x < x ^ (1 << i)))


def paw() -> Graph:
    # triângulo 0,1,2 com o pendente 3 ligado a 0
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def k4_minus_e() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): ciclo externo 0..n-1, raios i~n+i, estrela interna n+i ~ n+(i+k)%n."""
    _require_positive("generalized_petersen", n, k)
    if n < 3 or 2 * k >= n:
        raise GraphError(f"GP({n},{k}) exige n >= 3 e k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph.from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def octahedron() -> Graph:
    return Graph.from_edges(6, [e for e in combinations(range(6), 2) if e not in ((0, 1), (2, 3), (4, 5))])


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


def icosahedron() -> Graph:
    # 0 = topo, 1..5 anel superior, 6..10 anel inferior, 11 = base
    edges = []
    for i in range(5):
        upper, nxt_upper = 1 + i, 1 + (i + 1) % 5
        lower, nxt_lower = 6 + i, 6 + (i + 1) % 5
        edges += [(0, upper), (upper, nxt_upper), (lower, nxt_lower), (11, lower)]
        edges += [(upper, lower), (nxt_upper, lower)]
    return Graph.from_edges(12, edges)


FAMILIES: Dict[str, Tuple[int, Callable[..., Graph]]] = {
    "complete": (1, complete),
    "path": (1, path),
    "cycle": (1, cycle),
    "star": (1, star),
    "complete_bipartite": (2, complete_bipartite),
    "hypercube": (1, hypercube),
    "paw": (0, paw),
    "k4_minus_e": (0, k4_minus_e),
    "petersen": (0, petersen),
    "empty": (1, empty),
    "generalized_petersen": (2, generalized_petersen),
    "tetrahedron": (0, lambda: complete(4)),
    "cube": (0, lambda: hypercube(3)),
    "octahedron": (0, octahedron),
    "dodecahedron": (0, dodecahedron),
    "icosahedron": (0, icosahedron),
}

PLATONIC_SOLIDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def make_named(family: str, *params: int) -> Graph:
    """
    Constrói um grafo de uma família nomeada com numeração canônica.

    Args:
        family (str): nome da família (ver FAMILIES)
        *params (int): tamanhos exigidos pela família

    Returns:
        Graph: o grafo construído

    Raises:
        GraphError: família desconhecida, aridade errada ou tamanho não positivo
    """
    if family not in FAMILIES:
        raise GraphError(f"Família desconhecida: {family}")
    arity, builder = FAMILIES[family]
    if len(params) != arity:
        raise GraphError(f"{family} espera {arity} parâmetro(s), recebeu {len(params)}")
    return builder(*params)


def join(g: Graph, h: Graph) -> Graph:
    """G∨H: vértices de H deslocados por |V(G)|, todas as arestas cruzadas."""
    n = g.n + h.n
    g_full = g.full_mask
    h_side = h.full_mask << g.n
    adj: List[int] = [a | h_side for a in g.adj]
    adj += [(a << g.n) | g_full for a in h.adj]
    return Graph(n, adj)


def cartesian(g: Graph, h: Graph) -> Tuple[Graph, ProductLayout]:
    """G□H com a numeração de ProductLayout."""
    layout = ProductLayout(g.n, h.n)
    adj = [0] * (g.n * h.n)
    for v in range(g.n):
        for w in range(h.n):
            nbrs = layout.lift(v, h.adj[w])
            for v2 in bits(g.adj[v]):
                nbrs |= 1 << layout.encode(v2, w)
            adj[layout.encode(v, w)] = nbrs
    return Graph(len(adj), adj), layout
