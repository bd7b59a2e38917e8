import logging
from typing import Iterable, Iterator, List, Sequence, Tuple

from utils.errors import GraphError

logger = logging.getLogger(__name__)

# Conjuntos de vértices são bitsets inteiros (bit i = vértice i).
VertexSet = int


def bits(mask: int) -> Iterator[int]:
    """Itera os índices dos bits ligados em ordem crescente."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """
    Grafo simples imutável com vértices 0..n-1 e adjacência em bitsets.

    A igualdade é rotulada: dois grafos isomorfos com rótulos diferentes
    são distintos (o jogo depende dos rótulos).
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise GraphError(f"Número de vértices negativo: {n}")
        if len(adj) != n:
            raise GraphError(f"Esperadas {n} listas de adjacência, recebidas {len(adj)}")
        full = (1 << n) - 1
        for v, nbrs in enumerate(adj):
            if nbrs & ~full:
                raise GraphError(f"Vizinhança de {v} fora do intervalo 0..{n - 1}")
            if nbrs >> v & 1:
                raise GraphError(f"Laço no vértice {v}")
            for u in bits(nbrs):
                if not adj[u] >> v & 1:
                    raise GraphError(f"Adjacência assimétrica entre {v} e {u}")
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph é imutável")

    def __reduce__(self):
        return (Graph, (self._n, self._adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Aresta {u}{v} fora do intervalo 0..{n - 1}")
            if u == v:
                raise GraphError(f"Laço no vértice {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> int:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> int:
        """N[v] = N(v) ∪ {v}."""
        return self._adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(a) for a in self._adj) // 2

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if self._adj[v] & mask:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"
