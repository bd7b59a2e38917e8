import logging
from typing import Iterator, List, Optional, Tuple

from pydantic import BaseModel

from graphs.graph import Graph, bits, mask_of, popcount
from utils.common import get_engine_config
from utils.errors import SearchCapExceeded

logger = logging.getLogger(__name__)


class StructureReport(BaseModel):
    connected: bool
    bipartition: Optional[Tuple[List[int], List[int]]] = None
    ham_path: Optional[List[int]] = None
    ham_path_error: Optional[str] = None


def _check_cap(what: str, g: Graph, cap: Optional[int], key: str) -> None:
    limit = cap if cap is not None else get_engine_config()[key]
    if g.n > limit:
        raise SearchCapExceeded(what, g.n, limit)


def _greedy_clique_cover(adj, cand: int) -> int:
    """Número de cliques de uma cobertura gulosa; limita α do subgrafo induzido."""
    cliques = 0
    rem = cand
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        clique = low
        pool = rem & adj[v]
        while pool:
            u_low = pool & -pool
            clique |= u_low
            pool &= adj[u_low.bit_length() - 1]
        rem &= ~clique
        cliques += 1
    return cliques


def independence_number(g: Graph, cap: Optional[int] = None) -> Tuple[int, List[int]]:
    """
    Calcula α(G) e todos os conjuntos independentes máximos.

    Branch-and-bound no vértice de maior grau entre os candidatos, podado
    por cobertura gulosa por cliques. Empates com o melhor valor não são
    podados, então a lista devolvida contém todos os conjuntos máximos.

    Args:
        g (Graph): grafo
        cap (Optional[int]): limite de vértices (padrão: SOLITAIRE_EXACT_CAP)

    Returns:
        Tuple[int, List[int]]: (α, bitsets dos conjuntos máximos em ordem crescente)
    """
    _check_cap("independence_number", g, cap, "exact_cap")
    adj = g.adj
    best = 0
    found: List[int] = []

    def search(cand: int, chosen: int, count: int) -> None:
        nonlocal best, found
        if not cand:
            if count > best:
                best, found = count, [chosen]
            elif count == best:
                found.append(chosen)
            return
        if count + _greedy_clique_cover(adj, cand) < best:
            return
        pick, pick_deg = -1, -1
        for v in bits(cand):
            d = popcount(adj[v] & cand)
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick_deg == 0:
            # isolados entram em todo conjunto máximo que estende `chosen`
            search(0, chosen | cand, count + popcount(cand))
            return
        search(cand & ~adj[pick] & ~(1 << pick), chosen | (1 << pick), count + 1)
        search(cand & ~(1 << pick), chosen, count)

    search(g.full_mask, 0, 0)
    return best, sorted(found)


def independent_sets_of_size(g: Graph, size: int) -> Iterator[int]:
    """Todos os conjuntos independentes de tamanho `size`, em ordem lexicográfica."""

    def extend(start: int, allowed: int, chosen: int, missing: int) -> Iterator[int]:
        if missing == 0:
            yield chosen
            return
        for v in range(start, g.n):
            if popcount(allowed >> v) < missing:
                return
            if allowed >> v & 1:
                yield from extend(v + 1, allowed & ~g.adj[v], chosen | (1 << v), missing - 1)

    yield from extend(0, g.full_mask, 0, size)


def _colorable(g: Graph, k: int, order: List[int]) -> bool:
    colors = [-1] * g.n

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        blocked = {colors[u] for u in bits(g.adj[v])}
        # quebra de simetria: no máximo uma cor nova por passo
        for c in range(min(k, used + 1)):
            if c not in blocked:
                colors[v] = c
                if assign(i + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(g: Graph, cap: Optional[int] = None) -> int:
    """χ(G) por busca exata de k-colorações, k crescente."""
    _check_cap("chromatic_number", g, cap, "exact_cap")
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    k = 2
    while not _colorable(g, k, order):
        k += 1
    return k


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def bipartition(g: Graph) -> Optional[Tuple[int, int]]:
    """Devolve (X, Y) com |X| >= |Y| se G for bipartido; empate favorece a classe do vértice 0."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    x = mask_of(v for v in range(g.n) if side[v] == 0)
    y = g.full_mask & ~x
    if popcount(y) > popcount(x):
        x, y = y, x
    return x, y


def hamiltonian_path(g: Graph, cap: Optional[int] = None) -> Optional[List[int]]:
    """
    Caminho hamiltoniano por programação dinâmica em subconjuntos.

    ends[mask] guarda os vértices onde termina algum caminho que cobre
    exatamente `mask`. A reconstrução parte do menor vértice final, então
    o caminho devolvido começa nele.
    """
    _check_cap("hamiltonian_path", g, cap, "hampath_cap")
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return [0]
    adj = g.adj
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        for v in bits(e):
            for u in bits(adj[v] & ~mask):
                ends[mask | (1 << u)] |= 1 << u
    full = (1 << n) - 1
    if not ends[full]:
        return None

    mask = full
    cur = (ends[full] & -ends[full]).bit_length() - 1
    walk = [cur]
    while mask != (1 << cur):
        mask ^= 1 << cur
        options = ends[mask] & adj[cur]
        cur = (options & -options).bit_length() - 1
        walk.append(cur)
    return walk


def product_ham_path(g_path: List[int], k: int) -> List[int]:
    """
    Caminho hamiltoniano em zigue-zague de G□P_k a partir de um caminho de G.

    Percorre G(0) na ordem do caminho, sobe para G(1) pelo último vértice,
    percorre G(1) ao contrário, e assim por diante.
    """
    walk = []
    for w in range(k):
        order = g_path if w % 2 == 0 else list(reversed(g_path))
        walk += [v * k + w for v in order]
    return walk


def structure_checks(g: Graph, hampath_cap: Optional[int] = None) -> StructureReport:
    """Conectividade, bipartição e caminho hamiltoniano de uma vez só."""
    parts = bipartition(g)
    report = StructureReport(
        connected=is_connected(g),
        bipartition=(list(bits(parts[0])), list(bits(parts[1]))) if parts else None,
    )
    try:
        report.ham_path = hamiltonian_path(g, hampath_cap)
    except SearchCapExceeded as e:
        logger.warning(f"Caminho hamiltoniano não calculado: {e}")
        report.ham_path_error = str(e)
    return report
