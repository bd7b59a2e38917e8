"""
Composição de estratégias dos fatores: F(G□H) >= F(G)F(H) quando G é
livremente resolvível e H é livremente resolvível na vizinhança.
"""

import logging
from typing import List, Optional, Tuple

from engine.fools import fools_number
from engine.models import Jump, JumpSequence, single_hole
from engine.search import PegSolver
from graphs.generators import ProductLayout, cartesian
from graphs.graph import Graph, bits, popcount
from strategies.certificates import StrategyCertificate, certify
from utils.errors import StrategyError

logger = logging.getLogger(__name__)

FINISH_MODES = ("auto", "center", "neighbor")


def _final_vertex(start: int, seq: JumpSequence) -> int:
    state = start
    for j in seq:
        state ^= (1 << j.x) | (1 << j.y) | (1 << j.z)
    return state.bit_length() - 1


def _terminal_for(g: Graph, s: Optional[int], solver: PegSolver, name: str) -> Tuple[int, JumpSequence]:
    """Valida (ou escolhe) o terminal máximo e devolve a redução dos seus buracos."""
    report = fools_number(g, solver=solver, method="forward")
    if s is None:
        s = report.terminal_mask
    if popcount(s) != report.f_value:
        raise StrategyError(f"S_{name} tem {popcount(s)} vértices, F({name}) = {report.f_value}")
    if not g.is_independent(s):
        raise StrategyError(f"S_{name} = {list(bits(s))} não é independente em {name}")
    seq = solver.reduce(g.full_mask & ~s)
    if seq is None:
        raise StrategyError(f"S_{name} não é estado terminal de {name}")
    return s, seq


def _neighborhood_solution(h: Graph, w: int, solver: PegSolver, finish: str) -> JumpSequence:
    start = single_hole(h, w)
    if finish == "center":
        targets = 1 << w
    elif finish == "neighbor":
        targets = h.neighbors(w)
    else:
        targets = h.closed_neighborhood(w)
    seq = solver.reduce(start, targets)
    if seq is None:
        raise StrategyError(f"Sem solução de H a partir do buraco em {w} terminando em {finish}")
    return seq


def _in_h_copy(layout: ProductLayout, v: int, seq: JumpSequence) -> List[Jump]:
    enc = layout.encode
    return [Jump(enc(v, j.x), enc(v, j.y), enc(v, j.z)) for j in seq]


def _in_g_copy(layout: ProductLayout, w: int, seq: JumpSequence) -> List[Jump]:
    enc = layout.encode
    return [Jump(enc(j.x, w), enc(j.y, w), enc(j.z, w)) for j in seq]


def product_compose(
    g: Graph,
    h: Graph,
    s_g: Optional[int] = None,
    s_h: Optional[int] = None,
    finish: str = "auto",
) -> StrategyCertificate:
    """
    Certificado de que S_G × S_H é estado terminal de G□H.

    Só há busca nos fatores. Cada G(x), x em S_H, repete a mesma redução de
    G e deixa o pino em v; cada H(u), u != v, repete a mesma redução de H e
    deixa o pino em w. Sobram H(v) e G(w) cheios, resolvidos pelos 4-ciclos
    em torno de (v, w).

    Args:
        g (Graph): livremente resolvível, >= 2 vértices
        h (Graph): livremente resolvível na vizinhança, >= 2 vértices
        s_g (Optional[int]): terminal de tamanho F(G); por omissão o do fools_number
        s_h (Optional[int]): terminal de tamanho F(H); idem
        finish (str): onde termina a solução de H a partir do buraco em w:
            "center" (em w), "neighbor" (num vizinho w') ou "auto"

    Returns:
        StrategyCertificate: terminal de tamanho F(G)F(H)

    Raises:
        StrategyError: fator sem a propriedade exigida ou com menos de 2 vértices
    """
    if finish not in FINISH_MODES:
        raise StrategyError(f"Modo de término desconhecido: {finish}")
    if g.n < 2 or h.n < 2:
        raise StrategyError("Os dois fatores precisam de pelo menos 2 vértices")

    solver_g, solver_h = PegSolver(g), PegSolver(h)
    profile_g, profile_h = solver_g.profile(), solver_h.profile()
    if not profile_g.freely_solvable:
        raise StrategyError("G não é livremente resolvível")
    if not profile_h.freely_nbhd_solvable:
        raise StrategyError("H não é livremente resolvível na vizinhança")

    s_g, g_seq = _terminal_for(g, s_g, solver_g, "G")
    s_h, h_seq = _terminal_for(h, s_h, solver_h, "H")
    v = _final_vertex(g.full_mask & ~s_g, g_seq)
    w = _final_vertex(h.full_mask & ~s_h, h_seq)

    product, layout = cartesian(g, h)
    enc = layout.encode
    start = product.full_mask & ~layout.product_set(s_g, s_h)
    seq: List[Jump] = []

    for x in bits(s_h):
        seq += _in_g_copy(layout, x, g_seq)
    for u in range(g.n):
        if u != v:
            seq += _in_h_copy(layout, u, h_seq)

    v2 = next(bits(g.neighbors(v)))
    nbhd = _neighborhood_solution(h, w, solver_h, finish)
    end = _final_vertex(single_hole(h, w), nbhd)
    if end == w:
        w2 = next(bits(h.neighbors(w)))
        seq.append(Jump(enc(v, w), enc(v, w2), enc(v2, w2)))
        seq.append(Jump(enc(v2, w), enc(v2, w2), enc(v, w2)))
        seq += _in_h_copy(layout, v, nbhd)
    else:
        seq.append(Jump(enc(v, w), enc(v2, w), enc(v2, end)))
        seq += _in_h_copy(layout, v, nbhd)
        seq.append(Jump(enc(v2, end), enc(v, end), enc(v, w)))
    g_finish = solver_g.reduce(single_hole(g, v2))
    seq += _in_g_copy(layout, w, g_finish)

    size = popcount(s_g) * popcount(s_h)
    logger.info(f"Produto {g.n}x{h.n}: v={v}, w={w}, término em {end}, {len(seq)} saltos")
    return certify(
        product,
        "G□H",
        "product_compose",
        start,
        seq,
        f"F(G□H) >= F(G)F(H) = {popcount(s_g)}·{popcount(s_h)} = {size}",
    )
