"""
Resolução de grafos completos com pino final escolhido e a limpeza de um
par de triângulos em P_2□K_3.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from engine.models import Config, Jump, JumpSequence
from graphs.graph import mask_of
from utils.errors import StrategyError

logger = logging.getLogger(__name__)


def clique_solve(vertices: Sequence[int], pegs: Config, target: Optional[int] = None) -> JumpSequence:
    """
    Reduz uma clique com exatamente um buraco a um pino em `target`.

    Args:
        vertices (Sequence[int]): vértices da clique (ids do grafo hospedeiro)
        pegs (Config): configuração do hospedeiro; só os bits da clique importam
        target (Optional[int]): onde deve ficar o último pino; None escolhe
            o buraco inicial (ou, para k = 4, o menor vértice permitido)

    Returns:
        JumpSequence: k - 2 saltos dentro da clique

    Raises:
        StrategyError: número de buracos diferente de 1 ou alvo impossível
    """
    k = len(vertices)
    holes = [v for v in vertices if not pegs >> v & 1]
    if len(holes) != 1:
        raise StrategyError(f"Clique de {k} vértices deveria ter um buraco, tem {len(holes)}")
    hole = holes[0]
    ordered = sorted(vertices)

    if k <= 2:
        peg = [v for v in ordered if v != hole]
        if target is not None and peg and target != peg[0]:
            raise StrategyError(f"Em K_{k} o pino final só pode ficar em {peg}")
        return []

    if k == 3:
        if target is not None and target != hole:
            raise StrategyError("Em K_3 o pino final fica obrigatoriamente no buraco inicial")
        a, b = [v for v in ordered if v != hole]
        return [Jump(a, b, hole)]

    if k == 4:
        if target is None:
            target = next(v for v in ordered if v != hole)
        if target == hole:
            raise StrategyError("Em K_4 o pino final não pode ficar no buraco inicial")
        x, y = [v for v in ordered if v not in (hole, target)]
        # o primeiro salto remove o pino do alvo, o segundo cai nele
        return [Jump(x, target, hole), Jump(y, hole, target)]

    if target is None:
        target = hole
    if target not in vertices:
        raise StrategyError(f"Alvo {target} fora da clique")

    seq: JumpSequence = []
    state = pegs

    def play(j: Jump) -> None:
        nonlocal state
        seq.append(j)
        state ^= (1 << j.x) | (1 << j.y) | (1 << j.z)

    if target == hole:
        a, b = [v for v in ordered if v != hole][:2]
        play(Jump(a, b, hole))
        c = next(v for v in ordered if v != target and state >> v & 1)
        play(Jump(c, target, a))
    else:
        a = next(v for v in ordered if v not in (target, hole))
        play(Jump(target, a, hole))

    rest = [v for v in ordered if v != target]
    while True:
        rest_pegs = [v for v in rest if state >> v & 1]
        if len(rest_pegs) == 2:
            break
        rest_holes = [v for v in rest if not state >> v & 1]
        play(Jump(rest_pegs[0], rest_pegs[1], rest_holes[0]))
    play(Jump(rest_pegs[0], rest_pegs[1], target))
    return seq


def kk_solve_with_target(k: int, hole: int, target: int) -> JumpSequence:
    """
    Resolve K_k a partir do buraco único em `hole` terminando em `target`.

    k >= 5: qualquer alvo; k = 4: qualquer alvo menos o buraco; k = 3: só o buraco.
    """
    if k < 3:
        raise StrategyError(f"k deve ser >= 3, recebido {k}")
    if not (0 <= hole < k and 0 <= target < k):
        raise StrategyError(f"Vértices fora de K_{k}: buraco {hole}, alvo {target}")
    return clique_solve(range(k), ((1 << k) - 1) ^ (1 << hole), target)


# P_2□K_3 local: lado 0 = vértices 0,1,2; lado 1 = vértices 3,4,5; (lado, i) -> 3*lado + i
def _vid(side: int, i: int) -> int:
    return 3 * side + i


@dataclass(frozen=True)
class ChoiceOption:
    final_pegs: int
    tail: Tuple[Jump, ...] = ()


@dataclass(frozen=True)
class ChoiceSet:
    """
    Resultado de p2k3_clear no lado mantido.

    Com uma opção, o resultado é fixo (1 ou 2 pinos). Com duas, sobra um
    pino cuja posição ainda será escolhida: cada opção guarda o último
    salto que a realiza.
    """

    options: Tuple[ChoiceOption, ...] = field(default_factory=tuple)

    @property
    def candidates(self) -> List[int]:
        if len(self.options) == 1:
            return [v for v in range(6) if self.options[0].final_pegs >> v & 1]
        return [opt.final_pegs.bit_length() - 1 for opt in self.options]

    @property
    def pending(self) -> bool:
        return len(self.options) > 1


def p2k3_clear(state: Config, clear_side: int) -> Tuple[JumpSequence, ChoiceSet]:
    """
    Esvazia um triângulo de P_2□K_3 deixando 1 ou 2 pinos no outro.

    Args:
        state (Config): pinos nos vértices locais 0..5
        clear_side (int): 0 ou 1, o triângulo a esvaziar

    Returns:
        Tuple[JumpSequence, ChoiceSet]: prefixo comum e as opções finais

    Raises:
        StrategyError: triângulo sem pino ou sem buraco, ou um pino de cada
            lado em posições não adjacentes (pinos independentes)
    """
    if clear_side not in (0, 1):
        raise StrategyError(f"Lado inválido: {clear_side}")
    c, kept = clear_side, 1 - clear_side
    t1 = [i for i in range(3) if state >> _vid(c, i) & 1]
    t2 = [i for i in range(3) if state >> _vid(kept, i) & 1]
    if not (1 <= len(t1) <= 2 and 1 <= len(t2) <= 2):
        raise StrategyError(f"Cada triângulo precisa de pino e buraco (pinos: {t1} e {t2})")
    if len(t1) == 1 and len(t2) == 1 and t1 != t2:
        raise StrategyError("Pinos formam um conjunto independente; a limpeza não se aplica")

    def single(seq: JumpSequence, kept_indices: Sequence[int]) -> Tuple[JumpSequence, ChoiceSet]:
        final = mask_of(_vid(kept, i) for i in kept_indices)
        return seq, ChoiceSet((ChoiceOption(final),))

    def choice(seq: JumpSequence, source: int) -> Tuple[JumpSequence, ChoiceSet]:
        options = tuple(
            ChoiceOption(1 << _vid(kept, d), (Jump(_vid(c, source), _vid(kept, source), _vid(kept, d)),))
            for d in range(3)
            if d != source
        )
        return seq, ChoiceSet(options)

    if len(t1) == 2:
        seq: JumpSequence = []
        if len(t2) == 2:
            h2 = next(i for i in range(3) if i not in t2)
            a, b = t2
            seq.append(Jump(_vid(kept, a), _vid(kept, b), _vid(kept, h2)))
            occupied = h2
        else:
            occupied = t2[0]
        q = next(i for i in t1 if i != occupied)
        p = next(i for i in t1 if i != q)
        seq.append(Jump(_vid(c, p), _vid(c, q), _vid(kept, q)))
        return single(seq, sorted((occupied, q)))

    i = t1[0]
    if len(t2) == 2:
        h = next(x for x in range(3) if x not in t2)
        if i != h:
            other = next(x for x in t2 if x != i)
            return single([Jump(_vid(c, i), _vid(kept, i), _vid(kept, h))], sorted((other, h)))
        a, b = t2
        return choice([Jump(_vid(kept, a), _vid(kept, b), _vid(kept, i))], i)
    return choice([], i)
