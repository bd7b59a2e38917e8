import json
import logging
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel

from engine.models import Config, Jump, as_triples, from_triples
from engine.moves import apply_jump
from graphs.graph import Graph, bits, popcount
from graphs.graph6 import parse_graph6, write_graph6
from utils.errors import IllegalJumpError, SolitaireError, StrategyError

logger = logging.getLogger(__name__)


class Claim(BaseModel):
    graph: str
    kind: str
    terminal_size: int
    statement: str


class StrategyCertificate(BaseModel):
    """
    Sequência explícita de saltos com configurações inicial e final.

    Os buracos iniciais formam o estado terminal afirmado; a sequência os
    reduz a um único pino.
    """

    claim: Claim
    graph6: str
    start: str
    jumps: List[Tuple[int, int, int]]
    end: str

    @property
    def start_config(self) -> Config:
        return int(self.start, 16)

    @property
    def end_config(self) -> Config:
        return int(self.end, 16)

    @property
    def sequence(self) -> List[Jump]:
        return from_triples(self.jumps)

    def graph(self) -> Graph:
        return parse_graph6(self.graph6)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True)


def replay(g: Graph, start: Config, seq: Sequence[Jump]) -> Config:
    """
    Aplica os saltos em ordem.

    Raises:
        IllegalJumpError: primeiro salto ilegal, com seu índice e motivo
    """
    state = start
    for index, j in enumerate(seq):
        state = apply_jump(g, state, Jump(*j), index)
    return state


def certify(g: Graph, description: str, kind: str, start: Config, seq: Sequence[Jump], statement: str) -> StrategyCertificate:
    """Reproduz a sequência e empacota o certificado; falha se não sobrar um único pino."""
    try:
        end = replay(g, start, seq)
    except IllegalJumpError as e:
        raise StrategyError(f"{kind}: sequência gerada é ilegal ({e})") from e
    if popcount(end) != 1:
        raise StrategyError(f"{kind}: sobraram {popcount(end)} pinos em vez de 1")
    holes = g.full_mask & ~start
    if not holes or not g.is_independent(holes):
        raise StrategyError(f"{kind}: buracos iniciais {list(bits(holes))} não formam um estado terminal")
    logger.debug(f"Certificado {kind} em {description}: {len(seq)} saltos, terminal {list(bits(holes))}")
    return StrategyCertificate(
        claim=Claim(graph=description, kind=kind, terminal_size=popcount(holes), statement=statement),
        graph6=write_graph6(g),
        start=format(start, "x"),
        jumps=as_triples(seq),
        end=format(end, "x"),
    )


def check_certificate(cert: StrategyCertificate) -> Tuple[bool, Optional[Config], Optional[str]]:
    """
    Valida um certificado por reprodução.

    Returns:
        Tuple[bool, Optional[Config], Optional[str]]: (válido, configuração final, erro)
    """
    try:
        g = cert.graph()
        end = replay(g, cert.start_config, cert.sequence)
    except SolitaireError as e:
        return False, None, str(e)
    if end != cert.end_config:
        return False, end, f"configuração final {end:x} difere da declarada {cert.end}"
    if popcount(end) != 1:
        return False, end, f"sobraram {popcount(end)} pinos em vez de 1"
    # pinos num conjunto independente não têm salto: o terminal é um estado morto
    holes = g.full_mask & ~cert.start_config
    if not holes or not g.is_independent(holes):
        return False, end, f"buracos iniciais {list(bits(holes))} não formam conjunto independente não vazio"
    if popcount(holes) != cert.claim.terminal_size:
        return False, end, "tamanho do terminal não confere com os buracos iniciais"
    return True, end, None


def load_certificate(text: str) -> StrategyCertificate:
    return StrategyCertificate.model_validate_json(text)
