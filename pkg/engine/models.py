from typing import List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel

from graphs.graph import Graph, bits, mask_of

# Configuração = bitset de pinos (bit ligado = pino, desligado = buraco).
Config = int


class Jump(NamedTuple):
    """Salto xyz: o pino em x pula o pino em y e cai no buraco z."""

    x: int
    y: int
    z: int


JumpSequence = List[Jump]


def holes_config(g: Graph, holes: Sequence[int]) -> Config:
    """Configuração com buracos exatamente em `holes`."""
    return g.full_mask & ~mask_of(holes)


def single_hole(g: Graph, v: int) -> Config:
    return g.full_mask ^ (1 << v)


def complement(g: Graph, c: Config) -> Config:
    return g.full_mask & ~c


def as_triples(seq: Sequence[Jump]) -> List[Tuple[int, int, int]]:
    return [tuple(j) for j in seq]


def from_triples(triples: Sequence[Sequence[int]]) -> JumpSequence:
    return [Jump(*t) for t in triples]


class FoolsReport(BaseModel):
    f_value: int
    witness_hole: int
    terminal: List[int]
    witness_sequence: List[Tuple[int, int, int]]
    method: str = "forward"

    @property
    def terminal_mask(self) -> int:
        return mask_of(self.terminal)

    @property
    def jumps(self) -> JumpSequence:
        return from_triples(self.witness_sequence)


class SolvabilityProfile(BaseModel):
    solvable: bool
    freely_solvable: bool
    freely_nbhd_solvable: bool
    solvable_holes: List[int]
    nbhd_solvable_holes: List[int]


class UpperBoundReport(BaseModel):
    alpha: int
    prop2_applies: bool
    maximum_sets: int


class WeakHypothesisReport(BaseModel):
    """Hipótese enfraquecida do limite inferior para produtos (experimental)."""

    final_vertices: List[int]
    satisfied: bool
    witness: Optional[Tuple[int, int]] = None


def describe(c: Config) -> str:
    return "{" + ",".join(str(v) for v in bits(c)) + "}"
