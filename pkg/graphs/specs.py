"""
Mini-gramática de especificação de grafos usada pela CLI, pela API e pelas suítes.

    spec := "g6:" literal
          | "join(" spec "," spec ")"
          | "cartesian(" spec "," spec ")"
          | família [":" inteiro ("," inteiro)*]

Espaços são ignorados e as construções podem ser aninhadas.
"""

import re
from typing import Tuple

from graphs.generators import FAMILIES, cartesian, join, make_named
from graphs.graph import Graph
from graphs.graph6 import parse_graph6
from utils.errors import GraphError, GraphSpecError

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_PARAMS = re.compile(r"\d+(,\d+)*")
_G6 = re.compile(r"[\x3f-\x7e]+")


def _parse(text: str, pos: int) -> Tuple[Graph, int]:
    if text.startswith("g6:", pos):
        match = _G6.match(text, pos + 3)
        if not match:
            raise GraphSpecError(f"Literal graph6 vazio na posição {pos}")
        try:
            return parse_graph6(match.group()), match.end()
        except GraphError as e:
            raise GraphSpecError(f"graph6 inválido na posição {pos}: {e}") from e

    match = _NAME.match(text, pos)
    if not match:
        raise GraphSpecError(f"Esperado nome de família na posição {pos}: {text[pos:]!r}")
    name, pos = match.group(), match.end()

    if name in ("join", "cartesian") and text.startswith("(", pos):
        left, pos = _parse(text, pos + 1)
        if not text.startswith(",", pos):
            raise GraphSpecError(f"Esperada ',' na posição {pos}")
        right, pos = _parse(text, pos + 1)
        if not text.startswith(")", pos):
            raise GraphSpecError(f"Esperado ')' na posição {pos}")
        graph = join(left, right) if name == "join" else cartesian(left, right)[0]
        return graph, pos + 1

    if name not in FAMILIES:
        raise GraphSpecError(f"Família desconhecida: {name}")
    params: Tuple[int, ...] = ()
    if text.startswith(":", pos):
        found = _PARAMS.match(text, pos + 1)
        if not found:
            raise GraphSpecError(f"Parâmetros inválidos na posição {pos + 1}")
        params = tuple(int(p) for p in found.group().split(","))
        pos = found.end()
    try:
        return make_named(name, *params), pos
    except GraphError as e:
        raise GraphSpecError(str(e)) from e


def parse_graph_spec(spec: str) -> Graph:
    """
    Constrói o grafo descrito por `spec`.

    Exemplos: "path:5", "complete_bipartite:3,2", "cartesian(path:3,complete:3)",
    "join(empty:3,complete:1)", "g6:D?{".

    Raises:
        GraphSpecError: texto fora da gramática, família ou parâmetros inválidos
    """
    text = "".join(spec.split())
    if not text:
        raise GraphSpecError("Especificação vazia")
    graph, pos = _parse(text, 0)
    if pos != len(text):
        raise GraphSpecError(f"Texto excedente na posição {pos}: {text[pos:]!r}")
    return graph
