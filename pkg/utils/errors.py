"""Hierarquia de exceções compartilhada por todos os pacotes."""

from typing import Optional


class SolitaireError(Exception):
    """Erro base do projeto."""


class GraphError(SolitaireError):
    """Construção de grafo inválida (família desconhecida, parâmetros ruins)."""


class Graph6Error(GraphError):
    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (posição {position})"
        super().__init__(message)


class GraphSpecError(SolitaireError):
    """Erro de sintaxe na especificação textual de um grafo."""


class SearchCapExceeded(SolitaireError):
    def __init__(self, what: str, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"{what}: {n} vértices excede o limite de {cap}")


class DisconnectedGraphError(SolitaireError):
    """O jogo só é definido em grafos conexos."""


class IllegalJumpError(SolitaireError):
    def __init__(self, reason: str, index: Optional[int] = None):
        self.reason = reason
        self.index = index
        prefix = f"salto #{index}: " if index is not None else ""
        super().__init__(f"{prefix}{reason}")


class StrategyError(SolitaireError):
    """Pré-condição de estratégia violada ou falha interna da construção."""
