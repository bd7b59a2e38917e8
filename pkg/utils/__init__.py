# Inicialização do pacote utils
"""
Pacote de utilitários comuns: configuração e exceções.
"""

from .common import (
    get_census_config,
    get_connection_config,
    get_engine_config,
    get_env_var,
    get_int_var,
)
from .errors import (
    DisconnectedGraphError,
    Graph6Error,
    GraphError,
    GraphSpecError,
    IllegalJumpError,
    SearchCapExceeded,
    SolitaireError,
    StrategyError,
)

__all__ = [
    "get_env_var",
    "get_int_var",
    "get_engine_config",
    "get_census_config",
    "get_connection_config",
    "SolitaireError",
    "GraphError",
    "Graph6Error",
    "GraphSpecError",
    "SearchCapExceeded",
    "DisconnectedGraphError",
    "IllegalJumpError",
    "StrategyError",
]
