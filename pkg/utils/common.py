import logging
import os
from typing import Any, Dict, Optional

from dotenv import dotenv_values

logger = logging.getLogger(__name__)

ENV_FILE = ".env"


def get_env_var(var_name: str, default: Optional[str] = None) -> Optional[str]:
    """
    Obtém o valor de uma variável de ambiente, com fallback para o arquivo .env
    se a variável não estiver definida no ambiente.

    Args:
        var_name (str): Nome da variável de ambiente
        default (Optional[str], optional): Valor padrão caso a variável não seja encontrada.

    Returns:
        Optional[str]: Valor da variável ou o padrão
    """
    value = os.getenv(var_name)

    if value is None and os.path.exists(ENV_FILE):
        value = dotenv_values(ENV_FILE).get(var_name)

    return value if value is not None else default


def get_int_var(var_name: str, default: int) -> int:
    """Como get_env_var, mas converte para inteiro (valores inválidos caem no padrão)."""
    raw = get_env_var(var_name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Valor inválido para {var_name}: {raw!r}; usando {default}")
        return default


def get_engine_config() -> Dict[str, int]:
    """
    Obtém os limites das buscas exatas.

    Returns:
        Dict[str, int]: search_cap (jogo), exact_cap (alfa/chi) e hampath_cap
    """
    return {
        "search_cap": get_int_var("SOLITAIRE_SEARCH_CAP", 24),
        "exact_cap": get_int_var("SOLITAIRE_EXACT_CAP", 24),
        "hampath_cap": get_int_var("SOLITAIRE_HAMPATH_CAP", 20),
    }


def get_census_config() -> Dict[str, Any]:
    """
    Obtém configurações do censo (paralelismo, cache e limiar dos 98%).

    Returns:
        Dict[str, Any]: Dicionário com as configurações do censo
    """
    threshold = get_env_var("SOLITAIRE_NBHD_THRESHOLD", "0.98")
    try:
        nbhd_threshold = float(threshold)
    except ValueError:
        logger.warning(f"Limiar inválido: {threshold!r}; usando 0.98")
        nbhd_threshold = 0.98

    return {
        "jobs": get_int_var("SOLITAIRE_JOBS", os.cpu_count() or 1),
        "cache_dir": get_env_var("SOLITAIRE_CACHE_DIR"),
        "nbhd_threshold": nbhd_threshold,
    }


def get_connection_config() -> Dict[str, Any]:
    """
    Obtém configurações de conexão do servidor HTTP.

    Returns:
        Dict[str, Any]: Dicionário com as configurações de conexão
    """
    return {
        "api_host": get_env_var("SOLITAIRE_API_HOST", "localhost"),
        "api_port": get_env_var("SOLITAIRE_API_PORT", "8000"),
        "log_level": get_env_var("SOLITAIRE_LOG_LEVEL", "INFO"),
    }
