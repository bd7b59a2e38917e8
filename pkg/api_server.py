import json
import logging
import time
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request

from server_api import VERSION
from server_api import router as api_router
from utils.common import get_connection_config

# Carrega configurações
connection_config = get_connection_config()
API_HOST = connection_config["api_host"]
API_PORT = connection_config["api_port"]

# Configuração de logging
logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    level=getattr(logging, str(connection_config["log_level"]).upper(), logging.INFO),
)
logger = logging.getLogger(__name__)


def _log_event(event_type: str, data: dict, level: int = logging.INFO) -> None:
    event = {"type": event_type, "timestamp": time.time(), "data": data}
    logger.log(level, f"Evento: {json.dumps(event)}")


# Contexto de gerenciamento de eventos para inicialização e encerramento
@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("Iniciando servidor de paciência em grafos...")
    _log_event("system.startup", {"host": API_HOST, "port": API_PORT, "version": VERSION})

    yield

    logger.info("Encerrando servidor de paciência em grafos...")
    _log_event("system.shutdown", {"host": API_HOST, "port": API_PORT})


# Inicializa o aplicativo FastAPI com o gerenciador de ciclo de vida
app = FastAPI(
    title="Solitaire Server - Paciência em grafos",
    description="Busca exata, paciência do tolo e certificados de estratégias construtivas",
    version=VERSION,
    lifespan=lifespan,
)


# Middleware para capturar e registrar eventos
@app.middleware("http")
async def event_middleware(request: Request, call_next):
    _log_event(
        "request.received",
        {
            "method": request.method,
            "path": request.url.path,
            "client": request.client.host if request.client else "unknown",
        },
    )

    start_time = time.time()
    try:
        response = await call_next(request)
        _log_event(
            "response.sent",
            {
                "method": request.method,
                "path": request.url.path,
                "status_code": response.status_code,
                "processing_time": time.time() - start_time,
            },
        )
        return response
    except Exception as e:
        _log_event(
            "error.occurred",
            {
                "method": request.method,
                "path": request.url.path,
                "error": str(e),
                "processing_time": time.time() - start_time,
            },
            logging.ERROR,
        )
        # Re-lança a exceção para ser tratada pelos handlers do FastAPI
        raise


# Inclui os endpoints da API
app.include_router(api_router)


# Inicia a aplicação
if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host=API_HOST, port=int(API_PORT), log_level="info")
