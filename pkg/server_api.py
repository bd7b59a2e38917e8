import logging
import time
from typing import Dict, List, Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel

from census.suites import SUITES
from engine.fools import METHODS, fools_number
from engine.models import as_triples, holes_config
from engine.search import PegSolver
from graphs.generators import FAMILIES
from graphs.graph import mask_of
from graphs.specs import parse_graph_spec
from strategies import FINISH_MODES, STRATEGY_KINDS
from strategies.cartesian import cartesian_kk_solve
from strategies.certificates import StrategyCertificate, check_certificate
from strategies.hampath import hampath_solve, product_path_solve
from strategies.joins import solve_join
from strategies.products import product_compose
from utils.common import get_engine_config
from utils.errors import (
    DisconnectedGraphError,
    GraphError,
    GraphSpecError,
    IllegalJumpError,
    SearchCapExceeded,
    SolitaireError,
    StrategyError,
)

logger = logging.getLogger(__name__)

VERSION = "1.0.0"


# Modelos de dados
class GraphRequest(BaseModel):
    graph: str


class FoolsRequest(BaseModel):
    graph: str
    method: str = "forward"


class SolveRequest(BaseModel):
    graph: str
    holes: List[int]
    targets: Optional[List[int]] = None


class StrategyRequest(BaseModel):
    graph: str
    other: Optional[str] = None  # segundo grafo para join e product
    k: int = 3
    holes: Optional[List[int]] = None
    finish: str = "auto"


class CheckRequest(BaseModel):
    certificate: StrategyCertificate


def _status_for(error: SolitaireError) -> int:
    """400 para entrada inválida, 422 para limites e pré-condições."""
    if isinstance(error, (GraphSpecError, GraphError, IllegalJumpError)):
        return 400
    if isinstance(error, (SearchCapExceeded, DisconnectedGraphError, StrategyError)):
        return 422
    return 500


def _fail(action: str, error: Exception) -> HTTPException:
    status = _status_for(error) if isinstance(error, SolitaireError) else 500
    error_msg = f"Erro ao {action}: {str(error)}"
    if status == 500:
        logger.error(error_msg)
    return HTTPException(status_code=status, detail=error_msg)


# Define o roteador FastAPI
router = APIRouter()


@router.get("/health")
async def health_check():
    """Endpoint para verificação de saúde do servidor."""
    return {
        "status": "healthy",
        "server": "Solitaire Server",
        "version": VERSION,
        "timestamp": int(time.time()),
    }


@router.get("/info")
async def get_info():
    """Limites do motor, famílias de grafos, estratégias e suítes disponíveis."""
    return {
        "status": "success",
        "data": {
            "engine": get_engine_config(),
            "families": sorted(FAMILIES),
            "methods": list(METHODS),
            "strategies": list(STRATEGY_KINDS),
            "finish_modes": list(FINISH_MODES),
            "suites": sorted(SUITES),
        },
    }


@router.post("/fools")
def compute_fools(request: FoolsRequest) -> Dict:
    """Número de paciência do tolo com testemunha."""
    try:
        if request.method not in METHODS:
            raise GraphSpecError(f"Método desconhecido: {request.method}")
        g = parse_graph_spec(request.graph)
        return fools_number(g, method=request.method).model_dump()
    except Exception as e:
        raise _fail("calcular F", e)


@router.post("/profile")
def compute_profile(request: GraphRequest) -> Dict:
    """Perfil de resolubilidade (resolvível, livre, livre na vizinhança)."""
    try:
        g = parse_graph_spec(request.graph)
        return PegSolver(g).profile().model_dump()
    except Exception as e:
        raise _fail("calcular o perfil", e)


@router.post("/solve")
def solve(request: SolveRequest) -> Dict:
    """Procura uma sequência que deixe um único pino a partir dos buracos dados."""
    try:
        g = parse_graph_spec(request.graph)
        if any(not 0 <= v < g.n for v in request.holes):
            raise GraphError(f"Buracos fora do grafo (n={g.n}): {request.holes}")
        targets = mask_of(request.targets) if request.targets else None
        seq = PegSolver(g).reduce(holes_config(g, request.holes), targets)
        return {"solvable": seq is not None, "sequence": None if seq is None else as_triples(seq)}
    except Exception as e:
        raise _fail("resolver", e)


@router.post("/strategy/{kind}")
def build_strategy(kind: str, request: StrategyRequest) -> Dict:
    """Gera o certificado de uma estratégia construtiva."""
    if kind not in STRATEGY_KINDS:
        raise HTTPException(status_code=404, detail=f"Estratégia desconhecida: {kind}")
    try:
        g = parse_graph_spec(request.graph)
        other = parse_graph_spec(request.other) if request.other else None
        holes = mask_of(request.holes) if request.holes else None
        if kind in ("join", "product") and other is None:
            raise GraphSpecError(f"A estratégia {kind} exige o campo 'other'")
        if kind == "join":
            cert = solve_join(g, other, holes)
        elif kind == "cartesian":
            cert = cartesian_kk_solve(g, request.k, holes)
        elif kind == "hampath":
            cert = hampath_solve(g)
        elif kind == "paths":
            cert = product_path_solve(g, request.k)
        else:
            cert = product_compose(g, other, finish=request.finish)
        return cert.model_dump()
    except Exception as e:
        raise _fail(f"gerar a estratégia {kind}", e)


@router.post("/check")
def check(request: CheckRequest) -> Dict:
    """Valida um certificado por reprodução."""
    valid, end, error = check_certificate(request.certificate)
    return {"valid": valid, "end": None if end is None else format(end, "x"), "error": error}
