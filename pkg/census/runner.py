"""
Censo sobre fluxos graph6: um registro por grafo, na ordem da entrada,
com mapa paralelo em processos e cache por arquivo.
"""

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple, Union

from tqdm import tqdm

from census.records import QUESTIONS, SCHEMA_HEADER, CensusRecord, CensusSummary
from engine.fools import fools_number
from engine.search import PegSolver
from graphs.graph6 import parse_graph6, read_graph6_lines
from graphs.invariants import independence_number, is_connected
from utils.common import get_census_config
from utils.errors import Graph6Error, SolitaireError

logger = logging.getLogger(__name__)

CacheKey = Tuple[str, Tuple[str, ...]]


def evaluate_graph(text: str, questions: Sequence[str] = QUESTIONS, cap: Optional[int] = None) -> CensusRecord:
    """
    Calcula os predicados pedidos para um grafo graph6.

    Executa no processo trabalhador; cada chamada tem o seu próprio solver.
    Erros do motor (limite de busca, por exemplo) viram o campo `error`.
    """
    started = time.perf_counter()
    g = parse_graph6(text)
    record = CensusRecord(graph6=text, n=g.n, connected=is_connected(g), questions=sorted(questions))
    if not record.connected:
        record.elapsed = time.perf_counter() - started
        return record
    try:
        if "alpha" in questions:
            record.alpha = independence_number(g, cap)[0]
        solver = None
        if "solvability" in questions:
            solver = PegSolver(g, cap)
            profile = solver.profile()
            record.solvable = profile.solvable
            record.freely_solvable = profile.freely_solvable
            record.freely_nbhd_solvable = profile.freely_nbhd_solvable
        if "F" in questions:
            record.f_value = fools_number(g, method="forward", cap=cap, solver=solver).f_value
    except SolitaireError as e:
        record.error = str(e)
    record.elapsed = time.perf_counter() - started
    return record


def _evaluate_task(task: Tuple[str, Tuple[str, ...], Optional[int]]) -> CensusRecord:
    return evaluate_graph(*task)


def load_cache(path: Optional[str]) -> Dict[CacheKey, CensusRecord]:
    """Lê uma saída anterior do censo; linhas de comentário e linhas inválidas são ignoradas."""
    cache: Dict[CacheKey, CensusRecord] = {}
    if not path or not os.path.exists(path):
        return cache
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                record = CensusRecord.model_validate_json(line)
            except ValueError as e:
                logger.warning(f"Cache {path}, linha {number} ignorada: {e}")
                continue
            if record.error is None:
                cache[(record.graph6, tuple(record.questions))] = record
    logger.info(f"Cache {path}: {len(cache)} registros reaproveitáveis")
    return cache


def iter_census(
    lines: Iterable[Union[str, bytes]],
    summary: CensusSummary,
    questions: Sequence[str] = QUESTIONS,
    jobs: Optional[int] = None,
    cache: Optional[Dict[CacheKey, CensusRecord]] = None,
    cap: Optional[int] = None,
    progress: bool = False,
) -> Iterator[CensusRecord]:
    """
    Produz os registros na ordem da entrada, atualizando `summary`.

    Linhas graph6 inválidas entram em `summary.skipped` e o censo continua.
    O resultado não depende de `jobs`: o mapa paralelo preserva a ordem.
    """
    unknown = set(questions) - set(QUESTIONS)
    if unknown:
        raise ValueError(f"Perguntas desconhecidas: {sorted(unknown)}")
    key_questions = tuple(sorted(questions))
    cache = cache or {}
    jobs = jobs or get_census_config()["jobs"]

    # (linha, texto, registro em cache ou None) na ordem da entrada
    entries: List[Tuple[int, str, Optional[CensusRecord]]] = []
    for number, text, parsed in read_graph6_lines(lines):
        if isinstance(parsed, Graph6Error):
            summary.skip(number, text, str(parsed))
            continue
        entries.append((number, text, cache.get((text, key_questions))))

    pending = [(text, key_questions, cap) for _, text, hit in entries if hit is None]
    logger.info(f"Censo: {len(entries)} grafos, {len(entries) - len(pending)} do cache, {jobs} processo(s)")

    if jobs > 1 and len(pending) > 1:
        executor = ProcessPoolExecutor(max_workers=jobs)
        computed = executor.map(_evaluate_task, pending, chunksize=max(1, len(pending) // (jobs * 8)))
    else:
        executor = None
        computed = map(_evaluate_task, pending)

    try:
        for number, text, hit in tqdm(entries, disable=not progress, unit="grafo"):
            if hit is not None:
                summary.cached += 1
                record = hit
            else:
                record = next(computed)
            if record.error:
                logger.warning(f"Grafo {text} ignorado: {record.error}")
                summary.skip(number, text, record.error)
            summary.add(record)
            yield record
    finally:
        if executor is not None:
            executor.shutdown(cancel_futures=True)

    logger.info(
        f"Censo concluído: {summary.connected} conexos, {summary.freely_solvable} livremente resolvíveis, "
        f"{summary.freely_nbhd_solvable} na vizinhança"
    )


def run_census(
    lines: Iterable[Union[str, bytes]],
    questions: Sequence[str] = QUESTIONS,
    jobs: Optional[int] = None,
    cache_path: Optional[str] = None,
    cap: Optional[int] = None,
) -> Tuple[List[CensusRecord], CensusSummary]:
    """
    Executa o censo inteiro em memória.

    Args:
        lines: linhas graph6 (arquivo, stdin ou lista)
        questions: subconjunto de {"alpha", "F", "solvability"}
        jobs (Optional[int]): processos; None usa SOLITAIRE_JOBS
        cache_path (Optional[str]): saída anterior a reaproveitar
        cap (Optional[int]): limite de vértices das buscas exatas

    Returns:
        Tuple[List[CensusRecord], CensusSummary]: registros e resumo
    """
    summary = CensusSummary()
    records = list(iter_census(lines, summary, questions, jobs, load_cache(cache_path), cap))
    return records, summary


def write_census(records: Iterable[CensusRecord], out: TextIO) -> int:
    """Grava o cabeçalho de esquema e uma linha JSON por registro."""
    out.write(SCHEMA_HEADER + "\n")
    count = 0
    for record in records:
        out.write(record.to_line() + "\n")
        count += 1
    out.flush()
    return count


def summary_line(summary: CensusSummary, threshold: Optional[float] = None) -> str:
    if threshold is None:
        threshold = get_census_config()["nbhd_threshold"]
    return summary.to_json(threshold)

