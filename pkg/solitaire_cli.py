"""
Linha de comando do motor de paciência em grafos.

Toda saída de dados vai para stdout em JSON (um documento ou JSON lines);
mensagens e logs vão para stderr. Códigos de saída: 0 sucesso, 1 erro de
entrada/uso ou de E/S, 2 falha de verificação.
"""

import argparse
import json
import logging
import sys
from contextlib import nullcontext
from typing import Any, List, Optional

from census.records import QUESTIONS, CensusSummary
from census.runner import iter_census, load_cache, summary_line, write_census
from census.suites import SUITES, verify_theorems
from engine.fools import METHODS, fools_number, terminal_states, upper_bound_check
from engine.models import as_triples, holes_config
from engine.search import PegSolver, weak_product_hypothesis
from graphs.enumeration import enumerate_all, enumerate_connected
from graphs.graph import bits
from graphs.graph6 import write_graph6
from graphs.specs import parse_graph_spec
from strategies import FINISH_MODES, STRATEGY_KINDS
from strategies.cartesian import cartesian_kk_solve
from strategies.certificates import check_certificate, load_certificate
from strategies.hampath import hampath_solve, product_path_solve
from strategies.joins import solve_join
from strategies.products import product_compose
from utils.common import get_census_config, get_connection_config
from utils.errors import SolitaireError

logger = logging.getLogger("solitaire_cli")

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """Erros de uso saem com código 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: erro: {message}\n")


def _emit(data: Any) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")


def _vertex_list(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise SolitaireError(f"Lista de vértices inválida: {text!r}") from None


def _mask(text: Optional[str]) -> Optional[int]:
    vertices = _vertex_list(text)
    if not vertices:
        return None
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def cmd_fools(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    report = fools_number(g, method=args.method, cap=args.cap)
    data = report.model_dump()
    if args.all_terminals:
        data["terminal_states"] = {
            str(size): [list(bits(s)) for s in states] for size, states in terminal_states(g, args.cap).items()
        }
    _emit(data)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    holes = _vertex_list(args.holes)
    for v in holes:
        if not 0 <= v < g.n:
            raise SolitaireError(f"Vértice {v} fora do grafo (n={g.n})")
    targets = _mask(args.target)
    seq = PegSolver(g, args.cap).reduce(holes_config(g, holes), targets)
    if seq is None:
        _emit({"solvable": False, "result": "unsolvable", "sequence": None})
    else:
        _emit({"solvable": True, "result": "solved", "sequence": as_triples(seq)})
    return EXIT_OK


def cmd_profile(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    solver = PegSolver(g, args.cap)
    data = solver.profile().model_dump()
    if args.experimental:
        report = fools_number(g, cap=args.cap)
        data["upper_bound"] = upper_bound_check(g).model_dump()
        data["weak_hypothesis"] = weak_product_hypothesis(g, report.terminal_mask, args.cap).model_dump()
    _emit(data)
    return EXIT_OK


def cmd_strategy(args: argparse.Namespace) -> int:
    g = parse_graph_spec(args.graph)
    other = parse_graph_spec(args.other) if args.other else None
    if args.kind in ("join", "product") and other is None:
        raise SolitaireError(f"A estratégia {args.kind} exige dois grafos")
    if args.kind == "join":
        cert = solve_join(g, other, _mask(args.holes))
    elif args.kind == "cartesian":
        cert = cartesian_kk_solve(g, args.k, _mask(args.holes))
    elif args.kind == "hampath":
        cert = hampath_solve(g)
    elif args.kind == "paths":
        cert = product_path_solve(g, args.k)
    else:
        cert = product_compose(g, other, finish=args.finish)
    sys.stdout.write(cert.to_json() + "\n")
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    questions = args.questions.split(",") if args.questions else list(QUESTIONS)
    cache_path = args.cache
    if cache_path is None and get_census_config()["cache_dir"]:
        cache_path = f"{get_census_config()['cache_dir'].rstrip('/')}/census.jsonl"
    summary = CensusSummary()
    try:
        source = sys.stdin if args.input == "-" else open(args.input, "r", encoding="ascii", errors="replace")
    except OSError as e:
        logger.error(f"Não foi possível abrir {args.input}: {e}")
        return EXIT_INPUT
    try:
        with source if source is not sys.stdin else nullcontext(source):
            records = iter_census(
                source, summary, questions, args.jobs, load_cache(cache_path), args.cap, progress=args.progress
            )
            if args.out:
                with open(args.out, "w", encoding="utf-8") as out:
                    write_census(records, out)
            else:
                write_census(records, sys.stdout)
    except OSError as e:
        logger.error(f"Erro de E/S no censo: {e}")
        return EXIT_INPUT
    sys.stderr.write(summary_line(summary) + "\n")
    for line in summary.skipped:
        logger.warning(f"Linha {line.line_number} ignorada ({line.text}): {line.error}")
    if summary.violations:
        for violation in summary.violations:
            logger.error(f"Violação: {violation}")
        return EXIT_FAILED
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    graphs = enumerate_all(args.n) if args.all else enumerate_connected(args.n)
    for g in graphs:
        sys.stdout.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    reports = verify_theorems(args.suite)
    failed = False
    for report in reports:
        data = report.model_dump()
        data["passed"] = report.passed
        _emit(data)
        failed = failed or not report.passed
    return EXIT_FAILED if failed else EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, "r", encoding="utf-8") as f:
                text = f.read()
    except OSError as e:
        logger.error(f"Não foi possível ler {args.file}: {e}")
        return EXIT_INPUT
    try:
        cert = load_certificate(text)
    except ValueError as e:
        raise SolitaireError(f"Certificado malformado: {e}") from e
    valid, end, error = check_certificate(cert)
    _emit({"valid": valid, "end": None if end is None else format(end, "x"), "error": error})
    return EXIT_OK if valid else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="solitaire_cli",
        description="Paciência e paciência do tolo em grafos: busca exata, estratégias e censo.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--cap", type=int, default=None, help="Limite de vértices da busca exata")
    parser.add_argument("--seed", type=int, default=None, help="Reservado; não há aleatoriedade")
    parser.add_argument("--log-level", default=None, help="Nível de log (padrão: SOLITAIRE_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # -- fools --
    p_fools = subparsers.add_parser("fools", help="Número de paciência do tolo com testemunha")
    p_fools.add_argument("graph", help='Grafo: "path:5", "cartesian(path:3,complete:3)", "g6:D?{"')
    p_fools.add_argument("--method", choices=METHODS, default="forward")
    p_fools.add_argument("--all-terminals", action="store_true", help="Lista todos os estados terminais")
    p_fools.set_defaults(func=cmd_fools)

    # -- solve --
    p_solve = subparsers.add_parser("solve", help="Resolve a partir dos buracos dados")
    p_solve.add_argument("graph")
    p_solve.add_argument("--holes", required=True, help="Buracos iniciais, ex.: 0,3")
    p_solve.add_argument("--target", default=None, help="Vértices permitidos para o último pino")
    p_solve.set_defaults(func=cmd_solve)

    # -- profile --
    p_profile = subparsers.add_parser("profile", help="Perfil de resolubilidade")
    p_profile.add_argument("graph")
    p_profile.add_argument("--experimental", action="store_true", help="Inclui cota superior e hipótese fraca")
    p_profile.set_defaults(func=cmd_profile)

    # -- strategy --
    p_strategy = subparsers.add_parser("strategy", help="Certificado de uma estratégia construtiva")
    p_strategy.add_argument("kind", choices=STRATEGY_KINDS)
    p_strategy.add_argument("graph")
    p_strategy.add_argument("other", nargs="?", default=None, help="Segundo grafo (join, product)")
    p_strategy.add_argument("--k", type=int, default=3, help="k de K_k ou P_k (padrão: 3)")
    p_strategy.add_argument("--holes", default=None, help="Conjunto S de buracos iniciais")
    p_strategy.add_argument("--finish", choices=FINISH_MODES, default="auto")
    p_strategy.set_defaults(func=cmd_strategy)

    # -- census --
    p_census = subparsers.add_parser("census", help="Censo sobre linhas graph6")
    p_census.add_argument("--in", dest="input", default="-", help="Arquivo graph6 (padrão: stdin)")
    p_census.add_argument("--out", default=None, help="Arquivo de saída (padrão: stdout)")
    p_census.add_argument("--jobs", type=int, default=None, help="Processos (padrão: SOLITAIRE_JOBS)")
    p_census.add_argument("--cache", default=None, help="Saída anterior a reaproveitar")
    p_census.add_argument("--questions", default=None, help="Subconjunto de alpha,F,solvability")
    p_census.add_argument("--progress", action="store_true", help="Barra de progresso em stderr")
    p_census.set_defaults(func=cmd_census)

    # -- enumerate --
    p_enum = subparsers.add_parser("enumerate", help="Grafos conexos com n vértices em graph6")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--all", action="store_true", help="Inclui os desconexos")
    p_enum.set_defaults(func=cmd_enumerate)

    # -- verify --
    p_verify = subparsers.add_parser("verify", help="Suítes de verificação dos teoremas")
    p_verify.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p_verify.set_defaults(func=cmd_verify)

    # -- check --
    p_check = subparsers.add_parser("check", help="Valida um certificado por reprodução")
    p_check.add_argument("file", help="Arquivo JSON ou - para stdin")
    p_check.set_defaults(func=cmd_check)

    return parser


def dispatch(argv: Optional[List[str]] = None) -> int:
    """
    Executa um subcomando.

    Returns:
        int: 0 sucesso, 1 erro de entrada, 2 falha de verificação
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT

    level = (args.log_level or get_connection_config()["log_level"]).upper()
    logging.basicConfig(
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        level=getattr(logging, level, logging.INFO),
        stream=sys.stderr,
    )
    if args.seed is not None:
        logger.debug("--seed ignorado: nenhuma rotina é aleatória")

    try:
        return args.func(args)
    except SolitaireError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_INPUT
    except ValueError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_INPUT
    except AssertionError as e:
        logger.error(f"{args.command}: verificação falhou: {e}")
        return EXIT_FAILED


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
