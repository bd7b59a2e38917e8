"""
Leitura e escrita no formato graph6 (sem cabeçalho).

Layout: N(n) seguido dos bits do triângulo superior em ordem de coluna
(x(0,1), x(0,2), x(1,2), x(0,3), ...), agrupados em 6 bits, com zeros à
direita, cada grupo somado a 63.
"""

import logging
from typing import Iterable, Iterator, Tuple, Union

from graphs.graph import Graph
from utils.errors import Graph6Error

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"


def _decode_size(data: bytes) -> Tuple[int, int]:
    if not data:
        raise Graph6Error("Linha vazia", 0)
    first = data[0] - 63
    if first < 0 or first > 63:
        raise Graph6Error(f"Byte de tamanho fora do intervalo: {data[0]}", 0)
    if first < 63:
        return first, 1
    if len(data) < 4:
        raise Graph6Error("Prefixo de tamanho longo truncado", 1)
    if data[1] == 126:
        # forma de 8 bytes (n >= 2^18): aceita por completude
        if len(data) < 8:
            raise Graph6Error("Prefixo de tamanho longo truncado", 2)
        groups, used = data[2:8], 8
    else:
        groups, used = data[1:4], 4
    n = 0
    for i, b in enumerate(groups):
        value = b - 63
        if not 0 <= value < 64:
            raise Graph6Error(f"Byte fora do intervalo: {b}", i + 1)
        n = (n << 6) | value
    if used == 4 and n < 63:
        raise Graph6Error(f"Forma longa usada para n={n} < 63", 1)
    return n, used


def parse_graph6(line: Union[str, bytes]) -> Graph:
    """
    Decodifica uma linha graph6.

    Raises:
        Graph6Error: prefixo de tamanho malformado, byte fora de 63..126
            ou bytes sobrando depois dos bits de adjacência
    """
    try:
        data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    except UnicodeEncodeError as e:
        raise Graph6Error("Caractere fora do intervalo 63..126", e.start) from e
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    n, offset = _decode_size(data)
    pairs = n * (n - 1) // 2
    needed = (pairs + 5) // 6
    body = data[offset:]
    if len(body) < needed:
        raise Graph6Error(f"Esperados {needed} bytes de adjacência, encontrados {len(body)}", offset + len(body))
    if len(body) > needed:
        raise Graph6Error("Bytes sobrando no fim da linha", offset + needed)

    bitstream = 0
    for i, b in enumerate(body):
        value = b - 63
        if not 0 <= value < 64:
            raise Graph6Error(f"Byte fora do intervalo: {b}", offset + i)
        bitstream = (bitstream << 6) | value
    total_bits = 6 * needed

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream >> (total_bits - 1 - k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 1 << 18:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> str:
    """Codifica G em graph6 canônico (preenchimento com zeros)."""
    out = bytearray(_encode_size(g.n))
    acc = 0
    filled = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc, filled = 0, 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return out.decode("ascii")


def read_graph6_lines(lines: Iterable[Union[str, bytes]]) -> Iterator[Tuple[int, str, Union[Graph, Graph6Error]]]:
    """
    Lê um fluxo de linhas graph6.

    Produz (número da linha, texto, grafo ou erro); linhas em branco são puladas
    e erros de leitura não interrompem o fluxo.
    """
    for number, raw in enumerate(lines, start=1):
        text = raw.decode("ascii", errors="replace") if isinstance(raw, bytes) else raw
        text = text.strip()
        if not text:
            continue
        try:
            yield number, text, parse_graph6(text)
        except Graph6Error as e:
            logger.warning(f"Linha {number} ignorada: {e}")
            yield number, text, e
