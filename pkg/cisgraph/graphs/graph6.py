"""
graph6 and edge list codecs.

graph6 text is produced and decoded by networkx. Size headers are checked here
first, so orders outside ``1..MAX_ORDER`` and non minimal long headers are
rejected before networkx sees the body. networkx does not check characters
below ``?`` or the padding bits of the last byte, both are validated here too.
"""
import logging
import re
from pathlib import Path
from typing import BinaryIO, Iterable, Iterator, List, Tuple, Union

import networkx as nx

from cisgraph.exceptions import (
    CapacityExceededError,
    EdgeListFormatError,
    Graph6FormatError,
    GraphDefinitionError,
)
from cisgraph.graphs.graph import Graph, MAX_ORDER

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
_EDGE_RE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def _to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.order))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def emit_graph6(graph: Graph) -> str:
    """
    Encodes the graph as a graph6 string (no ``>>graph6<<`` header, no newline).

    :param graph: graph to encode
    :type graph: Graph
    :return: graph6 text
    :rtype: str
    """
    encoded = nx.to_graph6_bytes(
        _to_networkx(graph), nodes=range(graph.order), header=False
    )
    return encoded.decode("ascii").strip()


def _decode_size(text: str) -> Tuple[int, int]:
    """
    Reads the size header.

    :param text: graph6 text without the optional file header
    :type text: str
    :return: order and number of characters used by the header
    :rtype: Tuple[int, int]
    """
    if not text:
        raise Graph6FormatError("Empty graph6 string")
    if text[0] != "~":
        return ord(text[0]) - 63, 1
    if len(text) > 1 and text[1] == "~":
        raise CapacityExceededError(
            f"graph6 36-bit size headers exceed {MAX_ORDER} vertices"
        )
    if len(text) < 4:
        raise Graph6FormatError("Truncated graph6 size header")
    order = 0
    for char in text[1:4]:
        order = order << 6 | (ord(char) - 63)
    if order <= 62:
        raise Graph6FormatError(f"Non minimal graph6 size header for n={order}")
    return order, 4


def parse_graph6(text: str) -> Graph:
    """
    Decodes a single graph6 string.

    Surrounding whitespace and a leading ``>>graph6<<`` header are ignored.

    :raises Graph6FormatError: for malformed headers or bodies
    :raises CapacityExceededError: for orders above MAX_ORDER
    :param text: graph6 text
    :type text: str
    :return: decoded graph
    :rtype: Graph
    """
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    bad = [char for char in text if not 63 <= ord(char) <= 126]
    if bad:
        raise Graph6FormatError(f"Invalid graph6 characters: {''.join(bad)!r}")
    order, used = _decode_size(text)
    if order < 1:
        raise Graph6FormatError("graph6 order has to be at least 1")
    if order > MAX_ORDER:
        raise CapacityExceededError(
            f"graph6 order {order} exceeds {MAX_ORDER} vertices"
        )
    body = text[used:]
    pairs = order * (order - 1) // 2
    expected = -(-pairs // 6)
    if len(body) != expected:
        raise Graph6FormatError(
            f"graph6 body for n={order} needs {expected} characters, got {len(body)}"
        )
    padding = expected * 6 - pairs
    if body and (ord(body[-1]) - 63) & ((1 << padding) - 1):
        raise Graph6FormatError("graph6 padding bits have to be zero")
    try:
        nx_graph = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise Graph6FormatError(f"Malformed graph6 string {text!r}: {exc}") from exc
    return Graph.from_edges(order, nx_graph.edges())


def parse_edge_list(text: str) -> Graph:
    """
    Decodes the ``n; u-v, u-v, ...`` edge list text.

    :raises EdgeListFormatError: if text does not follow the format
    :param text: edge list text
    :type text: str
    :return: decoded graph
    :rtype: Graph
    """
    head, separator, tail = text.strip().partition(";")
    if not separator or not head.strip().isdigit():
        raise EdgeListFormatError(f"Expected 'n; u-v, ...', got {text.strip()!r}")
    order = int(head)
    edges = []
    for item in tail.split(","):
        if not item.strip():
            continue
        match = _EDGE_RE.match(item)
        if not match:
            raise EdgeListFormatError(f"Malformed edge {item.strip()!r}")
        edges.append((int(match.group(1)), int(match.group(2))))
    try:
        return Graph.from_edges(order, edges)
    except GraphDefinitionError as exc:
        raise EdgeListFormatError(str(exc)) from exc


def emit_edge_list(graph: Graph) -> str:
    edges = ", ".join(f"{u}-{v}" for u, v in graph.edges())
    return f"{graph.order}; {edges}" if edges else f"{graph.order};"


def parse_graph(text: str) -> Graph:
    """
    Decodes either format, texts with a ``;`` are treated as edge lists.
    """
    if ";" in text:
        return parse_edge_list(text)
    return parse_graph6(text)


def iter_graphs(lines: Iterable[str]) -> Iterator[Graph]:
    """
    Decodes one graph per line, skipping blank lines and ``#`` comments.

    :param lines: text lines
    :type lines: Iterable[str]
    :return: generator of graphs
    :rtype: Iterator[Graph]
    """
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped == GRAPH6_HEADER:
            continue
        logger.debug("decoding graph on line %d", number)
        yield parse_graph(stripped)


def _decode_lines(handle: BinaryIO) -> Iterator[str]:
    for number, raw in enumerate(handle, start=1):
        try:
            yield raw.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6FormatError(
                f"Line {number} is not ASCII graph text: {raw[exc.start:exc.end]!r}"
            ) from exc


def read_graphs(path: Union[str, Path]) -> List[Graph]:
    """
    Reads a graph file, one graph6 or edge list text per line.

    :raises Graph6FormatError: if a line holds non ASCII bytes
    :param path: file to read
    :type path: Union[str, Path]
    :return: decoded graphs in file order
    :rtype: List[Graph]
    """
    with open(path, "rb") as handle:
        return list(iter_graphs(_decode_lines(handle)))
