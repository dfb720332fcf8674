"""
Text formats for graphs.

graph6 (bit-exact, n <= 62): one header byte 63+n, then the upper triangle of
the adjacency matrix in column order, six bits per byte, each byte offset by
63. Decoding and encoding go through networkx once the input has been
validated here, so that errors can carry byte offsets.

Edge lists: ``n=<int>; <u>-<v>,<u>-<v>,...``.
"""
import re

import networkx as nx

from posetforge.base.errors import GraphFormatError
from posetforge.base.graph import Graph

GRAPH6_HEADER = '>>graph6<<'
MAX_GRAPH6_VERTICES = 62

_EDGE_LIST_RE = re.compile(r'^\s*n\s*=\s*(\d+)\s*(?:;\s*(.*?))?\s*$')


def _graph6_length(n):
    bits = n * (n - 1) // 2
    return 1 + (bits + 5) // 6


def parse_graph6(text):
    """Decode a graph6 string.

    Parameters
    ----------
    text : str or bytes
        A single graph6 record, optionally prefixed by ``>>graph6<<`` and
        followed by a newline.

    Returns
    -------
    graph : Graph

    Raises
    ------
    GraphFormatError
        On a malformed header byte, a truncated or overlong bit vector, or a
        character outside the graph6 alphabet; the error carries the byte
        offset.
    """
    if isinstance(text, bytes):
        text = text.decode('ascii', errors='replace')
    base = 0
    if text.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        text = text[base:]
    text = text.rstrip('\r\n')
    if not text:
        raise GraphFormatError("empty graph6 record", base)
    for offset, char in enumerate(text):
        if not 63 <= ord(char) <= 126:
            raise GraphFormatError("character %r outside graph6 range" % char,
                                   base + offset)
    n = ord(text[0]) - 63
    if n > MAX_GRAPH6_VERTICES:
        raise GraphFormatError("header byte %r announces more than %d vertices"
                               % (text[0], MAX_GRAPH6_VERTICES), base)
    expected = _graph6_length(n)
    if len(text) < expected:
        raise GraphFormatError("truncated bit vector: expected %d bytes, got %d"
                               % (expected, len(text)), base + len(text))
    if len(text) > expected:
        raise GraphFormatError("trailing data after bit vector",
                               base + expected)
    decoded = nx.from_graph6_bytes(text.encode('ascii'))
    return Graph(n, decoded.edges())


def format_graph6(graph):
    """Encode a graph as graph6 text (no header, no newline)."""
    if graph.n > MAX_GRAPH6_VERTICES:
        raise ValueError("graph6 supports at most %d vertices"
                         % MAX_GRAPH6_VERTICES)
    nxg = to_networkx(graph)
    data = nx.to_graph6_bytes(nxg, nodes=list(range(graph.n)), header=False)
    return data.decode('ascii').rstrip('\n')


def parse_edge_list(text):
    """Decode ``n=<int>; u-v,u-v,...``.

    Raises
    ------
    GraphFormatError
        With the character offset of the first malformed token.
    """
    match = _EDGE_LIST_RE.match(text)
    if match is None:
        raise GraphFormatError("expected 'n=<int>; u-v,...'", 0)
    n = int(match.group(1))
    body = match.group(2) or ''
    start = match.start(2) if match.group(2) is not None else len(text)
    edges = []
    position = start
    for token in body.split(','):
        stripped = token.strip()
        if stripped:
            parts = stripped.split('-')
            if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
                raise GraphFormatError("malformed edge %r" % stripped, position)
            u, v = int(parts[0]), int(parts[1])
            if u == v or not (u < n and v < n):
                raise GraphFormatError("invalid edge %r for n=%d"
                                       % (stripped, n), position)
            edges.append((u, v))
        position += len(token) + 1
    return Graph(n, edges)


def format_edge_list(graph):
    """Encode a graph as ``n=<int>; u-v,...`` with sorted edges."""
    edges = ','.join('%d-%d' % edge for edge in graph.sorted_edges())
    return 'n=%d; %s' % (graph.n, edges)


def parse_graph_input(text):
    """Parse either an edge list (starting with ``n=``) or graph6."""
    if text.lstrip().startswith('n='):
        return parse_edge_list(text)
    return parse_graph6(text.strip())


def to_networkx(graph):
    """Convert to a networkx.Graph on nodes 0..n-1."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(graph.n))
    nxg.add_edges_from(graph.edges)
    return nxg


def from_networkx(nxg):
    """Convert a networkx graph, relabeling nodes in sorted order."""
    nodes = sorted(nxg.nodes())
    index = {u: i for i, u in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()])
