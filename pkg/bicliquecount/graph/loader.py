"""
Edge-list parsing and serialization for bipartite graphs.

Two input formats are understood:

  plain   whitespace separated "u v" pairs of non-negative integers, one edge per line. Blank lines and lines
          starting with '#' are skipped.
  konect  KONECT exports: lines starting with '%' are comments, the remaining lines are "u v [weight [timestamp]]"
          with 1-based ids. Extra columns are ignored.

External ids may be sparse. They are compacted per side to dense 0-based ids in ascending external id order, and
the external ids are kept so results can be reported against the input.
"""
import io
import sys
from enum import Enum
from typing import BinaryIO, Iterable, List, NamedTuple, Optional, TextIO, Tuple, Union

from bicliquecount.commands.console import setup_console_logging
from bicliquecount.graph.bipartite import BipartiteGraph

logger = setup_console_logging(__name__)

STDIN_PATH = '-'


class GraphFormat(Enum):
    PLAIN = 'plain'
    KONECT = 'konect'


class GraphParseError(Exception):
    def __init__(self, message, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f'line {line_number}: {message}'
        super().__init__(message)


class EmptyGraphError(GraphParseError):
    pass


class LoadedGraph(NamedTuple):
    graph: BipartiteGraph
    u_labels: Tuple[int, ...]  # external id of each dense U id
    v_labels: Tuple[int, ...]
    duplicates_dropped: int


def _text_lines(source: Union[BinaryIO, TextIO]) -> Iterable[str]:
    for line in source:
        if isinstance(line, bytes):
            try:
                line = line.decode('utf-8')
            except UnicodeDecodeError as e:
                raise GraphParseError(f'input is not valid UTF-8 ({e})') from e
        yield line


def _parse_pairs(source, graph_format: GraphFormat) -> List[Tuple[int, int]]:
    pairs = []
    comment_prefix = '%' if graph_format == GraphFormat.KONECT else '#'
    for line_number, raw in enumerate(_text_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith(comment_prefix):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise GraphParseError(f'expected "u v", got {line!r}', line_number)
        if graph_format == GraphFormat.PLAIN and len(tokens) > 2:
            raise GraphParseError(f'expected exactly two ids, got {line!r}', line_number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f'non-integer node id in {line!r}', line_number) from None
        if graph_format == GraphFormat.KONECT:
            if u < 1 or v < 1:
                raise GraphParseError(f'konect ids are 1-based, got {line!r}', line_number)
        elif u < 0 or v < 0:
            raise GraphParseError(f'negative node id in {line!r}', line_number)
        pairs.append((u, v))
    return pairs


def read_graph(source: Union[BinaryIO, TextIO], graph_format: GraphFormat = GraphFormat.PLAIN,
               allow_empty: bool = False) -> LoadedGraph:
    pairs = _parse_pairs(source, graph_format)
    if not pairs and not allow_empty:
        raise EmptyGraphError('input contains no edges')

    u_labels = tuple(sorted({u for u, _ in pairs}))
    v_labels = tuple(sorted({v for _, v in pairs}))
    u_ids = {label: i for i, label in enumerate(u_labels)}
    v_ids = {label: i for i, label in enumerate(v_labels)}

    graph = BipartiteGraph.from_edges(len(u_labels), len(v_labels), ((u_ids[u], v_ids[v]) for u, v in pairs))
    duplicates = len(pairs) - graph.edge_count
    if duplicates:
        logger.warning(f'Dropped {duplicates} duplicate edge(s)')
    return LoadedGraph(graph=graph, u_labels=u_labels, v_labels=v_labels, duplicates_dropped=duplicates)


def load_graph(source: Union[BinaryIO, TextIO], graph_format: GraphFormat = GraphFormat.PLAIN) -> BipartiteGraph:
    return read_graph(source, graph_format).graph


def read_graph_file(path: str, graph_format: GraphFormat = GraphFormat.PLAIN, allow_empty: bool = False) -> LoadedGraph:
    if path == STDIN_PATH:
        return read_graph(sys.stdin.buffer, graph_format, allow_empty)
    with open(path, 'rb') as fp:
        return read_graph(fp, graph_format, allow_empty)


def write_graph(g: BipartiteGraph, stream: TextIO, u_labels=None, v_labels=None):
    """Write g as a plain edge list, optionally translating dense ids through the given labels."""
    for u, v in g.edges():
        stream.write(f'{u_labels[u] if u_labels else u} {v_labels[v] if v_labels else v}\n')


def graph_to_text(g: BipartiteGraph, u_labels=None, v_labels=None) -> str:
    buffer = io.StringIO()
    write_graph(g, buffer, u_labels, v_labels)
    return buffer.getvalue()
