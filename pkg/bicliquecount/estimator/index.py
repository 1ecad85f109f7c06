"""
Precomputed split decisions for every U node, so counting can look up the estimator's choice in constant time.

An index is tied to the graph it was built on through a fingerprint of the edge list and is stored as JSON:
{"x": .., "y": .., "graph_hash": .., "u_count": .., "bits": "0110..."} where bit u is 1 for edge-split.
"""
import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from bicliquecount.commands.console import setup_console_logging
from bicliquecount.common import read_json, write_json_atomically
from bicliquecount.engine.options import DEFAULT_COST_CEILING
from bicliquecount.estimator.cost import SplitChoice, estimate_node
from bicliquecount.graph.bipartite import BipartiteGraph
from bicliquecount.graph.cores import NodeRank, core_order

logger = setup_console_logging(__name__)


class CostIndexError(Exception):
    pass


class CostIndexMismatch(CostIndexError):
    pass


@dataclass(frozen=True)
class CostIndex:
    x: int
    y: int
    graph_hash: str
    edge_split: Tuple[bool, ...]

    @property
    def u_count(self) -> int:
        return len(self.edge_split)

    @property
    def node_split_fraction(self) -> Fraction:
        if not self.edge_split:
            return Fraction(0)
        return Fraction(self.edge_split.count(False), len(self.edge_split))

    def as_dict(self) -> dict:
        return {'x': self.x,
                'y': self.y,
                'graph_hash': self.graph_hash,
                'u_count': self.u_count,
                'bits': ''.join('1' if b else '0' for b in self.edge_split)}

    @classmethod
    def from_dict(cls, raw: dict) -> 'CostIndex':
        try:
            bits = raw['bits']
            if set(bits) - {'0', '1'} or len(bits) != raw['u_count']:
                raise CostIndexError('Malformed index bit vector')
            return cls(x=int(raw['x']), y=int(raw['y']), graph_hash=str(raw['graph_hash']),
                       edge_split=tuple(b == '1' for b in bits))
        except (KeyError, TypeError, ValueError) as e:
            raise CostIndexError(f'Malformed cost index: {e}') from e

    def check_graph(self, g: BipartiteGraph):
        fingerprint = graph_fingerprint(g)
        if fingerprint != self.graph_hash:
            raise CostIndexMismatch(f'Cost index was built for graph {self.graph_hash[:12]}, '
                                    f'not for this graph ({fingerprint[:12]})')


def graph_fingerprint(g: BipartiteGraph) -> str:
    digest = hashlib.sha256(f'{g.u_count} {g.v_count}\n'.encode())
    for u, neighbors in enumerate(g.u_adj):
        digest.update(f'{u}:{",".join(map(str, neighbors))}\n'.encode())
    return digest.hexdigest()


def build_cost_index(g: BipartiteGraph, rank: Optional[NodeRank], x: int, y: int,
                     ceiling: float = DEFAULT_COST_CEILING) -> CostIndex:
    if rank is None:
        rank = core_order(g)
    edge_split = tuple(estimate_node(g, rank, u, x, y, ceiling) == SplitChoice.EDGE_SPLIT for u in range(g.u_count))
    index = CostIndex(x=x, y=y, graph_hash=graph_fingerprint(g), edge_split=edge_split)
    logger.debug(f'Cost index at ({x},{y}): {float(index.node_split_fraction):.1%} of {index.u_count} U nodes '
                 f'use node-split')
    return index


def save_cost_index(index: CostIndex, path: str):
    write_json_atomically(index.as_dict(), path)


def load_cost_index(path: str) -> CostIndex:
    try:
        raw = read_json(path)
    except (OSError, ValueError) as e:
        raise CostIndexError(f'Failed to load cost index from {path}') from e
    if not isinstance(raw, dict):
        raise CostIndexError(f'{path} does not contain a cost index')
    return CostIndex.from_dict(raw)
