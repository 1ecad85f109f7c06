import heapq
from collections import deque
from typing import NamedTuple, Tuple

from bicliquecount.commands.console import setup_console_logging
from bicliquecount.graph.bipartite import BipartiteGraph, U_SIDE, V_SIDE

logger = setup_console_logging(__name__)


class NodeRank(NamedTuple):
    """
    Positions of every node in one total order over U and V.

    Only comparisons within a side are ever made, but both sides draw from the same range of positions.
    """
    u_rank: Tuple[int, ...]
    v_rank: Tuple[int, ...]

    @classmethod
    def by_id(cls, g: BipartiteGraph) -> 'NodeRank':
        """U nodes by id, then V nodes by id."""
        return cls(u_rank=tuple(range(g.u_count)), v_rank=tuple(range(g.u_count, g.u_count + g.v_count)))

    def restrict(self, u_ids, v_ids) -> 'NodeRank':
        """Ranks of a subgraph whose node i maps to u_ids[i] / v_ids[i] in the ranked graph."""
        return NodeRank(u_rank=tuple(self.u_rank[u] for u in u_ids), v_rank=tuple(self.v_rank[v] for v in v_ids))


class CoreReduction(NamedTuple):
    graph: BipartiteGraph
    u_ids: Tuple[int, ...]  # original id of each reduced U node
    v_ids: Tuple[int, ...]


def pq_core_reduce(g: BipartiteGraph, p: int, q: int) -> CoreReduction:
    """
    The (p,q)-core of g: the maximal subgraph in which every U node keeps at least q neighbors and every V node at
    least p neighbors. Nodes are peeled iteratively, each edge is looked at a constant number of times.
    """
    minimum = (q, p)
    degree = [[len(n) for n in g.u_adj], [len(n) for n in g.v_adj]]
    removed = [[False] * g.u_count, [False] * g.v_count]
    queue = deque()
    for side in (U_SIDE, V_SIDE):
        for node, d in enumerate(degree[side]):
            if d < minimum[side]:
                removed[side][node] = True
                queue.append((side, node))

    while queue:
        side, node = queue.popleft()
        other = 1 - side
        for neighbor in g.adj(side)[node]:
            if removed[other][neighbor]:
                continue
            degree[other][neighbor] -= 1
            if degree[other][neighbor] < minimum[other]:
                removed[other][neighbor] = True
                queue.append((other, neighbor))

    u_ids = tuple(u for u in range(g.u_count) if not removed[U_SIDE][u])
    v_ids = tuple(v for v in range(g.v_count) if not removed[V_SIDE][v])
    v_new = {v: i for i, v in enumerate(v_ids)}
    edges = [(i, v_new[v]) for i, u in enumerate(u_ids) for v in g.u_adj[u] if v in v_new]
    reduced = BipartiteGraph.from_edges(len(u_ids), len(v_ids), edges)
    logger.debug(f'({p},{q})-core keeps {len(u_ids)}/{g.u_count} U, {len(v_ids)}/{g.v_count} V nodes, '
                 f'{reduced.edge_count}/{g.edge_count} edges')
    return CoreReduction(graph=reduced, u_ids=u_ids, v_ids=v_ids)


def core_order(g: BipartiteGraph) -> NodeRank:
    """
    Degeneracy order over U and V as one node set: repeatedly remove a node of minimum current degree, its rank
    being the removal index. Ties go to U before V, then to the smaller id.
    """
    degree = [[len(n) for n in g.u_adj], [len(n) for n in g.v_adj]]
    removed = [[False] * g.u_count, [False] * g.v_count]
    ranks = [[0] * g.u_count, [0] * g.v_count]

    # stale heap entries are skipped when their degree no longer matches
    heap = [(degree[side][node], side, node)
            for side in (U_SIDE, V_SIDE) for node in range(g.side_count(side))]
    heapq.heapify(heap)
    position = 0
    while heap:
        d, side, node = heapq.heappop(heap)
        if removed[side][node] or d != degree[side][node]:
            continue
        removed[side][node] = True
        ranks[side][node] = position
        position += 1
        other = 1 - side
        for neighbor in g.adj(side)[node]:
            if not removed[other][neighbor]:
                degree[other][neighbor] -= 1
                heapq.heappush(heap, (degree[other][neighbor], other, neighbor))

    return NodeRank(u_rank=tuple(ranks[U_SIDE]), v_rank=tuple(ranks[V_SIDE]))
