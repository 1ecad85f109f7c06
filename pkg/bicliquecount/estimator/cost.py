"""
Per-node prediction of whether node-split or edge-split is the cheaper way to count from a U node.

Search cost is estimated from the size of the candidate sets a split would create: with l U candidates, r V
candidates and e edges between them, min((e/m)^m, 2^(m/2)) where m = min(l, r).
"""
import math
from enum import Enum
from typing import NamedTuple

from bicliquecount.engine.options import DEFAULT_COST_CEILING
from bicliquecount.graph.bipartite import BipartiteGraph
from bicliquecount.graph.cores import NodeRank

CostValue = float

_LOG_2 = math.log(2)


class SplitChoice(Enum):
    NODE_SPLIT = 'node-split'
    EDGE_SPLIT = 'edge-split'


def cost_es(l: int, r: int, e: int, x: int, y: int, ceiling: float = DEFAULT_COST_CEILING) -> CostValue:
    if l < x or r < y:
        return 0.0
    m = min(l, r)
    if e == 0 or m == 0:
        return 0.0
    # compare in the log domain, (e/m)^m overflows floats long before the counts get interesting
    log_density_term = m * math.log(e / m)
    log_size_term = m / 2 * _LOG_2
    if log_density_term <= log_size_term:
        log_cost = log_density_term
        if log_cost >= math.log(ceiling):
            return ceiling
        return (e / m) ** m
    if log_size_term >= math.log(ceiling):
        return ceiling
    return 2 ** (m / 2)


class SplitCosts(NamedTuple):
    node: CostValue
    edge: CostValue


def estimate_costs(g: BipartiteGraph, rank: NodeRank, u: int, x: int, y: int,
                   ceiling: float = DEFAULT_COST_CEILING) -> SplitCosts:
    u_rank = rank.u_rank
    ru = u_rank[u]
    neighbors = sorted(g.u_adj[u], key=rank.v_rank.__getitem__)

    # common neighbor count of every higher ranked two-hop node w
    cnt = {}
    l = 0
    for v in neighbors:
        for w in g.v_adj[v]:
            if u_rank[w] > ru:
                cnt[w] = cnt.get(w, 0) + 1
                if cnt[w] == y:
                    l += 1

    r = 0
    e = 0
    ss = [0] * len(neighbors)
    for i, v in enumerate(neighbors):
        qualifying = 0
        for w in g.v_adj[v]:
            if u_rank[w] > ru and cnt[w] >= y:
                qualifying += 1
                e += 1
        if qualifying >= x - 1:
            ss[i] = 1
            r += 1
    for i in range(len(ss) - 1, 0, -1):
        ss[i - 1] += ss[i]

    cost_edge = 0.0
    for i, v in enumerate(neighbors):
        l_edge = 0
        e_edge = 0
        for w in g.v_adj[v]:
            if u_rank[w] > ru:
                if cnt[w] >= y:
                    l_edge += 1
                    e_edge += cnt[w]
                cnt[w] -= 1
        if l_edge >= x - 1:
            cost_edge = min(cost_edge + cost_es(l_edge, ss[i], e_edge, x, y, ceiling), ceiling)

    return SplitCosts(node=cost_es(l, r, e, x, y, ceiling), edge=cost_edge)


def estimate_node(g: BipartiteGraph, rank: NodeRank, u: int, x: int, y: int,
                  ceiling: float = DEFAULT_COST_CEILING) -> SplitChoice:
    costs = estimate_costs(g, rank, u, x, y, ceiling)
    # ties go to edge-split
    return SplitChoice.NODE_SPLIT if costs.node < costs.edge else SplitChoice.EDGE_SPLIT
