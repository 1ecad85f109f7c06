"""
Top-level decomposition of a count into independent per-node subproblems.

Every biclique is counted from its lowest ranked U node u. A node-split root holds u alone and takes the higher
ranked two-hop neighbors of u and all of N(u) as candidates. An edge-split root also fixes the lowest ranked V node
v of the biclique, one root per edge (u, v).
"""
import sys
import time
from enum import Enum
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

from tqdm import tqdm

from bicliquecount.commands.console import setup_console_logging
from bicliquecount.engine.binomial import BigCount
from bicliquecount.engine.counters import LeafCounter, SingleCounter
from bicliquecount.engine.metrics import SearchMetrics
from bicliquecount.engine.npc import npc_count
from bicliquecount.engine.options import (SearchOptions, BicliqueArgumentError, RANK_BY_CORE, check_pq,
                                          ensure_recursion_limit)
from bicliquecount.engine.state import SearchState
from bicliquecount.estimator.cost import SplitChoice, estimate_node
from bicliquecount.estimator.index import CostIndex, build_cost_index
from bicliquecount.graph.bipartite import BipartiteGraph
from bicliquecount.graph.cores import NodeRank, core_order, pq_core_reduce

logger = setup_console_logging(__name__)


class SplitStrategy(Enum):
    NODE_SPLIT = 'node-split'
    EDGE_SPLIT = 'edge-split'
    ESTIMATOR = 'estimator'
    ESTIMATOR_INDEX = 'estimator-index'

    @classmethod
    def names(cls) -> List[str]:
        return [s.value for s in cls]


DEFAULT_STRATEGY = SplitStrategy.ESTIMATOR


class PreparedGraph(NamedTuple):
    graph: BipartiteGraph  # the graph actually searched
    rank: NodeRank
    u_ids: Tuple[int, ...]  # input id of each searched U node
    v_ids: Tuple[int, ...]


def prepare_graph(g: BipartiteGraph, p: int, q: int, rank: Optional[NodeRank] = None,
                  options: SearchOptions = SearchOptions()) -> PreparedGraph:
    if options.core_reduction:
        reduction = pq_core_reduce(g, p, q)
        graph, u_ids, v_ids = reduction.graph, reduction.u_ids, reduction.v_ids
    else:
        graph, u_ids, v_ids = g, tuple(range(g.u_count)), tuple(range(g.v_count))

    if rank is not None:
        rank = rank.restrict(u_ids, v_ids)
    elif options.rank_order == RANK_BY_CORE:
        rank = core_order(graph)
    else:
        rank = NodeRank.by_id(graph)
    return PreparedGraph(graph=graph, rank=rank, u_ids=u_ids, v_ids=v_ids)


def node_split_state(g: BipartiteGraph, rank: NodeRank, u: int, track_members: bool = False,
                     incremental: bool = True) -> SearchState:
    u_rank = rank.u_rank
    ru = u_rank[u]
    v_nodes = sorted(g.u_adj[u], key=rank.v_rank.__getitem__)

    # merge the neighbor lists of N(u), keeping only higher ranked U nodes
    common = {}
    for i, v in enumerate(v_nodes):
        for w in g.v_adj[v]:
            if u_rank[w] > ru:
                common.setdefault(w, []).append(i)
    u_nodes = sorted(common, key=u_rank.__getitem__)

    u_adj = [common[w] for w in u_nodes]
    v_adj = [[] for _ in v_nodes]
    for j, neighbors in enumerate(u_adj):
        for i in neighbors:
            v_adj[i].append(j)
    return SearchState(u_nodes, v_nodes, u_adj, v_adj, hold_u=(u,),
                       track_members=track_members, incremental=incremental)


def edge_split_state(g: BipartiteGraph, rank: NodeRank, u: int, v: int, track_members: bool = False,
                     incremental: bool = True) -> SearchState:
    u_rank, v_rank = rank.u_rank, rank.v_rank
    u_nodes = sorted((w for w in g.v_adj[v] if u_rank[w] > u_rank[u]), key=u_rank.__getitem__)
    v_nodes = sorted((x for x in g.u_adj[u] if v_rank[x] > v_rank[v]), key=v_rank.__getitem__)
    v_local = {x: i for i, x in enumerate(v_nodes)}

    u_adj = [sorted(v_local[x] for x in g.u_adj[w] if x in v_local) for w in u_nodes]
    v_adj = [[] for _ in v_nodes]
    for j, neighbors in enumerate(u_adj):
        for i in neighbors:
            v_adj[i].append(j)
    return SearchState(u_nodes, v_nodes, u_adj, v_adj, hold_u=(u,), hold_v=(v,),
                       track_members=track_members, incremental=incremental)


def split_decisions(source: BipartiteGraph,
                    prepared: PreparedGraph,
                    strategy: SplitStrategy,
                    x: int,
                    y: int,
                    index: Optional[CostIndex] = None,
                    options: SearchOptions = SearchOptions()) -> List[bool]:
    """
    Per searched U node: True for edge-split, False for node-split.

    Both estimator strategies judge a node on the input graph `source` in its core order, the layout of an index
    built by the index command, and map the verdicts onto the searched nodes through `prepared.u_ids`.
    """
    g = prepared.graph
    if strategy == SplitStrategy.NODE_SPLIT:
        return [False] * g.u_count
    if strategy == SplitStrategy.EDGE_SPLIT:
        return [True] * g.u_count
    if strategy == SplitStrategy.ESTIMATOR:
        source_rank = core_order(source)
        return [estimate_node(source, source_rank, u, x, y, options.cost_ceiling) == SplitChoice.EDGE_SPLIT
                for u in prepared.u_ids]
    if index is None:
        index = build_cost_index(source, None, x, y, options.cost_ceiling)
    return [index.edge_split[u] for u in prepared.u_ids]


def count_roots(g: BipartiteGraph,
                rank: NodeRank,
                roots: Sequence[int],
                decisions: Sequence[bool],
                counter: LeafCounter,
                metrics: SearchMetrics,
                options: SearchOptions = SearchOptions(),
                progress: Optional[Callable] = None) -> BigCount:
    total = 0
    track, incremental = counter.track_members, options.incremental_nonnbr
    for u in roots:
        if decisions[u]:
            metrics.edge_split_roots += 1
            for v in g.u_adj[u]:
                state = edge_split_state(g, rank, u, v, track, incremental)
                total += npc_count(state, counter, metrics, options)
        else:
            metrics.node_split_roots += 1
            state = node_split_state(g, rank, u, track, incremental)
            total += npc_count(state, counter, metrics, options)
        if progress:
            progress()
    return total


def run_search(prepared: PreparedGraph,
               counter: LeafCounter,
               decisions: Sequence[bool],
               options: SearchOptions = SearchOptions()) -> Tuple[BigCount, SearchMetrics]:
    ensure_recursion_limit(options.max_depth)
    g = prepared.graph
    metrics = SearchMetrics()
    started = time.monotonic()
    if options.workers > 1 and g.u_count > 1:
        from bicliquecount.engine.parallel import count_roots_in_pool
        total = count_roots_in_pool(prepared, counter, decisions, metrics, options)
    else:
        with tqdm(total=g.u_count, disable=not options.progress, desc='roots', unit='node',
                  file=sys.stderr) as bar:
            total = count_roots(g, prepared.rank, range(g.u_count), decisions, counter, metrics, options,
                                progress=bar.update)
    logger.debug(f'Searched {g.u_count} roots with {metrics.npc_calls} search nodes in '
                 f'{time.monotonic() - started:.3f}s')
    return total, metrics


def default_estimator_parameters(p: int, q: int) -> Tuple[int, int]:
    m = min(p, q)
    return m, m


def top_level_count(g: BipartiteGraph,
                    p: int,
                    q: int,
                    strategy: SplitStrategy = DEFAULT_STRATEGY,
                    rank: Optional[NodeRank] = None,
                    options: SearchOptions = SearchOptions(),
                    index: Optional[CostIndex] = None,
                    estimator_parameters: Optional[Tuple[int, int]] = None) -> Tuple[BigCount, SearchMetrics]:
    """Exact number of (p,q)-bicliques in g, with the metrics of the search that found it."""
    check_pq(p, q)
    strategy = SplitStrategy(strategy)
    if index is not None and index.u_count != g.u_count:
        raise BicliqueArgumentError(f'Cost index covers {index.u_count} U nodes, the graph has {g.u_count}')
    prepared = prepare_graph(g, p, q, rank, options)
    x, y = estimator_parameters or default_estimator_parameters(p, q)
    decisions = split_decisions(g, prepared, strategy, x, y, index, options)
    return run_search(prepared, SingleCounter(p, q), decisions, options)
