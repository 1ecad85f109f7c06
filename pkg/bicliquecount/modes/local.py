"""Local counting: for every node, the number of (p,q)-bicliques that contain it."""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from bicliquecount.engine.binomial import BigCount, binomial
from bicliquecount.engine.counters import LeafCounter
from bicliquecount.engine.metrics import SearchMetrics
from bicliquecount.engine.options import SearchOptions, check_pq
from bicliquecount.engine.state import SearchState
from bicliquecount.engine.toplevel import (DEFAULT_STRATEGY, SplitStrategy, default_estimator_parameters,
                                           prepare_graph, run_search, split_decisions)
from bicliquecount.estimator.index import CostIndex
from bicliquecount.graph.bipartite import BipartiteGraph, U_SIDE, V_SIDE
from bicliquecount.graph.cores import NodeRank


@dataclass
class LocalCounts:
    p: int
    q: int
    u_counts: List[BigCount] = field(default_factory=list)
    v_counts: List[BigCount] = field(default_factory=list)

    @classmethod
    def zeros(cls, p: int, q: int, u_count: int, v_count: int) -> 'LocalCounts':
        return cls(p=p, q=q, u_counts=[0] * u_count, v_counts=[0] * v_count)

    @property
    def total(self) -> BigCount:
        # every biclique holds exactly p U nodes
        return sum(self.u_counts) // self.p

    def identities_hold(self, total: BigCount) -> bool:
        return sum(self.u_counts) == self.p * total and sum(self.v_counts) == self.q * total

    def top(self, k: int) -> List[Tuple[str, int, BigCount]]:
        """The k largest counts as (side, id, count), ties by side then id."""
        rows = [('U', u, c) for u, c in enumerate(self.u_counts)] + [('V', v, c) for v, c in enumerate(self.v_counts)]
        rows.sort(key=lambda row: (-row[2], row[0], row[1]))
        return rows[:k]


def _attribute(local: LocalCounts, pivot_u: Sequence[int], pivot_v: Sequence[int], hold_u: Sequence[int],
               hold_v: Sequence[int]) -> BigCount:
    p, q = local.p, local.q
    p0, p1, h0, h1 = len(pivot_u), len(pivot_v), len(hold_u), len(hold_v)
    with_held = binomial(p0, p - h0) * binomial(p1, q - h1)
    if not with_held:
        return 0
    per_pivot_u = binomial(p0 - 1, p - h0 - 1) * binomial(p1, q - h1)
    per_pivot_v = binomial(p0, p - h0) * binomial(p1 - 1, q - h1 - 1)
    for u in pivot_u:
        local.u_counts[u] += per_pivot_u
    for v in pivot_v:
        local.v_counts[v] += per_pivot_v
    for u in hold_u:
        local.u_counts[u] += with_held
    for v in hold_v:
        local.v_counts[v] += with_held
    return with_held


def local_leaf(state: SearchState, p: int, q: int, local: LocalCounts) -> BigCount:
    """
    Credit every node of a leaf's bicliques, returning the number of bicliques.

    With candidates on both sides, bicliques using no V candidate are credited first with the U candidates
    treated as pivots; then each V candidate in turn is held and leaves the pool of optional V nodes for the
    candidates after it.
    """
    candidates_u = state.candidate_labels(U_SIDE)
    candidates_v = state.candidate_labels(V_SIDE)
    pivot_u, pivot_v = state.pivots
    hold_u, hold_v = state.holds
    if not candidates_u or not candidates_v:
        return _attribute(local, pivot_u + candidates_u, pivot_v + candidates_v, hold_u, hold_v)

    total = _attribute(local, pivot_u + candidates_u, pivot_v, hold_u, hold_v)
    for i, v in enumerate(candidates_v):
        total += _attribute(local, pivot_u, pivot_v + candidates_v[i + 1:], hold_u, hold_v + [v])
    return total


class LocalCounter(LeafCounter):
    track_members = True

    def __init__(self, p: int, q: int, u_count: int, v_count: int):
        super().__init__(p, q)
        self.local = LocalCounts.zeros(p, q, u_count, v_count)

    def leaf(self, state: SearchState) -> BigCount:
        return local_leaf(state, self.local.p, self.local.q, self.local)

    def terminate_early(self, state: SearchState) -> Optional[BigCount]:
        # only the size bounds: the closed forms for single candidates do not say who is in the bicliques
        c0, c1, p0, p1, h0, h1 = state.sizes()
        p, q = self.local.p, self.local.q
        if h0 > p or h1 > q or c0 + p0 + h0 < p or c1 + p1 + h1 < q:
            return 0
        return None

    def spawn(self) -> 'LocalCounter':
        return LocalCounter(self.local.p, self.local.q, len(self.local.u_counts), len(self.local.v_counts))

    def absorb(self, other: 'LocalCounter'):
        for mine, theirs in ((self.local.u_counts, other.local.u_counts), (self.local.v_counts, other.local.v_counts)):
            for i, count in enumerate(theirs):
                mine[i] += count


def local_count(g: BipartiteGraph,
                p: int,
                q: int,
                strategy: SplitStrategy = DEFAULT_STRATEGY,
                rank: Optional[NodeRank] = None,
                options: SearchOptions = SearchOptions(),
                index: Optional[CostIndex] = None,
                estimator_parameters: Optional[Tuple[int, int]] = None) -> Tuple[LocalCounts, SearchMetrics]:
    """Per node counts indexed by the ids of g; nodes outside the (p,q)-core count 0."""
    check_pq(p, q)
    strategy = SplitStrategy(strategy)
    prepared = prepare_graph(g, p, q, rank, options)
    x, y = estimator_parameters or default_estimator_parameters(p, q)
    decisions = split_decisions(g, prepared, strategy, x, y, index, options)
    counter = LocalCounter(p, q, prepared.graph.u_count, prepared.graph.v_count)
    _, metrics = run_search(prepared, counter, decisions, options)

    result = LocalCounts.zeros(p, q, g.u_count, g.v_count)
    for reduced, original in enumerate(prepared.u_ids):
        result.u_counts[original] = counter.local.u_counts[reduced]
    for reduced, original in enumerate(prepared.v_ids):
        result.v_counts[original] = counter.local.v_counts[reduced]
    return result, metrics
