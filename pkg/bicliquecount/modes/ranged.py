"""Range counting: every (p,q) of a rectangle [p_l, p_u] x [q_l, q_u] from a single search."""
from dataclasses import dataclass, field
from typing import Iterator, List, NamedTuple, Optional, Tuple

from bicliquecount.engine.binomial import BigCount, binomial
from bicliquecount.engine.counters import LeafCounter
from bicliquecount.engine.metrics import SearchMetrics
from bicliquecount.engine.options import BicliqueArgumentError, SearchOptions
from bicliquecount.engine.state import SearchState
from bicliquecount.engine.toplevel import DEFAULT_STRATEGY, SplitStrategy, prepare_graph, run_search, split_decisions
from bicliquecount.estimator.index import CostIndex
from bicliquecount.graph.bipartite import BipartiteGraph
from bicliquecount.graph.cores import NodeRank


class RangeBounds(NamedTuple):
    p_l: int
    p_u: int
    q_l: int
    q_u: int

    def check(self):
        if not (1 <= self.p_l <= self.p_u and 1 <= self.q_l <= self.q_u):
            raise BicliqueArgumentError(f'Invalid range [{self.p_l},{self.p_u}]x[{self.q_l},{self.q_u}]: '
                                        f'need 1 <= p_l <= p_u and 1 <= q_l <= q_u')
        return self


@dataclass
class RangeMatrix:
    bounds: RangeBounds
    cells: List[List[BigCount]] = field(default_factory=list)

    @classmethod
    def zeros(cls, bounds: RangeBounds) -> 'RangeMatrix':
        rows = bounds.p_u - bounds.p_l + 1
        columns = bounds.q_u - bounds.q_l + 1
        return cls(bounds=bounds, cells=[[0] * columns for _ in range(rows)])

    def __getitem__(self, pq: Tuple[int, int]) -> BigCount:
        p, q = pq
        return self.cells[p - self.bounds.p_l][q - self.bounds.q_l]

    def add(self, p: int, q: int, count: BigCount):
        self.cells[p - self.bounds.p_l][q - self.bounds.q_l] += count

    def items(self) -> Iterator[Tuple[int, int, BigCount]]:
        for i, row in enumerate(self.cells):
            for j, count in enumerate(row):
                yield self.bounds.p_l + i, self.bounds.q_l + j, count


def _sweep(matrix: RangeMatrix, p_range, q_range, u_pool: int, v_pool: int, h0: int, h1: int, sign: int = 1):
    added = 0
    for p in p_range:
        u_ways = binomial(u_pool, p - h0)
        if not u_ways:
            continue
        for q in q_range:
            count = u_ways * binomial(v_pool, q - h1)
            if count:
                matrix.add(p, q, sign * count)
                added += sign * count
    return added


def range_leaf(state: SearchState, bounds: RangeBounds, matrix: RangeMatrix) -> BigCount:
    """Add a leaf's bicliques to every cell they fit in, returning how many were added over all cells."""
    c0, c1, p0, p1, h0, h1 = state.sizes()
    l0, l1 = max(h0, bounds.p_l), max(h1, bounds.q_l)

    p_with_candidates = range(l0, min(p0 + c0 + h0, bounds.p_u) + 1)
    q_with_candidates = range(l1, min(p1 + c1 + h1, bounds.q_u) + 1)
    if c0 == 0 or c1 == 0:
        return _sweep(matrix, p_with_candidates, q_with_candidates, p0 + c0, p1 + c1, h0, h1)

    p_pivots_only = range(l0, min(p0 + h0, bounds.p_u) + 1)
    q_pivots_only = range(l1, min(p1 + h1, bounds.q_u) + 1)
    return (_sweep(matrix, p_with_candidates, q_pivots_only, p0 + c0, p1, h0, h1)
            + _sweep(matrix, p_pivots_only, q_with_candidates, p0, p1 + c1, h0, h1)
            + _sweep(matrix, p_pivots_only, q_pivots_only, p0, p1, h0, h1, sign=-1))


class RangeCounter(LeafCounter):
    def __init__(self, bounds: RangeBounds):
        super().__init__(bounds.p_u, bounds.q_u)
        self.bounds = bounds
        self.matrix = RangeMatrix.zeros(bounds)

    def leaf(self, state: SearchState) -> BigCount:
        return range_leaf(state, self.bounds, self.matrix)

    def terminate_early(self, state: SearchState) -> Optional[BigCount]:
        c0, c1, p0, p1, h0, h1 = state.sizes()
        b = self.bounds
        if h0 > b.p_u or h1 > b.q_u or c0 + p0 + h0 < b.p_l or c1 + p1 + h1 < b.q_l:
            return 0
        return None

    def spawn(self) -> 'RangeCounter':
        return RangeCounter(self.bounds)

    def absorb(self, other: 'RangeCounter'):
        for p, q, count in other.matrix.items():
            self.matrix.add(p, q, count)


def range_count(g: BipartiteGraph,
                bounds: RangeBounds,
                strategy: SplitStrategy = DEFAULT_STRATEGY,
                rank: Optional[NodeRank] = None,
                options: SearchOptions = SearchOptions(),
                index: Optional[CostIndex] = None,
                estimator_parameters: Optional[Tuple[int, int]] = None) -> Tuple[RangeMatrix, SearchMetrics]:
    bounds = RangeBounds(*bounds).check()
    strategy = SplitStrategy(strategy)
    # the weakest reduction that is safe for every cell
    prepared = prepare_graph(g, bounds.p_l, bounds.q_l, rank, options)
    m = min(bounds.p_l, bounds.q_l)
    x, y = estimator_parameters or (m, m)
    decisions = split_decisions(g, prepared, strategy, x, y, index, options)
    counter = RangeCounter(bounds)
    _, metrics = run_search(prepared, counter, decisions, options)
    return counter.matrix, metrics
