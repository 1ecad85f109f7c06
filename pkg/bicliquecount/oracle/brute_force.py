"""
Definition-level reference counts, independent of the pivot search.

One side is enumerated by subsets of size p (or q), intersecting neighbor sets on the way and pruning as soon as
fewer common neighbors remain than the other side needs. Each surviving subset with c common neighbors is in
C(c, q) bicliques. The enumerated side is the one with the smaller C(side size, parameter).
"""
from typing import Callable, Tuple

from bicliquecount.engine.binomial import BigCount, binomial
from bicliquecount.engine.options import check_pq
from bicliquecount.graph.bipartite import BipartiteGraph
from bicliquecount.modes.local import LocalCounts

DEFAULT_WORK_BUDGET = 5_000_000


class OracleBudgetExceeded(RuntimeError):
    pass


def _oriented(g: BipartiteGraph, p: int, q: int, transpose: bool = None) -> Tuple[BipartiteGraph, int, int, bool]:
    if transpose is None:
        transpose = binomial(g.v_count, q) < binomial(g.u_count, p)
    if transpose:
        return g.transpose(), q, p, True
    return g, p, q, False


def _enumerate(g: BipartiteGraph, p: int, q: int, visit: Callable, budget: int):
    """Call visit(subset, common) for every p-subset of U with at least q common neighbors."""
    work = 0
    neighbor_sets = [frozenset(n) for n in g.u_adj]
    subset = []

    def extend(start: int, common: frozenset):
        nonlocal work
        work += 1
        if work > budget:
            raise OracleBudgetExceeded(f'Brute force count exceeded its budget of {budget} steps')
        if len(subset) == p:
            visit(subset, common)
            return
        for u in range(start, g.u_count - (p - len(subset)) + 1):
            narrowed = common & neighbor_sets[u] if subset else neighbor_sets[u]
            if len(narrowed) < q:
                continue
            subset.append(u)
            extend(u + 1, narrowed)
            subset.pop()

    extend(0, frozenset())


def brute_force_count(g: BipartiteGraph, p: int, q: int, budget: int = DEFAULT_WORK_BUDGET,
                      transpose: bool = None) -> BigCount:
    check_pq(p, q)
    g, p, q, _ = _oriented(g, p, q, transpose)
    total = 0

    def visit(_subset, common):
        nonlocal total
        total += binomial(len(common), q)

    _enumerate(g, p, q, visit, budget)
    return total


def brute_force_local(g: BipartiteGraph, p: int, q: int, budget: int = DEFAULT_WORK_BUDGET,
                      transpose: bool = None) -> LocalCounts:
    check_pq(p, q)
    original_p, original_q = p, q
    oriented, p, q, transposed = _oriented(g, p, q, transpose)
    subset_side = [0] * oriented.u_count
    common_side = [0] * oriented.v_count

    def visit(subset, common):
        ways = binomial(len(common), q)
        for u in subset:
            subset_side[u] += ways
        # a common neighbor is in the bicliques that pick it plus q - 1 of the others
        with_node = binomial(len(common) - 1, q - 1)
        for v in common:
            common_side[v] += with_node

    _enumerate(oriented, p, q, visit, budget)
    if transposed:
        subset_side, common_side = common_side, subset_side
    return LocalCounts(p=original_p, q=original_q, u_counts=subset_side, v_counts=common_side)
