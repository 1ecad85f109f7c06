"""A plain listing baseline: every (p,q)-biclique spelled out, for cross-checking the counting code."""
from itertools import combinations
from typing import Iterator, Tuple

from bicliquecount.engine.options import check_pq
from bicliquecount.graph.bipartite import BipartiteGraph

Biclique = Tuple[Tuple[int, ...], Tuple[int, ...]]


def list_bicliques(g: BipartiteGraph, p: int, q: int) -> Iterator[Biclique]:
    """Yield (U nodes, V nodes) of every (p,q)-biclique, both ascending, in lexicographic order."""
    check_pq(p, q)
    neighbor_sets = [set(n) for n in g.u_adj]
    for left in combinations(range(g.u_count), p):
        common = set.intersection(*(neighbor_sets[u] for u in left))
        if len(common) >= q:
            for right in combinations(sorted(common), q):
                yield left, right
