from typing import List, NamedTuple, Optional

from bicliquecount.engine.binomial import BigCount, binomial
from bicliquecount.engine.state import SearchState
from bicliquecount.graph.bipartite import U_SIDE, V_SIDE


def count_contribution(c0: int, c1: int, p0: int, p1: int, h0: int, h1: int, p: int, q: int) -> BigCount:
    """
    Number of (p,q)-bicliques encoded by a leaf of the search.

    Holds are in every biclique, pivots are optional on both sides. Candidates are optional too, but when both
    candidate sets are non-empty no candidate of one side may be combined with a candidate of the other, hence the
    inclusion-exclusion.
    """
    if c0 == 0 or c1 == 0:
        return binomial(p0 + c0, p - h0) * binomial(p1 + c1, q - h1)
    pivots_only = binomial(p0, p - h0) * binomial(p1, q - h1)
    return (binomial(p0 + c0, p - h0) * binomial(p1, q - h1)
            + binomial(p0, p - h0) * binomial(p1 + c1, q - h1)
            - pivots_only)


def find_pivots(state: SearchState) -> int:
    """Move every candidate adjacent to all opposite candidates into the pivots, U side first."""
    moved = 0
    for side in (U_SIDE, V_SIDE):
        nonnbr = state.nonnbr[side]
        for x in state.candidates(side):
            if nonnbr[x] == 0:
                state.move_to_pivot(side, x)
                moved += 1
    return moved


class Partition(NamedTuple):
    l_u: List[int]
    l_v: List[int]

    @property
    def side(self) -> int:
        return U_SIDE if self.l_u else V_SIDE

    @property
    def nodes(self) -> List[int]:
        return self.l_u or self.l_v


def min_nonneighbor_partition(state: SearchState) -> Partition:
    """
    Pick the candidate w with the fewest non-neighbors on either side and branch on those non-neighbors only.

    For w in C_U, C_U \\ N(w) is C_U itself; for w in C_V, C_V \\ N(w) is C_V. Ties between nodes go to the
    smaller rank with U before V, a tie between the two sides of w keeps L_U. Branch lists ascend in rank.
    """
    c0, c1 = state.size[U_SIDE], state.size[V_SIDE]
    best = None
    for side in (U_SIDE, V_SIDE):
        nonnbr = state.nonnbr[side]
        for x in state.candidates(side):
            l_u, l_v = (c0, nonnbr[x]) if side == U_SIDE else (nonnbr[x], c1)
            key = (min(l_u, l_v), side, x)
            if best is None or key < best[0]:
                best = (key, l_u <= l_v)
    (_, side, w), keep_u = best

    if keep_u:
        l_u = state.candidates(U_SIDE) if side == U_SIDE else state.non_neighbors(V_SIDE, w)
        return Partition(l_u=sorted(l_u), l_v=[])
    l_v = state.non_neighbors(U_SIDE, w) if side == U_SIDE else state.candidates(V_SIDE)
    return Partition(l_u=[], l_v=sorted(l_v))


def early_terminate(state: SearchState, p: int, q: int) -> Optional[BigCount]:
    """
    Count a search node without branching when possible, or None.

    Applies after pivot extraction: too many holds, too few nodes left to reach (p,q), or a single candidate on one
    side, in which case the count is closed form.
    """
    c0, c1, p0, p1, h0, h1 = state.sizes()
    if h0 > p or h1 > q:
        return 0
    if c0 + p0 + h0 < p or c1 + p1 + h1 < q:
        return 0
    if c0 == 1:
        u = state.order[U_SIDE][0]
        n_u = state.neighbors_in_candidates(U_SIDE, u)
        return (binomial(p0, p - h0) * binomial(p1 + c1, q - h1)
                + binomial(p0, p - h0 - 1) * binomial(p1 + n_u, q - h1))
    if c1 == 1:
        v = state.order[V_SIDE][0]
        n_v = state.neighbors_in_candidates(V_SIDE, v)
        return (binomial(p0 + n_v, p - h0) * binomial(p1, q - h1 - 1)
                + binomial(p0 + c0, p - h0) * binomial(p1, q - h1))
    return None
