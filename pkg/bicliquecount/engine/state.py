"""
Mutable search state of one top-level subproblem.

Nodes of a subproblem get local ids 0..n-1 per side, ascending in rank, so comparing local ids compares ranks.
Each candidate set is an array partition: order[side][:size[side]] are the candidates, pos[side][x] is the slot of
x, and removal swaps x to the boundary. Every change is journaled on a trail and undone in LIFO order, which puts
every array back exactly as it was.
"""
from typing import List, Optional, Sequence, Tuple

from bicliquecount.graph.bipartite import U_SIDE, V_SIDE

_REMOVED = 0
_PIVOT = 1
_HOLD = 2


class StateIntegrityError(AssertionError):
    pass


class SearchDepthExceeded(RuntimeError):
    pass


class SearchState:
    def __init__(self,
                 u_labels: Sequence[int],
                 v_labels: Sequence[int],
                 u_adj: Sequence[Sequence[int]],
                 v_adj: Sequence[Sequence[int]],
                 hold_u: Sequence[int] = (),
                 hold_v: Sequence[int] = (),
                 track_members: bool = False,
                 incremental: bool = True):
        # labels translate local ids to ids of the graph being counted
        self.labels = (tuple(u_labels), tuple(v_labels))
        self.adj = (tuple(tuple(a) for a in u_adj), tuple(tuple(a) for a in v_adj))
        self.adj_sets = (tuple(frozenset(a) for a in self.adj[U_SIDE]),
                         tuple(frozenset(a) for a in self.adj[V_SIDE]))
        counts = (len(self.labels[U_SIDE]), len(self.labels[V_SIDE]))
        self.order = [list(range(counts[U_SIDE])), list(range(counts[V_SIDE]))]
        self.pos = [list(range(counts[U_SIDE])), list(range(counts[V_SIDE]))]
        self.size = [counts[U_SIDE], counts[V_SIDE]]
        self.nonnbr = [[counts[V_SIDE] - len(a) for a in self.adj[U_SIDE]],
                       [counts[U_SIDE] - len(a) for a in self.adj[V_SIDE]]]
        self.edge_count = sum(len(a) for a in self.adj[U_SIDE])
        self.pivot_size = [0, 0]
        self.hold_size = [len(hold_u), len(hold_v)]
        self.track_members = track_members
        self.pivots: Optional[Tuple[List[int], List[int]]] = ([], []) if track_members else None
        self.holds: Optional[Tuple[List[int], List[int]]] = (list(hold_u), list(hold_v)) if track_members else None
        self.incremental = incremental
        self.trail = []

    @property
    def c0(self) -> int:
        return self.size[U_SIDE]

    @property
    def c1(self) -> int:
        return self.size[V_SIDE]

    @property
    def p0(self) -> int:
        return self.pivot_size[U_SIDE]

    @property
    def p1(self) -> int:
        return self.pivot_size[V_SIDE]

    @property
    def h0(self) -> int:
        return self.hold_size[U_SIDE]

    @property
    def h1(self) -> int:
        return self.hold_size[V_SIDE]

    def sizes(self) -> Tuple[int, int, int, int, int, int]:
        return (self.size[U_SIDE], self.size[V_SIDE], self.pivot_size[U_SIDE], self.pivot_size[V_SIDE],
                self.hold_size[U_SIDE], self.hold_size[V_SIDE])

    def candidates(self, side: int) -> List[int]:
        return self.order[side][:self.size[side]]

    def candidate_labels(self, side: int) -> List[int]:
        labels = self.labels[side]
        return [labels[x] for x in self.order[side][:self.size[side]]]

    def neighbors_in_candidates(self, side: int, x: int) -> int:
        """|N(x) ∩ opposite candidate set|."""
        return self.size[1 - side] - self.nonnbr[side][x]

    def non_neighbors(self, side: int, x: int) -> List[int]:
        """Candidates on the opposite side that are not adjacent to x, in slot order."""
        adjacent = self.adj_sets[side][x]
        return [y for y in self.candidates(1 - side) if y not in adjacent]

    # --- mutations, all journaled ---

    def mark(self) -> int:
        return len(self.trail)

    def remove_candidate(self, side: int, x: int):
        order, pos = self.order[side], self.pos[side]
        slot = pos[x]
        last = self.size[side] - 1
        swapped = order[last]
        order[slot], order[last] = swapped, x
        pos[swapped], pos[x] = slot, last
        self.size[side] = last
        if self.incremental:
            self._update_opposite(side, x, -1)
        self.trail.append((_REMOVED, side, x, slot))

    def move_to_pivot(self, side: int, x: int):
        self.remove_candidate(side, x)
        self.pivot_size[side] += 1
        if self.pivots is not None:
            self.pivots[side].append(self.labels[side][x])
        self.trail.append((_PIVOT, side, x, None))

    def hold(self, side: int, x: int):
        self.hold_size[side] += 1
        if self.holds is not None:
            self.holds[side].append(self.labels[side][x])
        self.trail.append((_HOLD, side, x, None))

    def restrict_to_neighbors(self, side: int, x: int):
        """Intersect the opposite candidate set with N(x)."""
        other = 1 - side
        for y in self.non_neighbors(side, x):
            self.remove_candidate(other, y)

    def undo(self, mark: int):
        trail = self.trail
        while len(trail) > mark:
            kind, side, x, slot = trail.pop()
            if kind == _REMOVED:
                self._restore_candidate(side, x, slot)
            elif kind == _PIVOT:
                self.pivot_size[side] -= 1
                if self.pivots is not None:
                    self.pivots[side].pop()
            else:
                self.hold_size[side] -= 1
                if self.holds is not None:
                    self.holds[side].pop()
        if not self.incremental:
            self.recompute()

    def _restore_candidate(self, side: int, x: int, slot: int):
        order, pos = self.order[side], self.pos[side]
        last = self.size[side]
        swapped = order[slot]
        order[slot], order[last] = x, swapped
        pos[x], pos[swapped] = slot, last
        self.size[side] = last + 1
        if self.incremental:
            self._update_opposite(side, x, +1)

    def _update_opposite(self, side: int, x: int, delta: int):
        # x leaving (delta -1) or re-entering (+1) its candidate set changes the non-neighbor count of every
        # opposite candidate that is not adjacent to x; x's own count is left frozen while it is out.
        other = 1 - side
        size_other = self.size[other]
        nonnbr_other = self.nonnbr[other]
        pos_other = self.pos[other]
        for y in self.order[other][:size_other]:
            nonnbr_other[y] += delta
        for y in self.adj[side][x]:
            if pos_other[y] < size_other:
                nonnbr_other[y] -= delta
        self.edge_count += delta * (size_other - self.nonnbr[side][x])

    # --- from-scratch recomputation ---

    def _fresh_counts(self):
        fresh = {}
        for side in (U_SIDE, V_SIDE):
            other = 1 - side
            size_other = self.size[other]
            pos_other = self.pos[other]
            for x in self.candidates(side):
                fresh[side, x] = size_other - sum(1 for y in self.adj[side][x] if pos_other[y] < size_other)
        edge_count = sum(self.size[V_SIDE] - fresh[U_SIDE, u] for u in self.candidates(U_SIDE))
        return fresh, edge_count

    def recompute(self):
        fresh, self.edge_count = self._fresh_counts()
        for (side, x), count in fresh.items():
            self.nonnbr[side][x] = count

    def verify(self):
        fresh, edge_count = self._fresh_counts()
        for (side, x), count in fresh.items():
            if self.nonnbr[side][x] != count:
                raise StateIntegrityError(f'non-neighbor count of node {x} (side {side}) is '
                                          f'{self.nonnbr[side][x]}, expected {count}')
        if edge_count != self.edge_count:
            raise StateIntegrityError(f'edge count is {self.edge_count}, expected {edge_count}')

    def snapshot(self) -> tuple:
        return (tuple(self.order[U_SIDE]), tuple(self.order[V_SIDE]), tuple(self.size),
                tuple(self.nonnbr[U_SIDE]), tuple(self.nonnbr[V_SIDE]), self.edge_count,
                tuple(self.pivot_size), tuple(self.hold_size),
                None if self.pivots is None else (tuple(self.pivots[U_SIDE]), tuple(self.pivots[V_SIDE])),
                None if self.holds is None else (tuple(self.holds[U_SIDE]), tuple(self.holds[V_SIDE])),
                len(self.trail))
