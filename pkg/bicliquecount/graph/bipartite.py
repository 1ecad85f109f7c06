from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

U_SIDE = 0
V_SIDE = 1

Edge = Tuple[int, int]


class GraphInvariantError(Exception):
    pass


@dataclass(frozen=True)
class BipartiteGraph:
    """
    Immutable bipartite graph G = (U, V, E) with dense 0-based ids on each side.

    u_adj[u] holds the strictly increasing V neighbors of u, and v_adj[v] the strictly increasing U neighbors of v.
    Instances are never mutated after construction, so they can be shared by concurrent readers.
    """
    u_count: int
    v_count: int
    u_adj: Tuple[Tuple[int, ...], ...]
    v_adj: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, u_count: int, v_count: int, edges: Iterable[Edge]) -> 'BipartiteGraph':
        u_sets = [set() for _ in range(u_count)]
        for u, v in edges:
            if not (0 <= u < u_count and 0 <= v < v_count):
                raise GraphInvariantError(f'Edge ({u}, {v}) is outside a {u_count}x{v_count} graph')
            u_sets[u].add(v)

        v_lists = [[] for _ in range(v_count)]
        for u, neighbors in enumerate(u_sets):
            for v in neighbors:
                v_lists[v].append(u)

        return cls(u_count=u_count,
                   v_count=v_count,
                   u_adj=tuple(tuple(sorted(n)) for n in u_sets),
                   v_adj=tuple(tuple(n) for n in v_lists))  # u ascends by construction

    @classmethod
    def empty(cls) -> 'BipartiteGraph':
        return cls(u_count=0, v_count=0, u_adj=(), v_adj=())

    @classmethod
    def complete(cls, m: int, n: int) -> 'BipartiteGraph':
        return cls.from_edges(m, n, ((u, v) for u in range(m) for v in range(n)))

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.u_adj)

    def edges(self) -> Iterable[Edge]:
        for u, neighbors in enumerate(self.u_adj):
            for v in neighbors:
                yield u, v

    def adj(self, side: int) -> Tuple[Tuple[int, ...], ...]:
        return self.u_adj if side == U_SIDE else self.v_adj

    def side_count(self, side: int) -> int:
        return self.u_count if side == U_SIDE else self.v_count

    def has_edge(self, u: int, v: int) -> bool:
        neighbors = self.u_adj[u]
        i = bisect_left(neighbors, v)
        return i < len(neighbors) and neighbors[i] == v

    def transpose(self) -> 'BipartiteGraph':
        """The same graph with the roles of U and V swapped."""
        return BipartiteGraph(u_count=self.v_count, v_count=self.u_count, u_adj=self.v_adj, v_adj=self.u_adj)

    def relabel(self, u_perm, v_perm) -> 'BipartiteGraph':
        """Rename node u to u_perm[u] and v to v_perm[v]."""
        return BipartiteGraph.from_edges(self.u_count, self.v_count,
                                         ((u_perm[u], v_perm[v]) for u, v in self.edges()))

    def check_invariants(self):
        if len(self.u_adj) != self.u_count or len(self.v_adj) != self.v_count:
            raise GraphInvariantError('Adjacency length does not match side size')
        for side in (U_SIDE, V_SIDE):
            limit = self.side_count(1 - side)
            for node, neighbors in enumerate(self.adj(side)):
                if any(b <= a for a, b in zip(neighbors, neighbors[1:])):
                    raise GraphInvariantError(f'Neighbors of node {node} (side {side}) are not strictly increasing')
                if neighbors and not (0 <= neighbors[0] and neighbors[-1] < limit):
                    raise GraphInvariantError(f'Neighbor id out of range for node {node} (side {side})')
        mirrored = sorted((u, v) for v, neighbors in enumerate(self.v_adj) for u in neighbors)
        if mirrored != list(self.edges()):
            raise GraphInvariantError('u_adj and v_adj are not symmetric')


@dataclass(frozen=True)
class GraphStats:
    u_count: int
    v_count: int
    edge_count: int
    max_degree_u: int
    max_degree_v: int
    avg_degree_u: Fraction
    avg_degree_v: Fraction


def graph_stats(g: BipartiteGraph) -> GraphStats:
    edge_count = g.edge_count
    return GraphStats(u_count=g.u_count,
                      v_count=g.v_count,
                      edge_count=edge_count,
                      max_degree_u=max((len(n) for n in g.u_adj), default=0),
                      max_degree_v=max((len(n) for n in g.v_adj), default=0),
                      avg_degree_u=Fraction(edge_count, g.u_count) if g.u_count else Fraction(0),
                      avg_degree_v=Fraction(edge_count, g.v_count) if g.v_count else Fraction(0))
