from typing import Dict, NamedTuple, Tuple

from bicliquecount.graph.bipartite import BipartiteGraph


class FixtureGraph(NamedTuple):
    name: str
    u_count: int
    v_count: int
    edges: Tuple[Tuple[int, int], ...]
    provenance: str

    def graph(self) -> BipartiteGraph:
        return BipartiteGraph.from_edges(self.u_count, self.v_count, self.edges)


def _adjacency_edges(adjacency: Dict[int, Tuple[int, ...]]) -> Tuple[Tuple[int, int], ...]:
    return tuple((u, v) for u, neighbors in sorted(adjacency.items()) for v in neighbors)


FIGURE1 = FixtureGraph(
    name='figure1',
    u_count=5,
    v_count=5,
    edges=_adjacency_edges({0: (0, 1, 2, 3),
                            1: (1, 2, 4),
                            2: (1, 2, 3, 4),
                            3: (1, 2, 3, 4),
                            4: (1, 2, 3, 4)}),
    provenance='Synthetic 5x5 example with ten (3,3)-bicliques in four families: three U nodes out of '
               '{u0,u2,u3,u4} with {v1,v2,v3}, three out of {u1,u2,u3,u4} with {v1,v2,v4}, and {u2,u3,u4} with '
               '{v1,v3,v4} or {v2,v3,v4}. Rebuilt from the counts stated for the example; whether u1 is adjacent '
               'to v0 is not determined by them and the edge is left out, which changes none of the counts.')

FIXTURES = {f.name: f for f in (FIGURE1,)}


def complete_fixture(m: int, n: int) -> FixtureGraph:
    return FixtureGraph(name=f'k{m}{n}', u_count=m, v_count=n,
                        edges=tuple((u, v) for u in range(m) for v in range(n)),
                        provenance=f'Complete bipartite graph K_{m},{n}')


def star_fixture(leaves: int) -> FixtureGraph:
    return FixtureGraph(name=f'star{leaves}', u_count=1, v_count=leaves,
                        edges=tuple((0, v) for v in range(leaves)),
                        provenance=f'One U node adjacent to {leaves} V nodes')
