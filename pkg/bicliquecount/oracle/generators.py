"""Seeded random bipartite graphs and graph sampling."""
from typing import Optional

import numpy as np

from bicliquecount.engine.options import BicliqueArgumentError
from bicliquecount.graph.bipartite import BipartiteGraph


def _rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def _check_fraction(name: str, value: float):
    if not 0.0 <= value <= 1.0:
        raise BicliqueArgumentError(f'{name} must be within [0, 1], got {value}')


def random_bipartite(u_count: int, v_count: int, edge_probability: float, seed: Optional[int] = None) -> BipartiteGraph:
    """Every one of the u_count x v_count possible edges is present independently with edge_probability."""
    _check_fraction('edge_probability', edge_probability)
    present = _rng(seed).random((u_count, v_count)) < edge_probability
    us, vs = np.nonzero(present)
    return BipartiteGraph.from_edges(u_count, v_count, zip(us.tolist(), vs.tolist()))


def random_bipartite_with_degrees(edge_count: int, avg_degree_u: float, avg_degree_v: float,
                                  seed: Optional[int] = None) -> BipartiteGraph:
    """
    A graph with exactly edge_count edges drawn uniformly, sized so the average degrees come out as requested.
    """
    if edge_count < 0 or avg_degree_u <= 0 or avg_degree_v <= 0:
        raise BicliqueArgumentError('edge_count must be non-negative and the average degrees positive')
    u_count = max(1, round(edge_count / avg_degree_u))
    v_count = max(1, round(edge_count / avg_degree_v))
    if edge_count > u_count * v_count:
        raise BicliqueArgumentError(f'{edge_count} edges do not fit in a {u_count}x{v_count} bipartite graph')
    cells = _rng(seed).choice(u_count * v_count, size=edge_count, replace=False)
    return BipartiteGraph.from_edges(u_count, v_count, ((int(c) // v_count, int(c) % v_count) for c in cells))


def sample_edges(g: BipartiteGraph, fraction: float, seed: Optional[int] = None) -> BipartiteGraph:
    """Keep round(fraction * |E|) edges chosen uniformly; both sides keep all their nodes."""
    _check_fraction('fraction', fraction)
    edges = list(g.edges())
    keep = _rng(seed).choice(len(edges), size=round(fraction * len(edges)), replace=False)
    return BipartiteGraph.from_edges(g.u_count, g.v_count, (edges[i] for i in sorted(keep.tolist())))


def sample_nodes(g: BipartiteGraph, fraction: float, seed: Optional[int] = None) -> BipartiteGraph:
    """Keep round(fraction * size) nodes of each side chosen uniformly, with the edges they induce."""
    _check_fraction('fraction', fraction)
    rng = _rng(seed)
    u_keep = sorted(rng.choice(g.u_count, size=round(fraction * g.u_count), replace=False).tolist())
    v_keep = sorted(rng.choice(g.v_count, size=round(fraction * g.v_count), replace=False).tolist())
    v_new = {v: i for i, v in enumerate(v_keep)}
    edges = [(i, v_new[v]) for i, u in enumerate(u_keep) for v in g.u_adj[u] if v in v_new]
    return BipartiteGraph.from_edges(len(u_keep), len(v_keep), edges)
