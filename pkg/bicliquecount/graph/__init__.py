from bicliquecount.graph.bipartite import BipartiteGraph, GraphStats, graph_stats, U_SIDE, V_SIDE
from bicliquecount.graph.cores import NodeRank, CoreReduction, core_order, pq_core_reduce
from bicliquecount.graph.loader import GraphFormat, GraphParseError, EmptyGraphError, load_graph, read_graph
