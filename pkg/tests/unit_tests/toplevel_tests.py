import unittest
from math import comb

from bicliquecount.engine.counters import SingleCounter
from bicliquecount.engine.metrics import SearchMetrics
from bicliquecount.engine.options import BicliqueArgumentError, RANK_BY_ID, SearchOptions
from bicliquecount.engine.parallel import root_chunks
from bicliquecount.engine.toplevel import (SplitStrategy, default_estimator_parameters, edge_split_state,
                                           node_split_state, prepare_graph, run_search, split_decisions,
                                           top_level_count)
from bicliquecount.estimator.index import build_cost_index
from bicliquecount.graph.bipartite import BipartiteGraph
from bicliquecount.graph.cores import NodeRank, core_order
from bicliquecount.oracle.brute_force import brute_force_count
from bicliquecount.oracle.fixtures import FIGURE1
from bicliquecount.oracle.generators import random_bipartite


class SubproblemTests(unittest.TestCase):

    def test_node_split_state(self):
        g = FIGURE1.graph()
        rank = NodeRank.by_id(g)
        state = node_split_state(g, rank, 0, track_members=True)
        # N(u0) = v0..v3; every higher U node shares at least one of them
        self.assertEqual(state.candidate_labels(1), [0, 1, 2, 3])
        self.assertEqual(state.candidate_labels(0), [1, 2, 3, 4])
        self.assertEqual(state.holds, ([0], []))
        state.verify()

    def test_edge_split_state(self):
        g = FIGURE1.graph()
        rank = NodeRank.by_id(g)
        state = edge_split_state(g, rank, 0, 1)
        self.assertEqual(state.candidate_labels(0), [1, 2, 3, 4])
        self.assertEqual(state.candidate_labels(1), [2, 3])
        self.assertEqual((state.h0, state.h1), (1, 1))
        state.verify()

    def test_lowest_ranked_u_has_no_lower_candidates(self):
        g = FIGURE1.graph()
        rank = NodeRank.by_id(g)
        self.assertEqual(node_split_state(g, rank, 4).c0, 0)


class TopLevelCountTests(unittest.TestCase):

    def test_figure1_every_strategy(self):
        for strategy in SplitStrategy:
            total, metrics = top_level_count(FIGURE1.graph(), 3, 3, strategy)
            self.assertEqual(total, 10, strategy)
            self.assertEqual(metrics.total, 10)

    def test_complete(self):
        self.assertEqual(top_level_count(BipartiteGraph.complete(4, 4), 2, 2)[0], 36)
        for m in range(1, 9):
            for n in range(1, 9):
                g = BipartiteGraph.complete(m, n)
                for p in range(1, m + 1):
                    for q in range(1, n + 1):
                        self.assertEqual(top_level_count(g, p, q)[0], comb(m, p) * comb(n, q), (m, n, p, q))

    def test_larger_than_graph(self):
        self.assertEqual(top_level_count(FIGURE1.graph(), 6, 2)[0], 0)
        self.assertEqual(top_level_count(BipartiteGraph.empty(), 1, 1)[0], 0)

    def test_invalid_parameters(self):
        with self.assertRaises(BicliqueArgumentError):
            top_level_count(FIGURE1.graph(), 0, 3)
        with self.assertRaises(BicliqueArgumentError):
            top_level_count(FIGURE1.graph(), 3, -1)

    def test_strategies_agree_with_oracle(self):
        for seed in range(20):
            g = random_bipartite(10, 10, 0.2 + 0.03 * seed, seed=seed)
            for p in range(1, 5):
                for q in range(1, 5):
                    expected = brute_force_count(g, p, q)
                    for strategy in SplitStrategy:
                        self.assertEqual(top_level_count(g, p, q, strategy)[0], expected, (seed, p, q, strategy))

    def test_optimization_toggles_keep_the_count(self):
        variants = [
            SearchOptions(core_reduction=False),
            SearchOptions(rank_order=RANK_BY_ID),
            SearchOptions(early_termination=False),
            SearchOptions(incremental_nonnbr=False),
            SearchOptions(core_reduction=False, rank_order=RANK_BY_ID, early_termination=False,
                          incremental_nonnbr=False, debug_checks=True),
        ]
        for seed in range(6):
            g = random_bipartite(9, 11, 0.5, seed=100 + seed)
            for p, q in ((2, 2), (3, 2), (2, 4)):
                expected = brute_force_count(g, p, q)
                for options in variants:
                    for strategy in (SplitStrategy.NODE_SPLIT, SplitStrategy.EDGE_SPLIT):
                        self.assertEqual(top_level_count(g, p, q, strategy, options=options)[0], expected,
                                         (seed, p, q, options, strategy))

    def test_supplied_rank(self):
        g = random_bipartite(8, 8, 0.5, seed=5)
        expected = brute_force_count(g, 3, 2)
        reversed_rank = NodeRank(u_rank=tuple(range(16, 8, -1)), v_rank=tuple(range(7, -1, -1)))
        self.assertEqual(top_level_count(g, 3, 2, rank=reversed_rank)[0], expected)

    def test_metrics(self):
        g = random_bipartite(12, 12, 0.6, seed=1)
        total, metrics = top_level_count(g, 3, 3)
        self.assertEqual(metrics.counted_combinatorially + metrics.counted_at_hold_limit, total)
        self.assertGreater(metrics.npc_calls, 0)
        self.assertEqual(metrics.node_split_roots + metrics.edge_split_roots,
                         prepare_graph(g, 3, 3).graph.u_count)
        self.assertTrue(0 <= metrics.combinatorial_fraction <= 1)

    def test_metrics_merge_and_serialization(self):
        first = SearchMetrics(npc_calls=2, counted_combinatorially=3)
        first.merge(SearchMetrics(npc_calls=1, counted_at_hold_limit=1))
        self.assertEqual((first.npc_calls, first.total), (3, 4))
        as_dict = first.as_dict()
        self.assertEqual(as_dict['counted_combinatorially'], '3')
        self.assertEqual(as_dict['combinatorial_fraction']['numerator'], '3')
        self.assertEqual(as_dict['combinatorial_fraction']['denominator'], '4')
        self.assertEqual(as_dict['combinatorial_fraction']['decimal'], '0.750000')
        self.assertEqual(SearchMetrics().combinatorial_fraction, 0)

    def test_index_must_cover_the_graph(self):
        index = build_cost_index(BipartiteGraph.complete(3, 3), None, 2, 2)
        with self.assertRaises(BicliqueArgumentError):
            top_level_count(FIGURE1.graph(), 3, 3, SplitStrategy.ESTIMATOR_INDEX, index=index)

    def test_supplied_index_is_looked_up_by_input_id(self):
        g = FIGURE1.graph()
        index = build_cost_index(g, None, 3, 3)
        prepared = prepare_graph(g, 3, 3)
        decisions = split_decisions(g, prepared, SplitStrategy.ESTIMATOR_INDEX, 3, 3, index)
        self.assertEqual(decisions, [index.edge_split[u] for u in prepared.u_ids])
        self.assertEqual(top_level_count(g, 3, 3, SplitStrategy.ESTIMATOR_INDEX, index=index)[0], 10)

    def test_online_decisions_match_a_prebuilt_index(self):
        graphs = [random_bipartite(14, 14, 0.5, seed=17)]
        for seed in range(10):
            core = random_bipartite(12, 12, 0.5, seed=seed)
            m, n = core.u_count, core.v_count
            # two pendant U nodes and one pendant V node fall out of every (3,3)-core
            graphs.append(BipartiteGraph.from_edges(m + 2, n + 1, list(core.edges()) + [(m, 0), (m + 1, 1), (0, n)]))

        for i, g in enumerate(graphs):
            prepared = prepare_graph(g, 3, 3)
            if i > 0:
                self.assertLess(prepared.graph.u_count, g.u_count)
            index = build_cost_index(g, None, 3, 3)
            online = split_decisions(g, prepared, SplitStrategy.ESTIMATOR, 3, 3)
            self.assertEqual(online, [index.edge_split[u] for u in prepared.u_ids], i)
            self.assertEqual(online, split_decisions(g, prepared, SplitStrategy.ESTIMATOR_INDEX, 3, 3, index), i)
            self.assertEqual(online, split_decisions(g, prepared, SplitStrategy.ESTIMATOR_INDEX, 3, 3), i)

    def test_estimator_decisions_ignore_the_search_rank(self):
        g = random_bipartite(10, 9, 0.5, seed=4)
        x, y = default_estimator_parameters(2, 3)
        by_core = prepare_graph(g, 2, 3)
        by_id = prepare_graph(g, 2, 3, options=SearchOptions(rank_order=RANK_BY_ID))
        self.assertEqual(split_decisions(g, by_core, SplitStrategy.ESTIMATOR, x, y),
                         split_decisions(g, by_id, SplitStrategy.ESTIMATOR, x, y))

    def test_any_decision_vector_keeps_the_count(self):
        g = random_bipartite(10, 10, 0.5, seed=21)
        prepared = prepare_graph(g, 2, 2, options=SearchOptions(core_reduction=False))
        expected = brute_force_count(g, 2, 2)
        for pattern in range(8):
            decisions = [bool((u * 7 + pattern) & 4) for u in range(prepared.graph.u_count)]
            total, _ = run_search(prepared, SingleCounter(2, 2), decisions)
            self.assertEqual(total, expected)

    def test_label_invariance(self):
        g = random_bipartite(9, 9, 0.45, seed=8)
        u_perm = [3, 7, 0, 8, 1, 5, 2, 6, 4]
        v_perm = [8, 6, 4, 2, 0, 1, 3, 5, 7]
        relabeled = g.relabel(u_perm, v_perm)
        for p, q in ((2, 2), (3, 2), (2, 3)):
            self.assertEqual(top_level_count(relabeled, p, q)[0], top_level_count(g, p, q)[0])

    def test_rank_by_core_is_used(self):
        g = random_bipartite(6, 6, 0.5, seed=2)
        prepared = prepare_graph(g, 1, 1, options=SearchOptions(core_reduction=False))
        self.assertEqual(prepared.rank, core_order(g))


class ParallelTests(unittest.TestCase):

    def test_root_chunks_cover_all_roots_in_order(self):
        chunks = root_chunks(23, 3)
        self.assertEqual([u for chunk in chunks for u in chunk], list(range(23)))
        self.assertEqual(root_chunks(0, 4), [])

    def test_workers_give_identical_results(self):
        g = random_bipartite(14, 12, 0.5, seed=4)
        single, single_metrics = top_level_count(g, 3, 3)
        pooled, pooled_metrics = top_level_count(g, 3, 3, options=SearchOptions(workers=3))
        self.assertEqual(pooled, single)
        self.assertEqual(pooled_metrics, single_metrics)


if __name__ == '__main__':
    unittest.main()
