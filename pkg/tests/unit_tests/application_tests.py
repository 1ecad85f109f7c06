import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from bicliquecount import __version__
from bicliquecount.application import (BicliqueBaseApp, EXIT_ARGUMENTS, EXIT_OK, EXIT_PARSE, EXIT_RESOURCES,
                                       exit_code_for)
from bicliquecount.engine.options import BicliqueArgumentError
from bicliquecount.engine.state import SearchDepthExceeded
from bicliquecount.estimator.index import CostIndexMismatch
from bicliquecount.graph.bipartite import BipartiteGraph
from bicliquecount.graph.loader import EmptyGraphError, graph_to_text
from bicliquecount.oracle.generators import random_bipartite
from bicliquecount.reporters.json_reporter import load_report

GRAPHS_DIR = os.path.join(os.path.dirname(__file__), "data", "graphs")
FIGURE1_FILE = os.path.join(GRAPHS_DIR, "figure1.txt")
K44_FILE = os.path.join(GRAPHS_DIR, "k44.txt")


class ExitCodeTests(unittest.TestCase):

    def test_mapping(self):
        self.assertEqual(exit_code_for(BicliqueArgumentError()), EXIT_ARGUMENTS)
        self.assertEqual(exit_code_for(CostIndexMismatch()), EXIT_ARGUMENTS)
        self.assertEqual(exit_code_for(EmptyGraphError('empty')), EXIT_PARSE)
        self.assertEqual(exit_code_for(SearchDepthExceeded()), EXIT_RESOURCES)
        self.assertEqual(exit_code_for(MemoryError()), EXIT_RESOURCES)
        self.assertIsNone(exit_code_for(KeyError()))


class ApplicationTests(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def run_app(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = BicliqueBaseApp().run(list(argv))
        return code, out.getvalue(), err.getvalue()

    def tmp_path(self, name):
        return os.path.join(self.tmp_dir, name)

    def test_count_plain(self):
        code, out, _ = self.run_app('count', '--input', FIGURE1_FILE, '-p', '3', '--q', '3', '--plain')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, '10\n')

    def test_count_json(self):
        code, out, _ = self.run_app('count', '-i', K44_FILE, '-p', '2', '--q', '2')
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report['counts'], {'total': '36'})
        self.assertEqual(report['subcommand'], 'count')
        self.assertEqual(report['strategy'], 'estimator')
        self.assertEqual(report['parameters']['p'], 2)
        self.assertEqual(report['graph']['edge_count'], 16)
        self.assertIsNone(report['index_build_ms'])
        self.assertEqual(report['version'], __version__)
        self.assertEqual(report['command'][:2], ['bicliquecount', 'count'])

    def test_every_strategy_and_threads(self):
        for strategy in ('node-split', 'edge-split', 'estimator', 'estimator-index'):
            code, out, _ = self.run_app('count', '-i', FIGURE1_FILE, '-p', '3', '--q', '3', '--strategy', strategy,
                                        '--threads', '2', '--plain')
            self.assertEqual((code, out), (EXIT_OK, '10\n'), strategy)

    def test_report_file(self):
        report_file = self.tmp_path('run.json')
        code, _, _ = self.run_app('count', '-i', FIGURE1_FILE, '-p', '3', '--q', '3', '--plain',
                                  '--report_file', report_file)
        self.assertEqual(code, EXIT_OK)
        report = load_report(report_file)
        self.assertEqual(report.counts['total'], '10')
        self.assertEqual(report.metrics['counted_combinatorially'], '10')

    def test_bad_arguments(self):
        self.assertEqual(self.run_app('count', '-i', FIGURE1_FILE, '-p', '0', '--q', '3')[0], EXIT_ARGUMENTS)
        self.assertEqual(self.run_app('count', '-i', FIGURE1_FILE, '-p', '3')[0], EXIT_ARGUMENTS)
        self.assertEqual(self.run_app('count', '-i', GRAPHS_DIR, '-p', '3', '--q', '3')[0], EXIT_ARGUMENTS)
        self.assertEqual(self.run_app('range', '-i', FIGURE1_FILE, '--p_min', '3', '--p_max', '2',
                                      '--q_min', '1', '--q_max', '1')[0], EXIT_ARGUMENTS)
        self.assertEqual(self.run_app()[0], EXIT_ARGUMENTS)

    def test_unreadable_input(self):
        code, out, err = self.run_app('count', '-i', os.path.join(GRAPHS_DIR, 'malformed.txt'), '-p', '1', '--q', '1')
        self.assertEqual(code, EXIT_PARSE)
        self.assertEqual(out, '')
        self.assertIn('line 2', err)
        self.assertEqual(self.run_app('count', '-i', self.tmp_path('missing.txt'), '-p', '1', '--q', '1')[0],
                         EXIT_PARSE)

    def test_empty_input(self):
        empty = os.path.join(GRAPHS_DIR, 'empty.txt')
        self.assertEqual(self.run_app('count', '-i', empty, '-p', '1', '--q', '1')[0], EXIT_PARSE)
        code, out, _ = self.run_app('count', '-i', empty, '-p', '1', '--q', '1', '--allow_empty', '--plain')
        self.assertEqual((code, out), (EXIT_OK, '0\n'))

    def test_depth_cap(self):
        graph_file = self.tmp_path('dense.txt')
        with open(graph_file, 'w') as fp:
            fp.write(graph_to_text(random_bipartite(12, 12, 0.5, seed=3)))
        code, _, _ = self.run_app('count', '-i', graph_file, '-p', '2', '--q', '2', '--strategy', 'node-split',
                                  '--no_early_termination', '--max_depth', '1')
        self.assertEqual(code, EXIT_RESOURCES)

    def test_local(self):
        code, out, _ = self.run_app('local', '-i', FIGURE1_FILE, '-p', '3', '--q', '3', '--plain')
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[:5], ['U 0 3', 'U 1 3', 'U 2 8', 'U 3 8', 'U 4 8'])
        self.assertEqual(lines[5:10], ['V 0 0', 'V 1 9', 'V 2 9', 'V 3 6', 'V 4 6'])
        self.assertEqual(lines[10], '# sum_U=30 p*total=30 sum_V=30 q*total=30 ok')

    def test_local_top(self):
        code, out, _ = self.run_app('local', '-i', FIGURE1_FILE, '-p', '3', '--q', '3', '--top', '2')
        self.assertEqual(code, EXIT_OK)
        counts = json.loads(out)['counts']
        self.assertEqual(counts['nodes'], [{'side': 'V', 'id': 1, 'count': '9'}, {'side': 'V', 'id': 2, 'count': '9'}])
        self.assertEqual((counts['total'], counts['sum_u'], counts['sum_v']), ('10', '30', '30'))
        self.assertTrue(counts['identities_hold'])

    def test_range(self):
        code, out, _ = self.run_app('range', '-i', K44_FILE, '--p_min', '2', '--p_max', '3', '--q-min', '1',
                                    '--q-max', '2', '--plain')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ['2 1 24', '2 2 36', '3 1 16', '3 2 24'])

        code, out, _ = self.run_app('range', '-i', K44_FILE, '--p_min', '2', '--p_max', '2', '--q_min', '2',
                                    '--q_max', '4')
        counts = json.loads(out)['counts']
        self.assertEqual(counts['matrix'], [['36', '24', '6']])
        self.assertEqual(counts['q_values'], [2, 3, 4])

    def test_index_then_count(self):
        index_file = self.tmp_path('figure1.index.json')
        code, out, _ = self.run_app('index', '-i', FIGURE1_FILE, '--x', '3', '--y', '3', '-o', index_file, '--plain')
        self.assertEqual((code, out), (EXIT_OK, index_file + '\n'))
        self.assertTrue(os.path.isfile(index_file))

        code, out, _ = self.run_app('count', '-i', FIGURE1_FILE, '-p', '3', '--q', '3', '--index', index_file)
        report = json.loads(out)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report['strategy'], 'estimator-index')
        self.assertEqual(report['counts']['total'], '10')

        # an index for another graph is refused
        code, _, err = self.run_app('count', '-i', K44_FILE, '-p', '2', '--q', '2', '--index', index_file)
        self.assertEqual(code, EXIT_ARGUMENTS)
        self.assertIn('CostIndexMismatch', err)

    def test_index_with_another_strategy_is_ignored(self):
        index_file = self.tmp_path('figure1.index.json')
        self.run_app('index', '-i', FIGURE1_FILE, '--x', '3', '--y', '3', '-o', index_file)
        code, out, _ = self.run_app('count', '-i', FIGURE1_FILE, '-p', '3', '--q', '3', '--index', index_file,
                                    '--strategy', 'node-split')
        report = json.loads(out)
        self.assertEqual((code, report['strategy'], report['counts']['total']), (EXIT_OK, 'node-split', '10'))

    def test_prebuilt_index_searches_like_the_online_estimator(self):
        core = random_bipartite(12, 12, 0.5, seed=9)
        g = BipartiteGraph.from_edges(13, 13, list(core.edges()) + [(12, 0), (0, 12)])
        graph_file = self.tmp_path('padded.txt')
        with open(graph_file, 'w') as fp:
            fp.write(graph_to_text(g))
        index_file = self.tmp_path('padded.index.json')
        self.assertEqual(self.run_app('index', '-i', graph_file, '--x', '3', '--y', '3', '-o', index_file)[0],
                         EXIT_OK)

        _, online, _ = self.run_app('count', '-i', graph_file, '-p', '3', '--q', '3', '--strategy', 'estimator')
        _, indexed, _ = self.run_app('count', '-i', graph_file, '-p', '3', '--q', '3', '--index', index_file)
        online, indexed = json.loads(online), json.loads(indexed)
        self.assertEqual(indexed['strategy'], 'estimator-index')
        self.assertEqual(online['counts'], indexed['counts'])
        self.assertEqual(online['metrics'], indexed['metrics'])

    def test_index_built_on_the_fly(self):
        code, out, _ = self.run_app('count', '-i', FIGURE1_FILE, '-p', '3', '--q', '3', '--strategy',
                                    'estimator-index')
        self.assertEqual(code, EXIT_OK)
        self.assertIsNotNone(json.loads(out)['index_build_ms'])

    def test_stats(self):
        code, out, _ = self.run_app('stats', '-i', FIGURE1_FILE, '--plain')
        self.assertEqual((code, out), (EXIT_OK, '5 5 19\n'))
        code, out, _ = self.run_app('stats', '-i', FIGURE1_FILE)
        self.assertEqual(json.loads(out)['graph']['max_degree_v'], 5)

    def test_reduce(self):
        code, out, _ = self.run_app('reduce', '-i', FIGURE1_FILE, '-p', '3', '--q', '3')
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(len(lines), 18)
        self.assertNotIn('0 0', lines)

        out_file = self.tmp_path('core.txt')
        code, out, _ = self.run_app('reduce', '-i', FIGURE1_FILE, '-p', '3', '--q', '3', '-o', out_file)
        self.assertEqual(json.loads(out)['counts']['reduced']['edge_count'], 18)
        with open(out_file) as fp:
            self.assertEqual(fp.read().splitlines(), lines)

    def test_version(self):
        self.assertEqual(self.run_app('version')[:2], (EXIT_OK, __version__ + '\n'))

    def test_generate(self):
        code, out, _ = self.run_app('generate', '--probability', '1', '--u_count', '2', '--v_count', '3')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ['0 0', '0 1', '0 2', '1 0', '1 1', '1 2'])

        first = self.run_app('generate', '--edges', '20', '--avg_degree_u', '4', '--avg_degree_v', '2', '--seed', '5')
        second = self.run_app('generate', '--edges', '20', '--avg_degree_u', '4', '--avg_degree_v', '2', '--seed', '5')
        self.assertEqual(first, second)
        self.assertEqual(len(first[1].splitlines()), 20)

        code, out, _ = self.run_app('generate', '--sample_nodes', '0.5', '-i', K44_FILE, '--seed', '1')
        self.assertEqual((code, len(out.splitlines())), (EXIT_OK, 4))

        self.assertEqual(self.run_app('generate', '--probability', '0.5', '--u_count', '2')[0], EXIT_ARGUMENTS)
        self.assertEqual(self.run_app('generate', '--probability', '2', '--u_count', '2', '--v_count', '2')[0],
                         EXIT_ARGUMENTS)


if __name__ == '__main__':
    unittest.main()
