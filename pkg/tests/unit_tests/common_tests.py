import json
import os
import shutil
import tempfile
import time
import unittest
from fractions import Fraction

from bicliquecount.common import Stopwatch, process_memory_mb, read_json, silent_mkdir, write_json_atomically
from bicliquecount.graph.bipartite import graph_stats
from bicliquecount.oracle.fixtures import FIGURE1
from bicliquecount.reporters.json_reporter import (RunReport, convert_to_serializable, load_report, stats_as_dict,
                                                   write_report_file)


class JsonFileTests(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def test_atomic_write_creates_directories(self):
        path = os.path.join(self.tmp_dir, 'a', 'b', 'data.json')
        write_json_atomically({'b': 1, 'a': [1, 2]}, path)
        self.assertEqual(read_json(path), {'a': [1, 2], 'b': 1})
        self.assertEqual(os.listdir(os.path.dirname(path)), ['data.json'])

    def test_overwrite(self):
        path = os.path.join(self.tmp_dir, 'data.json')
        write_json_atomically({'run': 1}, path)
        write_json_atomically({'run': 2}, path)
        self.assertEqual(read_json(path), {'run': 2})

    def test_silent_mkdir(self):
        target = os.path.join(self.tmp_dir, 'x')
        silent_mkdir(target)
        silent_mkdir(target)
        silent_mkdir('')
        self.assertTrue(os.path.isdir(target))


class StopwatchTests(unittest.TestCase):

    def test_accumulates(self):
        watch = Stopwatch()
        with watch.running():
            time.sleep(0.01)
        first = watch.milliseconds
        self.assertGreaterEqual(first, 10)
        with watch.running():
            pass
        self.assertGreaterEqual(watch.milliseconds, first)

    def test_counts_time_of_a_failing_block(self):
        watch = Stopwatch()
        with self.assertRaises(ValueError):
            with watch.running():
                raise ValueError()
        self.assertGreater(watch.elapsed, 0)

    def test_memory(self):
        self.assertGreater(process_memory_mb(), 0)


class RunReportTests(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    @staticmethod
    def _report():
        return RunReport(command=['bicliquecount', 'count'],
                         subcommand='count',
                         graph=stats_as_dict(graph_stats(FIGURE1.graph())),
                         parameters={'p': 3, 'q': 3},
                         strategy='estimator',
                         counts={'total': str(2 ** 80)})

    def test_fractions_are_exact(self):
        as_dict = self._report().as_dict()
        self.assertEqual(as_dict['graph']['avg_degree_u'],
                         {'numerator': '19', 'denominator': '5', 'decimal': '3.800000'})
        self.assertEqual(convert_to_serializable({1: (Fraction(1, 3),)}),
                         {'1': [{'numerator': '1', 'denominator': '3', 'decimal': '0.333333'}]})

    def test_big_counts_survive_json(self):
        report = self._report().finish(12.34567)
        self.assertEqual(report.wall_clock_ms, 12.346)
        self.assertGreater(report.memory_mb, 0)
        self.assertEqual(int(json.loads(report.to_json())['counts']['total']), 2 ** 80)

    def test_file_round_trip(self):
        path = os.path.join(self.tmp_dir, 'report.json')
        report = self._report().finish(1)
        write_report_file(report, path)
        loaded = load_report(path)
        self.assertEqual(loaded.counts, report.counts)
        self.assertEqual(loaded.parameters, {'p': 3, 'q': 3})
        self.assertEqual(loaded.started_at, report.started_at)
        self.assertTrue(loaded.started_at.endswith('+00:00'))


if __name__ == '__main__':
    unittest.main()
