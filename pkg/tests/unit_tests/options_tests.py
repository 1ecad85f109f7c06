import json
import os
import shutil
import tempfile
import unittest
from unittest import mock

from bicliquecount.application import BicliqueBaseApp
from bicliquecount.commands.arguments import search_options_from_args
from bicliquecount.engine.options import (DEBUG_CHECKS_ENV_NAME, MAX_DEPTH_ENV_NAME, RANK_BY_ID, SearchOptions,
                                          SearchOptionsError, load_search_options, options_from_env,
                                          validate_search_options)


class EnvironmentTests(unittest.TestCase):

    def test_defaults_without_environment(self):
        self.assertEqual(options_from_env(environ={}), SearchOptions())

    def test_overrides(self):
        options = options_from_env(environ={MAX_DEPTH_ENV_NAME: '77', DEBUG_CHECKS_ENV_NAME: 'yes'})
        self.assertEqual(options.max_depth, 77)
        self.assertTrue(options.debug_checks)
        self.assertFalse(options_from_env(environ={DEBUG_CHECKS_ENV_NAME: '0'}).debug_checks)

    def test_bad_depth(self):
        with self.assertRaises(SearchOptionsError):
            options_from_env(environ={MAX_DEPTH_ENV_NAME: 'deep'})
        with self.assertRaises(SearchOptionsError):
            options_from_env(environ={MAX_DEPTH_ENV_NAME: '0'})


class OptionsFileTests(unittest.TestCase):

    def setUp(self):
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dir)

    def _write(self, content) -> str:
        path = os.path.join(self.tmp_dir, 'options.json')
        with open(path, 'w') as fp:
            fp.write(content if isinstance(content, str) else json.dumps(content))
        return path

    def test_load(self):
        options = load_search_options(self._write({'rank_order': 'id', 'workers': 3}))
        self.assertEqual(options, SearchOptions(rank_order=RANK_BY_ID, workers=3))

    def test_file_keeps_the_base(self):
        base = SearchOptions(max_depth=9)
        self.assertEqual(load_search_options(self._write({'workers': 2}), base).max_depth, 9)

    def test_unknown_key(self):
        with self.assertRaises(SearchOptionsError):
            load_search_options(self._write({'speed': 'fast'}))

    def test_not_an_object(self):
        with self.assertRaises(SearchOptionsError):
            load_search_options(self._write([1, 2]))
        with self.assertRaises(SearchOptionsError):
            load_search_options(self._write('{'))
        with self.assertRaises(SearchOptionsError):
            load_search_options(os.path.join(self.tmp_dir, 'missing.json'))

    def test_validation(self):
        for bad in (SearchOptions(rank_order='random'), SearchOptions(max_depth=0), SearchOptions(workers=0),
                    SearchOptions(cost_ceiling=0)):
            with self.assertRaises(SearchOptionsError):
                validate_search_options(bad)

    def test_flags_beat_file_beat_environment(self):
        path = self._write({'max_depth': 40, 'rank_order': 'id'})
        parser = BicliqueBaseApp().create_arg_parser()
        args = parser.parse_args(['count', '--input', path, '-p', '2', '--q', '2', '--options_file', path,
                                  '--max_depth', '50', '--no_early_termination'])
        with mock.patch.dict(os.environ, {MAX_DEPTH_ENV_NAME: '30', DEBUG_CHECKS_ENV_NAME: '1'}):
            options = search_options_from_args(args)
        self.assertEqual(options.max_depth, 50)
        self.assertEqual(options.rank_order, RANK_BY_ID)
        self.assertTrue(options.debug_checks)
        self.assertFalse(options.early_termination)
        self.assertTrue(options.core_reduction)


if __name__ == '__main__':
    unittest.main()
