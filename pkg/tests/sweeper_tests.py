# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The MecGame Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging
import os
import shutil
import tempfile
import unittest

import yaml

from mecgame.application.sweep import RESULTS_FILENAME, SUMMARY_FILENAME, load_records
from mecgame.configuration.config_registry import ConfigRegistry
from mecgame.utils.app_state import AppState
from mecgame.workers.sweeper import comma_separated, main


class TestSweeper(unittest.TestCase):

    def setUp(self):
        ConfigRegistry()._clear_registry()
        self.tmp_dir = tempfile.mkdtemp()
        self.output_dir = os.path.join(self.tmp_dir, 'results')

    def tearDown(self):
        # Detach the file handlers pointing to the removed directory.
        for logger in [logging.getLogger(name) for name in list(logging.Logger.manager.loggerDict)]:
            for handler in list(logger.handlers):
                if isinstance(handler, logging.FileHandler):
                    logger.removeHandler(handler)
                    handler.close()
        AppState().reset()
        ConfigRegistry()._clear_registry()
        shutil.rmtree(self.tmp_dir)

    def write_config(self, content):
        path = os.path.join(self.tmp_dir, 'sweep.yml')
        with open(path, 'w') as f:
            f.write(content)
        return path

    def test_comma_separated(self):
        """ Tests parsing of comma separated lists. """
        self.assertEqual(comma_separated(int)("4, 9,16,"), [4, 9, 16])
        self.assertEqual(comma_separated(float)("3,4.5"), [3.0, 4.5])

    def test_run(self):
        """ Tests a sweep run from the command line with overrides. """
        path = self.write_config("sweep:\n  bs_counts: [4, 9]\n  alphas: [3.0]\n  record_wall_time: False\n")
        main(['--config', path, '--outdir', self.output_dir, '--bs-counts', '1', '--alphas', '4', '--seed', '3'])

        for filename in (RESULTS_FILENAME, SUMMARY_FILENAME, 'sweep_configuration.yaml', 'sweeper.log'):
            self.assertTrue(os.path.isfile(os.path.join(self.output_dir, filename)), msg=filename)

        records = load_records(os.path.join(self.output_dir, RESULTS_FILENAME))
        self.assertEqual([(r.k_count, r.alpha, r.solution) for r in records],
                         [(1, 4.0, 'proposed'), (1, 4.0, 'ref1'), (1, 4.0, 'ref2')])
        self.assertTrue(all(r.wall_time == 0.0 for r in records))

        with open(os.path.join(self.output_dir, 'sweep_configuration.yaml')) as f:
            dumped = yaml.safe_load(f)
        self.assertEqual(dumped['sweep']['seed'], 3)
        self.assertEqual(dumped['sweep']['bs_counts'], [1])
        self.assertEqual(dumped['sweep']['output_dir'], self.output_dir)

    def test_invalid_configuration(self):
        """ Tests that invalid configurations exit with code -1. """
        path = self.write_config("sweep:\n  bs_counts: [0]\n")
        with self.assertRaises(SystemExit) as cm:
            main(['--config', path, '--outdir', self.output_dir])
        self.assertEqual(cm.exception.code, -1)
        self.assertFalse(os.path.exists(self.output_dir))

    def test_missing_configuration(self):
        """ Tests that a missing configuration file exits with code -1. """
        with self.assertRaises(SystemExit) as cm:
            main(['--config', os.path.join(self.tmp_dir, 'missing.yml'), '--outdir', self.output_dir])
        self.assertEqual(cm.exception.code, -1)

    def test_unwritable_output(self):
        """ Tests that an output directory that cannot be created exits with code -2. """
        blocker = os.path.join(self.tmp_dir, 'blocker')
        with open(blocker, 'w') as f:
            f.write('')
        with self.assertRaises(SystemExit) as cm:
            main(['--outdir', os.path.join(blocker, 'results'), '--bs-counts', '1', '--alphas', '4'])
        self.assertEqual(cm.exception.code, -2)


if __name__ == "__main__":
    unittest.main()
