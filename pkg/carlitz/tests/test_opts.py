# Copyright (c) 2026 The Carlitz Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from oslo_config import cfg

from carlitz.cmd import cli
from carlitz import opts
from carlitz import tests


class OptsTestCase(tests.TestCase):

    def test_list_opts(self):
        groups = dict((group, list(options))
                      for group, options in opts.list_opts())
        self.assertEqual(['DEFAULT'], list(groups))
        names = [opt.dest for opt in groups['DEFAULT']]
        self.assertEqual(['q', 'modulus', 'json', 'size_limit'], names)

    def test_defaults(self):
        self.assertEqual(2, cfg.CONF.q)
        self.assertIsNone(cfg.CONF.modulus)
        self.assertFalse(cfg.CONF.json)
        self.assertEqual(4096, cfg.CONF.size_limit)
        self.assertTrue(cfg.CONF.use_stderr)

    def test_defaults_with_command_registered(self):
        self.assertIn('command', list(cli.CONF))
        self.assertEqual(2, cfg.CONF.q)
        self.override('q', 5)
        self.assertEqual(5, cfg.CONF.q)
