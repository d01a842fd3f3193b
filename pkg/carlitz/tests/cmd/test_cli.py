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

import io

import ddt
import fixtures
from oslo_serialization import jsonutils

from carlitz.cmd import cli
from carlitz import linalg
from carlitz import tests


@ddt.ddt
class CliTestCase(tests.TestCase):

    def setUp(self):
        super(CliTestCase, self).setUp()
        self.stdout = io.StringIO()
        self.stderr = io.StringIO()
        self.useFixture(fixtures.MonkeyPatch('sys.stdout', self.stdout))
        self.useFixture(fixtures.MonkeyPatch('sys.stderr', self.stderr))

    def run_cli(self, *argv):
        return cli.main(list(argv)), self.stdout.getvalue()

    @ddt.data((['--q', '2', 'beta', '--k', '2'], '(X^2 + X)/(t^2 + t)\n'),
              (['beta', '--k', '1'], 'X\n'),
              (['--q', '3', 'beta', '--k', '0'], '1\n'),
              (['check-int', '--poly', '(X^2 + X)/(t^2 + t)'], 'true\n'),
              (['check-int', '--poly', 'X^2/(t^2+t)'],
               'false\noffending k: 1\n'),
              (['expand', '--poly', 'X^2'],
               'A = [0, 1, 1]\nB = [0, 1, t^2 + t]\n'),
              (['--q', '2', 'decompose', '--k', '6'],
               'beta_6 = beta_2 * beta_4\nverified: true\n'
               'irreducible: false\n'),
              (['lemma2', '--s', '3'],
               'checked: 9\nviolations: 0\nequality at k: [0, 8]\n'),
              (['matrix-a', '--s', '1'],
               'A_2 (1x2)\nordering: [0, 1]\n-1 1\n'),
              (['matrix-b', '--s', '1'], 'B_2 (1x1)\nordering: [1]\n1\n'),
              (['--q', '4', '--modulus', 'u^2+u+1', 'beta', '--k', '1'],
               'X\n'),
              (['binom', '--n', '2', '--k', '1'],
               'binomial: t^2 + t\nunit: false\ndigit additive: false\n'),
              (['splits', '--k', '2'],
               'c=0 d=2 polynomial: true\nc=1 d=1 polynomial: false\n'
               'c=2 d=0 polynomial: true\n'))
    @ddt.unpack
    def test_text_output(self, argv, expected):
        self.assertEqual((0, expected), self.run_cli(*argv))

    @ddt.data(['--q', '3', 'cert', '--s', '2'],
              ['lemma2', '--s', '3'],
              ['--json', 'matrix-a', '--s', '1'],
              ['matrix-b', '--s', '2'],
              ['--q', '3', 'blocks', '--s', '1'],
              ['binom', '--n', '5', '--k', '2'],
              ['power', '--k', '1', '--m', '2'],
              ['splits', '--k', '3'],
              ['matrix-m', '--k', '3'],
              ['decompose', '--k', '5'],
              ['beta', '--k', '3'],
              ['check-int', '--poly', 'X'],
              ['expand', '--poly', 'X^2'])
    def test_short_command_flags(self, argv):
        code, out = self.run_cli(*argv)
        self.assertEqual(0, code)
        self.assertNotEqual('', out)
        self.assertNotIn('ambiguous', self.stderr.getvalue())

    def test_main_options_are_not_abbreviated(self):
        self.assertEqual(1, cli.main(['--size', '8', 'cert', '--s', '1']))
        self.assertEqual('', self.stdout.getvalue())

    def test_certificate(self):
        code, out = self.run_cli('--q', '3', 'cert', '--s', '2')
        self.assertEqual(0, code)
        lines = out.splitlines()
        self.assertEqual('certified: true', lines[0])
        self.assertEqual('rank: 8', lines[1])
        self.assertIn('matrix shape: 8x9', lines)

    def test_trivial_certificate(self):
        code, out = self.run_cli('--q', '5', 'cert', '--s', '0')
        self.assertEqual(0, code)
        self.assertIn('trivial: beta_1 = X', out)

    def test_matrix_m(self):
        code, out = self.run_cli('matrix-m', '--k', '2')
        self.assertEqual(0, code)
        self.assertEqual('M_2 (4x4)\n2 1 0 0\n1 2 0 0\n0 0 2 1\n0 0 1 2\n'
                         'det: 9\nnonzero: true\n', out)

    def test_blocks(self):
        code, out = self.run_cli('--q', '3', 'blocks', '--s', '2')
        self.assertEqual(0, code)
        self.assertTrue(out.startswith('lower block diagonal: true\n'))
        self.assertEqual(2, out.count('profile ok'))

    def test_power(self):
        code, out = self.run_cli('power', '--k', '2', '--m', '3')
        self.assertEqual(0, code)
        self.assertTrue(out.endswith('integer-valued: true\n'))

    def test_json(self):
        code, out = self.run_cli('--json', '--q', '3', 'cert', '--s', '1')
        self.assertEqual(0, code)
        data = jsonutils.loads(out)
        self.assertEqual(3, data['q'])
        self.assertEqual(2, data['rank'])
        self.assertTrue(data['certified'])
        self.assertEqual(['0', '1', '2'], data['ordering'])

    def test_json_matrix_entries_are_strings(self):
        code, out = self.run_cli('--json', 'matrix-m', '--k', '1')
        self.assertEqual(0, code)
        data = jsonutils.loads(out)
        self.assertEqual([['1', '0'], ['0', '1']], data['rows'])
        self.assertEqual('1', data['det'])

    @ddt.data(['--q', '6', 'beta', '--k', '1'],
              ['check-int', '--poly', 'X +'],
              ['beta'],
              ['beta', '--k', '-1'],
              ['cert', '--s', 'two'],
              ['matrix-a', '--s', '0'],
              ['binom', '--n', '2', '--k', '3'],
              ['--q', '4', '--modulus', 'u^2+1', 'beta', '--k', '1'],
              ['--q', '2'],
              ['frobnicate'])
    def test_invalid_input(self, argv):
        self.assertEqual(1, cli.main(argv))
        self.assertEqual('', self.stdout.getvalue())

    def test_size_limit(self):
        code, out = self.run_cli('--size-limit', '8', '--q', '3', 'cert',
                                 '--s', '2')
        self.assertEqual(2, code)
        self.assertEqual('', out)

    def test_property_violation(self):
        rank = self.patch(linalg, 'rank_exact')
        rank.return_value = 0
        code, out = self.run_cli('--q', '2', 'cert', '--s', '2')
        self.assertEqual(3, code)
        self.assertIn('certified: false', out)

    def test_help(self):
        code, out = self.run_cli('--help')
        self.assertEqual(0, code)
        self.assertIn('beta', out)
