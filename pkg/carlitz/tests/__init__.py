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

import fixtures
import hypothesis
import testscenarios

from oslo_config import cfg
from oslo_config import fixture as config_fixture
from oslotest import base

from carlitz.algebra import fq_field
from carlitz import config

# Property tests never time out; exact arithmetic on large inputs is slow
# but not wrong.
PROPERTIES = hypothesis.settings(max_examples=40, deadline=None)
# Field axioms, per built-in order.
AXIOMS = hypothesis.settings(max_examples=1000, deadline=None)
# Exact determinant against cofactor expansion.
ORACLE = hypothesis.settings(max_examples=500, deadline=None)

_FIELDS = {}


def field(q):
    """F_q with the built-in modulus, built once per test run."""
    if q not in _FIELDS:
        _FIELDS[q] = fq_field.field_for_order(q)
    return _FIELDS[q]


class TestCase(testscenarios.WithScenarios, base.BaseTestCase):
    """Test case base class for all unit tests."""

    def setUp(self):
        """Run before each test method to initialize test environment."""
        super(TestCase, self).setUp()
        # Resets CONF after each test, including anything the CLI parsed.
        self.cfg_fixture = self.useFixture(config_fixture.Config(cfg.CONF))
        config.set_defaults()

    def patch(self, obj, attr):
        """Returns a Mocked object on the patched attribute."""
        mockfixture = self.useFixture(fixtures.MockPatchObject(obj, attr))
        return mockfixture.mock

    def override(self, name, value):
        self.cfg_fixture.config(**{name: value})
