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
from oslo_log import log as logging


cli_opts = [
    cfg.IntOpt('q',
               default=2,
               min=2,
               help='Order of the coefficient field F_q. Must be a prime '
                    'power p^n.'),
    cfg.StrOpt('modulus',
               help='Irreducible monic polynomial in u over F_p defining '
                    'F_q when n > 1, for example "u^2+u+1". Required only '
                    'when q has no built-in modulus.'),
    cfg.BoolOpt('json',
                default=False,
                help='Print reports as JSON instead of text.'),
    cfg.IntOpt('size-limit',
               default=4096,
               min=1,
               help='Largest number of evaluation points q^m any '
                    'constructor is allowed to enumerate (psi_m, F_m, '
                    'beta_k, M_k and the valuation matrices).'),
]

CONF = cfg.CONF
CONF.register_cli_opts(cli_opts)
logging.register_options(CONF)


def set_defaults():
    """Reports own stdout, log records go to stderr."""
    CONF.set_default('use_stderr', True)


set_defaults()
