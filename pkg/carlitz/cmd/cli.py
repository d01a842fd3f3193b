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

"""CLI tool for Carlitz binomial polynomials and their certificates."""

import sys

from oslo_config import cfg
from oslo_log import log as logging
from oslo_utils import strutils

from carlitz.algebra import fq_field
from carlitz.algebra import parser
from carlitz import basis
from carlitz import config
from carlitz import exceptions
from carlitz import irreducibility
from carlitz import linalg
from carlitz import reports

CONF = cfg.CONF

LOG = logging.getLogger(__name__)


def _integer(name, minimum=0):
    def convert(value):
        return strutils.validate_integer(value, name, min_value=minimum)
    convert.__name__ = name
    return convert


def load_field():
    """The FieldSpec selected by --q and --modulus."""
    p, n = fq_field.factor_order(CONF.q)
    modulus = None
    if CONF.modulus:
        modulus = parser.parse_modulus(p, CONF.modulus)
    return fq_field.make_field(p, n, modulus)


def do_beta(spec):
    k = CONF.command.k
    return reports.BetaReport(k, basis.beta(spec, k), basis.G_k(spec, k),
                              basis.g_k(spec, k))


def do_check_int(spec):
    poly = parser.parse_xpoly(spec, CONF.command.poly)
    return reports.IntegerValuedReport(
        poly, basis.integer_valued_obstruction(poly))


def do_expand(spec):
    poly = parser.parse_xpoly(spec, CONF.command.poly)
    return reports.ExpansionReport(poly, basis.expand_g_basis(poly),
                                   basis.expand_beta_basis(poly))


def do_cert(spec):
    return reports.CertificateReport(
        irreducibility.certify_absolute_irreducibility(spec, CONF.command.s))


def do_matrix_a(spec):
    a = irreducibility.build_a_matrix(spec, CONF.command.s)
    return reports.MatrixReport('A_%d' % spec.q ** a.s, a.matrix,
                                a.ordering())


def do_matrix_b(spec):
    a = irreducibility.build_a_matrix(spec, CONF.command.s)
    return reports.MatrixReport('B_%d' % spec.q ** a.s,
                                irreducibility.build_b_matrix(a),
                                a.ordering()[1:])


def do_blocks(spec):
    a = irreducibility.build_a_matrix(spec, CONF.command.s)
    return reports.BlocksReport(irreducibility.block_profile_check(a))


def do_matrix_m(spec):
    k = CONF.command.k
    m = irreducibility.build_m_matrix(spec.q, k)
    return reports.MMatrixReport(
        'M_%d' % k, m, linalg.det_exact(m),
        irreducibility.m_matrix_determinant_formula(spec.q, k))


def do_binom(spec):
    n, k = CONF.command.n, CONF.command.k
    return reports.BinomialReport(
        spec.q, n, k,
        basis.carlitz_binomial(spec, n, k),
        basis.binom_is_unit(spec, n, k),
        basis.digit_additivity(spec.q, n, k),
        basis.power_exponent(spec.q, n) is not None)


def do_lemma2(spec):
    s = CONF.command.s
    n = spec.q ** s
    basis.check_size('digit inequality sweep', n)
    return reports.LemmaSweepReport(
        spec.q, s, [basis.lemma_digit_inequality(spec.q, s, k)
                    for k in range(n + 1)])


def do_decompose(spec):
    k = CONF.command.k
    return reports.DecompositionReport(
        k, basis.decompose_beta(spec.q, k),
        basis.verify_decomposition(spec, k),
        basis.power_exponent(spec.q, k) is not None)


def do_power(spec):
    k, m = CONF.command.k, CONF.command.m
    expansion = basis.expand_beta_basis(basis.beta(spec, k) ** m)
    return reports.PowerReport(k, m, expansion,
                               all(b.is_polynomial() for b in expansion))


def do_splits(spec):
    k = CONF.command.k
    return reports.SplitsReport(
        k, irreducibility.leading_coefficient_splits(spec, k),
        basis.power_exponent(spec.q, k) is not None)


def add_command_parsers(subparsers):
    parser = subparsers.add_parser('beta', help='Print beta_k.')
    parser.add_argument('--k', required=True, type=_integer('k'))
    parser.set_defaults(func=do_beta)

    for name, func, text in [
            ('check-int', do_check_int,
             'Decide whether a polynomial is integer-valued.'),
            ('expand', do_expand,
             'Expand a polynomial in the G and beta bases.')]:
        parser = subparsers.add_parser(name, help=text)
        parser.add_argument('--poly', required=True,
                            help='Polynomial in X over F_q(t).')
        parser.set_defaults(func=func)

    for name, func, minimum, text in [
            ('cert', do_cert, 0,
             'Rank certificate of absolute irreducibility of beta_(q^s).'),
            ('matrix-a', do_matrix_a, 1, 'Print the valuation matrix A.'),
            ('matrix-b', do_matrix_b, 1, 'Print the submatrix B.'),
            ('blocks', do_blocks, 1, 'Check the diagonal blocks of B.'),
            ('lemma2', do_lemma2, 0,
             'Sweep the digit inequality over k in [0, q^s].')]:
        parser = subparsers.add_parser(name, help=text)
        parser.add_argument('--s', required=True,
                            type=_integer('s', minimum))
        parser.set_defaults(func=func)

    for name, func, text in [
            ('matrix-m', do_matrix_m, 'Print M_k and its determinant.'),
            ('decompose', do_decompose,
             'Decompose beta_k into beta_(q^i) factors.'),
            ('splits', do_splits,
             'Test g_c g_d / g_k for every c + d = k.')]:
        parser = subparsers.add_parser(name, help=text)
        minimum = 0 if name == 'splits' else 1
        parser.add_argument('--k', required=True,
                            type=_integer('k', minimum))
        parser.set_defaults(func=func)

    parser = subparsers.add_parser(
        'binom', help='Carlitz binomial coefficient (n choose k).')
    parser.add_argument('--n', required=True, type=_integer('n'))
    parser.add_argument('--k', required=True, type=_integer('k'))
    parser.set_defaults(func=do_binom)

    parser = subparsers.add_parser(
        'power', help='Beta expansion of the m-th power of beta_k.')
    parser.add_argument('--k', required=True, type=_integer('k'))
    parser.add_argument('--m', required=True, type=_integer('m'))
    parser.set_defaults(func=do_power)


class CommandOpt(cfg.SubCommandOpt):
    """Sub-command option that turns off abbreviation on the main parser.

    The main parser holds the oslo.config and oslo.log options, so with
    abbreviation on it claims flags such as --s or --m that belong to a
    sub-command.
    """

    def _add_to_cli(self, parser, group=None):
        parser.allow_abbrev = False
        super(CommandOpt, self)._add_to_cli(parser, group)


command_opts = [
    CommandOpt('command',
               title='Command',
               help='Available commands',
               handler=add_command_parsers)
]

CONF.register_cli_opts(command_opts)


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        config.set_defaults()
        CONF(args=argv, project='carlitz', prog='carlitz')
    except SystemExit as e:
        return 1 if e.code else 0
    except cfg.Error as e:
        sys.stderr.write('%s\n' % e)
        return 1
    logging.setup(CONF, 'carlitz')

    if CONF.command.name is None:
        LOG.error('No command given')
        return 1
    try:
        report = CONF.command.func(load_field())
        sys.stdout.write(report.render(CONF.json) + '\n')
        if not report.ok:
            raise exceptions.PropertyViolation(prop=report.prop,
                                               detail=report.failure())
    except exceptions.CarlitzException as e:
        LOG.error('%s', e)
        return e.code
    return 0


if __name__ == '__main__':
    sys.exit(main())
