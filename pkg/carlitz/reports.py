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

"""Report objects behind every sub-command.

Text and JSON output are both rendered from the same report, so the two
forms never disagree. A report whose ok flag is False stands for a
property the theory asserts that failed to verify.
"""

from oslo_serialization import jsonutils


def _bool(value):
    return 'true' if value else 'false'


def _list(items):
    return '[%s]' % ', '.join(items)


class Report(object):

    ok = True
    prop = None

    def to_dict(self):
        raise NotImplementedError()

    def lines(self):
        raise NotImplementedError()

    def failure(self):
        """Short description of what failed, for the exit status 3 path."""
        return self.prop

    def render(self, as_json=False):
        if as_json:
            return jsonutils.dumps(self.to_dict(), sort_keys=True, indent=2)
        return '\n'.join(self.lines())


class BetaReport(Report):

    def __init__(self, k, beta, big_g, small_g):
        self.k = k
        self.beta = beta
        self.big_g = big_g
        self.small_g = small_g

    def to_dict(self):
        return {'k': self.k,
                'beta': self.beta.render_fraction(),
                'G': self.big_g.render(),
                'g': self.small_g.render(),
                'degree': self.beta.degree(),
                'leading': self.beta.leading().render()}

    def lines(self):
        return [self.beta.render_fraction()]


class IntegerValuedReport(Report):

    def __init__(self, poly, obstruction):
        self.poly = poly
        self.obstruction = obstruction

    @property
    def integer_valued(self):
        return self.obstruction is None

    def to_dict(self):
        return {'poly': self.poly.render(),
                'integer_valued': self.integer_valued,
                'obstruction': self.obstruction}

    def lines(self):
        out = [_bool(self.integer_valued)]
        if not self.integer_valued:
            out.append('offending k: %d' % self.obstruction)
        return out


class ExpansionReport(Report):

    def __init__(self, poly, g_expansion, beta_expansion):
        self.poly = poly
        self.g_expansion = g_expansion
        self.beta_expansion = beta_expansion

    def to_dict(self):
        return {'poly': self.poly.render(),
                'A': self.g_expansion.render(),
                'B': self.beta_expansion.render()}

    def lines(self):
        return ['A = %s' % _list(self.g_expansion.render()),
                'B = %s' % _list(self.beta_expansion.render())]


class CertificateReport(Report):

    prop = 'rank certificate'

    def __init__(self, certificate):
        self.certificate = certificate

    @property
    def ok(self):
        return self.certificate.certified

    def failure(self):
        cert = self.certificate
        return ('rank %d, expected %d, row sums zero: %s'
                % (cert.rank, cert.expected_rank,
                   _bool(cert.row_sums_zero)))

    def to_dict(self):
        return self.certificate.to_dict()

    def lines(self):
        cert = self.certificate
        out = ['certified: %s' % _bool(cert.certified),
               'rank: %d' % cert.rank,
               'expected rank: %d' % cert.expected_rank,
               'row sums zero: %s' % _bool(cert.row_sums_zero),
               'matrix shape: %dx%d' % cert.matrix_shape,
               'ordering: %s' % _list(cert.ordering)]
        if cert.trivial:
            out.append('trivial: beta_1 = X')
        return out


class MatrixReport(Report):

    def __init__(self, name, matrix, ordering=None):
        self.name = name
        self.matrix = matrix
        self.ordering = ordering

    def to_dict(self):
        result = {'name': self.name,
                  'shape': list(self.matrix.shape),
                  'rows': self.matrix.to_json()}
        if self.ordering is not None:
            result['ordering'] = list(self.ordering)
        return result

    def lines(self):
        out = ['%s (%dx%d)' % ((self.name,) + self.matrix.shape)]
        if self.ordering is not None:
            out.append('ordering: %s' % _list(self.ordering))
        out.extend(' '.join('%d' % e for e in row)
                   for row in self.matrix.to_rows())
        return out


class MMatrixReport(MatrixReport):

    prop = 'det M_k'

    def __init__(self, name, matrix, det, formula):
        super(MMatrixReport, self).__init__(name, matrix)
        self.det = det
        self.formula = formula

    @property
    def ok(self):
        return self.det != 0 and self.det == self.formula

    def failure(self):
        return 'det %d, closed form %d' % (self.det, self.formula)

    def to_dict(self):
        result = super(MMatrixReport, self).to_dict()
        result.update({'det': str(self.det),
                       'formula': str(self.formula),
                       'nonzero': self.det != 0})
        return result

    def lines(self):
        return super(MMatrixReport, self).lines() + [
            'det: %d' % self.det,
            'nonzero: %s' % _bool(self.det != 0)]


class BlocksReport(Report):

    prop = 'block profile'

    def __init__(self, profile):
        self.profile = profile

    @property
    def ok(self):
        return self.profile.ok

    def failure(self):
        bad = [b.k for b in self.profile.blocks if not b.ok]
        return ('lower block diagonal: %s, failing blocks: %s'
                % (_bool(self.profile.lower_block_diagonal), bad))

    def to_dict(self):
        return self.profile.to_dict()

    def lines(self):
        out = ['lower block diagonal: %s'
               % _bool(self.profile.lower_block_diagonal)]
        for b in self.profile.blocks:
            out.append('block %d: dimension %d (expected %d), values %s, '
                       'profile %s'
                       % (b.k, b.dimension, b.expected_dimension,
                          _list(str(v) for v in b.values),
                          'ok' if b.rows_ok and b.columns_ok else 'FAIL'))
        return out


class BinomialReport(Report):

    prop = 'binomial unit criterion'

    def __init__(self, q, n, k, value, unit, additive, prime_power):
        self.q = q
        self.n = n
        self.k = k
        self.value = value
        self.unit = unit
        self.additive = additive
        self.prime_power = prime_power

    @property
    def ok(self):
        if self.additive and not self.unit:
            return False
        return not self.prime_power or self.unit == self.additive

    def failure(self):
        return 'unit: %s, digit additive: %s' % (_bool(self.unit),
                                                 _bool(self.additive))

    def to_dict(self):
        return {'n': self.n,
                'k': self.k,
                'binomial': self.value.render(),
                'unit': self.unit,
                'digit_additive': self.additive}

    def lines(self):
        return ['binomial: %s' % self.value.render(),
                'unit: %s' % _bool(self.unit),
                'digit additive: %s' % _bool(self.additive)]


class LemmaSweepReport(Report):

    prop = 'digit inequality'

    def __init__(self, q, s, results):
        self.q = q
        self.s = s
        self.results = list(results)

    @property
    def n(self):
        return self.q ** self.s

    def violations(self):
        bad = []
        for k, r in enumerate(self.results):
            if r.lhs > r.rhs or r.strict != (0 < k < self.n):
                bad.append(k)
        return bad

    @property
    def ok(self):
        return not self.violations()

    def failure(self):
        return 'violations at k = %s' % self.violations()

    def equality(self):
        return [k for k, r in enumerate(self.results) if not r.strict]

    def to_dict(self):
        return {'q': self.q,
                's': self.s,
                'checked': len(self.results),
                'violations': self.violations(),
                'equality': self.equality()}

    def lines(self):
        return ['checked: %d' % len(self.results),
                'violations: %d' % len(self.violations()),
                'equality at k: %s' % _list(str(k)
                                            for k in self.equality())]


def _factor_text(power, exponent):
    if exponent == 1:
        return 'beta_%d' % power
    return 'beta_%d^%d' % (power, exponent)


class DecompositionReport(Report):

    prop = 'beta decomposition'

    def __init__(self, k, factors, verified, irreducible):
        self.k = k
        self.factors = list(factors)
        self.verified = verified
        self.irreducible = irreducible

    @property
    def ok(self):
        return self.verified

    def failure(self):
        return 'the product differs from beta_%d' % self.k

    def to_dict(self):
        return {'k': self.k,
                'factors': [{'power': p, 'exponent': e}
                            for p, e in self.factors],
                'verified': self.verified,
                'irreducible': self.irreducible}

    def lines(self):
        product = ' * '.join(_factor_text(p, e) for p, e in self.factors)
        return ['beta_%d = %s' % (self.k, product),
                'verified: %s' % _bool(self.verified),
                'irreducible: %s' % _bool(self.irreducible)]


class PowerReport(Report):

    prop = 'powers stay integer-valued'

    def __init__(self, k, m, expansion, integer_valued):
        self.k = k
        self.m = m
        self.expansion = expansion
        self.integer_valued = integer_valued

    @property
    def ok(self):
        return self.integer_valued

    def to_dict(self):
        return {'k': self.k,
                'm': self.m,
                'B': self.expansion.render(),
                'integer_valued': self.integer_valued}

    def lines(self):
        return ['B = %s' % _list(self.expansion.render()),
                'integer-valued: %s' % _bool(self.integer_valued)]


class SplitsReport(Report):

    prop = 'leading coefficient obstruction'

    def __init__(self, k, splits, prime_power):
        self.k = k
        self.splits = list(splits)
        self.prime_power = prime_power

    @property
    def ok(self):
        if not self.prime_power:
            return True
        return all(r.polynomial == (r.c in (0, self.k))
                   for r in self.splits)

    def to_dict(self):
        return {'k': self.k,
                'splits': [{'c': r.c, 'd': r.d, 'polynomial': r.polynomial}
                           for r in self.splits]}

    def lines(self):
        return ['c=%d d=%d polynomial: %s' % (r.c, r.d, _bool(r.polynomial))
                for r in self.splits]
