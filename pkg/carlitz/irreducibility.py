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

"""Certificates for the (absolute) irreducibility of beta_(q^s).

Let f_1 = 0, f_2, ..., f_(q^s) be the polynomials of degree below s in the
order of enumerate_deg_below. The valuation matrix A has the entry
v(t^s + f_i - f_j) - v(t^s - f_j) in row i >= 2 and column j. Zero row sums
together with rank q^s - 1 certify that every power of beta_(q^s) factors
uniquely; B is A without its first column.
"""

import collections

from oslo_config import cfg
from oslo_log import log as logging

from carlitz.algebra import fq_poly
from carlitz.algebra import fq_ratfunc
from carlitz.algebra import xpoly
from carlitz import basis
from carlitz import exceptions
from carlitz import linalg

CONF = cfg.CONF
CONF.import_opt('size_limit', 'carlitz.config')

LOG = logging.getLogger(__name__)


def _check_q(q):
    if q < 2:
        raise exceptions.BadBase(base=q)


# M_k matrices.

def _m_entry(q, k, a, b):
    # k minus the number of base-q digits to strip before a and b agree.
    level = 0
    while a != b:
        a //= q
        b //= q
        level += 1
    return k - level


def build_m_matrix(q, k, i=None, size_limit=None):
    """M_i^(k): q copies of M_(i-1)^(k) on the diagonal, k - i elsewhere.

    M_1^(k) is q x q with k on the diagonal and k - 1 off it; i defaults to
    k, which gives M_k.
    """
    _check_q(q)
    if k < 1:
        raise exceptions.OutOfRange(name='k', value=k, bounds='>= 1')
    if i is None:
        i = k
    if not 1 <= i <= k:
        raise exceptions.OutOfRange(name='i', value=i, bounds='[1, %d]' % k)
    size = q ** i
    basis.check_size('M_%d^(%d)' % (i, k), size, size_limit)
    return linalg.IntMatrix(size, size, [_m_entry(q, k, a, b)
                                         for a in range(size)
                                         for b in range(size)])


MDeterminant = collections.namedtuple('MDeterminant', ['det', 'nonzero'])


def m_matrix_nonsingular(q, k, size_limit=None):
    det = linalg.det_exact(build_m_matrix(q, k, size_limit=size_limit))
    LOG.debug('det M_%(k)s for q=%(q)s is %(det)s',
              {'k': k, 'q': q, 'det': det})
    return MDeterminant(det, det != 0)


def m_matrix_determinant_formula(q, k):
    """det M_k in closed form.

    M_k is the sum of L_0, ..., L_(k-1), where L_j has a 1 wherever the
    two indices agree after dropping j base-q digits. Its eigenvalues are
    (q^(m+1) - 1)/(q - 1) with multiplicity (q - 1) q^(k-m-1) for m < k,
    and (q^k - 1)/(q - 1) once more on the constant vector.
    """
    _check_q(q)
    if k < 1:
        raise exceptions.OutOfRange(name='k', value=k, bounds='>= 1')
    det = (q ** k - 1) // (q - 1)
    for m in range(k):
        det *= ((q ** (m + 1) - 1) // (q - 1)) ** ((q - 1) *
                                                  q ** (k - m - 1))
    return det


# The valuation matrix.

def lowest_degree(f):
    """Degree of the lowest nonzero term of a nonzero polynomial."""
    return f.valuation()


class ValuationMatrix(object):
    """A_(q^s) together with the ordering it was built against."""

    def __init__(self, spec, s, reps, matrix):
        self.spec = spec
        self.q = spec.q
        self.s = s
        self.reps = tuple(reps)
        self.matrix = matrix

    @property
    def points(self):
        t_s = fq_poly.FqPoly.monomial(self.spec, self.s)
        return tuple(t_s + f for f in self.reps[1:])

    @property
    def shape(self):
        return self.matrix.shape

    def group_degrees(self):
        """Lowest-term degree of f_2, ..., f_(q^s), one per row of B."""
        return [lowest_degree(f) for f in self.reps[1:]]

    def ordering(self):
        return [f.render() for f in self.reps]


def _check_ordering(spec, s, ordering):
    canonical = fq_poly.enumerate_deg_below(spec, s)
    ordering = list(ordering)
    if sorted(f.codes for f in ordering) != sorted(f.codes
                                                   for f in canonical):
        raise exceptions.InvalidInput(
            name='ordering',
            value='not a permutation of the polynomials of degree < %d' % s)
    if ordering[0]:
        raise exceptions.InvalidInput(name='ordering',
                                      value='f_1 must be 0')
    degrees = [lowest_degree(f) for f in ordering[1:]]
    if degrees != sorted(degrees, reverse=True):
        raise exceptions.InvalidInput(
            name='ordering',
            value='lowest-degree groups must be contiguous and descending')
    return ordering


def build_a_matrix(spec, s, ordering=None, size_limit=None):
    """The (q^s - 1) x q^s valuation matrix, row sums checked.

    :param ordering: optional permutation of enumerate_deg_below(spec, s)
                     keeping f_1 = 0 first and the lowest-degree groups
                     contiguous in descending order
    """
    if s < 1:
        raise exceptions.OutOfRange(name='s', value=s, bounds='>= 1')
    basis.check_size('A_(q^%d)' % s, spec.q ** s, size_limit)
    if ordering is None:
        reps = fq_poly.enumerate_deg_below(spec, s)
    else:
        reps = _check_ordering(spec, s, ordering)

    t_s = fq_poly.FqPoly.monomial(spec, s)
    # v(t^s - f_j) is the column offset; deg f_j < s keeps it finite.
    offsets = [(t_s - f).valuation() for f in reps]
    entries = []
    for f_i in reps[1:]:
        point = t_s + f_i
        entries.extend((point - f_j).valuation() - offset
                       for f_j, offset in zip(reps, offsets))
    matrix = linalg.IntMatrix(len(reps) - 1, len(reps), entries)

    for row, total in enumerate(linalg.row_sums(matrix), 2):
        if total:
            raise exceptions.RowSumViolation(row=row, q=spec.q, s=s,
                                             total=total)
    LOG.debug('Built A_(q^%(s)s) of shape %(shape)s over %(field)s',
              {'s': s, 'shape': matrix.shape, 'field': spec})
    return ValuationMatrix(spec, s, reps, matrix)


def build_b_matrix(a):
    return a.matrix.drop_column(0)


def block_indices(a):
    """Row indices of B per block k = 1..s; block k has lowest degree s-k."""
    degrees = a.group_degrees()
    return {k: [i for i, d in enumerate(degrees) if d == a.s - k]
            for k in range(1, a.s + 1)}


def expected_block_profile(q, k):
    """How often each value occurs in a row or column of block k."""
    profile = {k: 1}
    for r in range(1, k):
        profile[k - r] = (q - 1) * q ** (r - 1)
    zeros = (q - 2) * q ** (k - 1)
    if zeros:
        profile[0] = zeros
    return profile


class BlockResult(object):

    def __init__(self, k, dimension, expected_dimension, values,
                 rows_ok, columns_ok):
        self.k = k
        self.dimension = dimension
        self.expected_dimension = expected_dimension
        self.values = sorted(values)
        self.rows_ok = rows_ok
        self.columns_ok = columns_ok

    @property
    def ok(self):
        return (self.dimension == self.expected_dimension and
                self.rows_ok and self.columns_ok)

    def to_dict(self):
        return {'k': self.k,
                'dimension': self.dimension,
                'expected_dimension': self.expected_dimension,
                'values': self.values,
                'rows_ok': self.rows_ok,
                'columns_ok': self.columns_ok,
                'ok': self.ok}


class BlockProfile(object):

    def __init__(self, q, s, blocks, lower_block_diagonal, nonnegative):
        self.q = q
        self.s = s
        self.blocks = blocks
        self.lower_block_diagonal = lower_block_diagonal
        self.nonnegative = nonnegative

    @property
    def ok(self):
        return (self.lower_block_diagonal and self.nonnegative and
                all(b.ok for b in self.blocks))

    def to_dict(self):
        return {'q': self.q,
                's': self.s,
                'blocks': [b.to_dict() for b in self.blocks],
                'lower_block_diagonal': self.lower_block_diagonal,
                'nonnegative': self.nonnegative,
                'ok': self.ok}


def _profile(values):
    return dict(collections.Counter(values))


def block_profile_check(a):
    """Check the diagonal blocks of B against their multiplicity profile.

    Failures are reported, never raised.
    """
    b = build_b_matrix(a)
    q = a.q
    degrees = a.group_degrees()
    lower = all(b[i, j] == 0
                for i in range(b.rows) for j in range(b.cols)
                if degrees[i] > degrees[j])
    nonnegative = True

    results = []
    for k, indices in sorted(block_indices(a).items()):
        block = b.submatrix(indices, indices)
        nonnegative = nonnegative and all(e >= 0 for e in block.entries)
        expected = expected_block_profile(q, k)
        rows_ok = all(_profile(block.row(i)) == expected
                      for i in range(block.rows))
        columns_ok = all(_profile(block.column(j)) == expected
                         for j in range(block.cols))
        results.append(BlockResult(k, len(indices), (q - 1) * q ** (k - 1),
                                   set(block.entries), rows_ok, columns_ok))
        LOG.debug('Block %(k)s of B for q=%(q)s, s=%(s)s: rows %(r)s, '
                  'columns %(c)s',
                  {'k': k, 'q': q, 's': a.s, 'r': rows_ok, 'c': columns_ok})
    return BlockProfile(q, a.s, results, lower, nonnegative)


# Certificates.

class Certificate(object):

    def __init__(self, q, s, matrix_shape, row_sums_zero, rank,
                 expected_rank, ordering, trivial=False):
        self.q = q
        self.s = s
        self.matrix_shape = tuple(matrix_shape)
        self.row_sums_zero = row_sums_zero
        self.rank = rank
        self.expected_rank = expected_rank
        self.ordering = list(ordering)
        self.trivial = trivial

    @property
    def certified(self):
        return self.row_sums_zero and self.rank == self.expected_rank

    def to_dict(self):
        return {'q': self.q,
                's': self.s,
                'matrix_shape': list(self.matrix_shape),
                'row_sums_zero': self.row_sums_zero,
                'rank': self.rank,
                'expected_rank': self.expected_rank,
                'certified': self.certified,
                'ordering': self.ordering,
                'trivial': self.trivial}


def certify_absolute_irreducibility(spec, s, ordering=None, size_limit=None):
    """Rank certificate for beta_(q^s); s = 0 gives the trivial one for X.
    """
    if s < 0:
        raise exceptions.OutOfRange(name='s', value=s, bounds='>= 0')
    if s == 0:
        return Certificate(spec.q, 0, (0, 1), True, 0, 0, ['0'],
                           trivial=True)
    a = build_a_matrix(spec, s, ordering, size_limit)
    rank = linalg.rank_exact(a.matrix)
    return Certificate(spec.q, s, a.shape,
                       not any(linalg.row_sums(a.matrix)), rank,
                       spec.q ** s - 1, a.ordering())


class Irreducible(object):
    """beta_k with k = q^s."""

    irreducible = True

    def __init__(self, k, s):
        self.k = k
        self.s = s

    def to_dict(self):
        return {'k': self.k, 'irreducible': True, 's': self.s}


class Witness(object):
    """A verified factorization of beta_k into non-units of Int."""

    irreducible = False

    def __init__(self, k, factors):
        self.k = k
        self.factors = list(factors)

    def flat_factors(self):
        """The powers q^i, repeated a_i times."""
        return [power for power, exponent in self.factors
                for _ in range(exponent)]

    def to_dict(self):
        return {'k': self.k,
                'irreducible': False,
                'factors': [{'power': p, 'exponent': e}
                            for p, e in self.factors],
                'verified': True}


def reducibility_witness(spec, k, size_limit=None):
    if k < 1:
        raise exceptions.OutOfRange(name='k', value=k, bounds='>= 1')
    s = basis.power_exponent(spec.q, k)
    if s is not None:
        basis.check_size('beta_%d' % k, k, size_limit)
        return Irreducible(k, s)
    factors = basis.decompose_beta(spec.q, k)
    if not basis.verify_decomposition(spec, k, size_limit):
        raise exceptions.PropertyViolation(
            prop='beta decomposition',
            detail='product of %s differs from beta_%d' % (factors, k))
    for power, _exponent in factors:
        factor = basis.beta(spec, power, size_limit)
        if factor.degree() < 1 or not basis.is_integer_valued(factor,
                                                              size_limit):
            raise exceptions.PropertyViolation(
                prop='non-unit factor',
                detail='beta_%d is not a non-unit of Int' % power)
    return Witness(k, factors)


# Supplementary oracles.

def beta_product_form(spec, s, size_limit=None):
    """Whether beta_(q^s) = prod_j (X - f_j) / (t^s - f_j) exactly."""
    basis.check_size('beta_(q^%d)' % s, spec.q ** s, size_limit)
    t_s = fq_poly.FqPoly.monomial(spec, s)
    x = xpoly.XPoly.x(spec)
    numerator = xpoly.XPoly.one(spec)
    denominator = fq_poly.FqPoly.one(spec)
    for f in fq_poly.enumerate_deg_below(spec, s):
        numerator = numerator * (x - f)
        denominator = denominator * (t_s - f)
    return (numerator / denominator ==
            basis.beta(spec, spec.q ** s, size_limit))


RowSumOracle = collections.namedtuple('RowSumOracle', ['values', 'ok'])


def row_sum_oracle(spec, s, size_limit=None):
    """beta_(q^s)(t^s + f_i) for i = 2..q^s, each expected to be 1."""
    b = basis.beta(spec, spec.q ** s, size_limit)
    t_s = fq_poly.FqPoly.monomial(spec, s)
    values = [b.evaluate(t_s + f)
              for f in fq_poly.enumerate_deg_below(spec, s)[1:]]
    return RowSumOracle(values, all(v == 1 for v in values))


SplitResult = collections.namedtuple('SplitResult', ['c', 'd', 'polynomial'])


def leading_coefficient_splits(spec, k, size_limit=None):
    """For c + d = k, whether g_c g_d / g_k lies in F_q[t].

    A factorization beta_k = G H with deg G = c, deg H = d inside Int needs
    this to hold.
    """
    if k < 0:
        raise exceptions.OutOfRange(name='k', value=k, bounds='>= 0')
    g = basis.g_k(spec, k, size_limit)
    results = []
    for c in range(k + 1):
        quotient = fq_ratfunc.RatFunc(
            basis.g_k(spec, c, size_limit) *
            basis.g_k(spec, k - c, size_limit), g)
        results.append(SplitResult(c, k - c, quotient.is_polynomial()))
    return results
