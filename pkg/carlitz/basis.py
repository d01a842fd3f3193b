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

"""The Carlitz basis of Int(F_q[t]).

psi_m(X) is the product of X - f over all f of degree below m, and
F_m = (t^(q^m) - t) (t^(q^(m-1)) - t)^q ... (t^q - t)^(q^(m-1)). For
k = a_0 + a_1 q + ... + a_s q^s:

    G_k = psi_0^a_0 ... psi_s^a_s,  g_k = F_0^a_0 ... F_s^a_s,
    beta_k = G_k / g_k.
"""

import collections
import functools

from oslo_config import cfg
from oslo_log import log as logging

from carlitz.algebra import fq_poly
from carlitz.algebra import fq_ratfunc
from carlitz.algebra import xpoly
from carlitz import exceptions

CONF = cfg.CONF
CONF.import_opt('size_limit', 'carlitz.config')

LOG = logging.getLogger(__name__)

G_BASIS = 'G'
BETA_BASIS = 'beta'


def check_size(what, size, size_limit=None):
    """Raise SizeLimit when size exceeds the limit (CONF by default)."""
    limit = CONF.size_limit if size_limit is None else size_limit
    if size > limit:
        raise exceptions.SizeLimit(what=what, size=size, limit=limit)
    LOG.debug('%(what)s within size limit: %(size)s <= %(limit)s',
              {'what': what, 'size': size, 'limit': limit})


def _check_non_negative(name, value):
    if value < 0:
        raise exceptions.OutOfRange(name=name, value=value, bounds='>= 0')


class DigitVector(object):
    """Base-q digits a_0, ..., a_s of an integer, lowest first."""

    def __init__(self, q, digits):
        self.q = q
        self.digits = tuple(digits)

    @property
    def value(self):
        return sum(a * self.q ** i for i, a in enumerate(self.digits))

    @property
    def s(self):
        """Position of the top digit; -1 for zero."""
        return len(self.digits) - 1

    def positions(self):
        """(i, a_i) for every nonzero digit."""
        return [(i, a) for i, a in enumerate(self.digits) if a]

    def digit(self, i):
        return self.digits[i] if i < len(self.digits) else 0

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, i):
        return self.digits[i]

    def __eq__(self, other):
        if isinstance(other, DigitVector):
            return (self.q, self.digits) == (other.q, other.digits)
        if isinstance(other, (list, tuple)):
            return self.digits == tuple(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.q, self.digits))

    def __repr__(self):
        return 'DigitVector(q=%d, %s)' % (self.q, list(self.digits))


def digits(k, q):
    if q < 2:
        raise exceptions.BadBase(base=q)
    _check_non_negative('k', k)
    out = []
    while k:
        k, a = divmod(k, q)
        out.append(a)
    return DigitVector(q, out)


def power_exponent(q, k):
    """s with q^s = k, or None when k is not a power of q."""
    if q < 2:
        raise exceptions.BadBase(base=q)
    if k < 1:
        return None
    s = 0
    while k % q == 0:
        k //= q
        s += 1
    return s if k == 1 else None


def g_degree(q, n):
    """deg_t g_n = sum a_i * i * q^i, from the digits alone."""
    return sum(a * i * q ** i for i, a in enumerate(digits(n, q)))


@functools.lru_cache(maxsize=None)
def _psi(spec, m):
    roots = fq_poly.enumerate_deg_below(spec, m)
    # Coefficients of prod (X - f), X^0 first, kept in F_q[t].
    coeffs = [fq_poly.FqPoly.one(spec)]
    for f in roots:
        shifted = [fq_poly.FqPoly.zero(spec)] + coeffs
        if f:
            for i, c in enumerate(coeffs):
                shifted[i] = shifted[i] - f * c
        coeffs = shifted
    LOG.debug('Built psi_%(m)s over %(field)s with %(n)s factors',
              {'m': m, 'field': spec, 'n': len(roots)})
    return xpoly.XPoly(spec, coeffs)


def psi(spec, m, size_limit=None):
    _check_non_negative('m', m)
    check_size('psi_%d' % m, spec.q ** m, size_limit)
    return _psi(spec, m)


@functools.lru_cache(maxsize=None)
def _carlitz_factorial_factor(spec, m):
    t = fq_poly.FqPoly.t(spec)
    result = fq_poly.FqPoly.one(spec)
    for i in range(1, m + 1):
        result = result * (t ** (spec.q ** i) - t) ** (spec.q ** (m - i))
    return result


def carlitz_factorial_factor(spec, m, size_limit=None):
    """F_m, monic of t-degree m * q^m."""
    _check_non_negative('m', m)
    check_size('F_%d' % m, spec.q ** m, size_limit)
    return _carlitz_factorial_factor(spec, m)


def _top_digit_size(spec, k, size_limit):
    top = digits(k, spec.q).s
    if top >= 0:
        check_size('digit q^%d of %d' % (top, k), spec.q ** top, size_limit)


@functools.lru_cache(maxsize=None)
def _g_k(spec, k):
    result = fq_poly.FqPoly.one(spec)
    for i, a in digits(k, spec.q).positions():
        result = result * _carlitz_factorial_factor(spec, i) ** a
    return result


def g_k(spec, k, size_limit=None):
    _check_non_negative('k', k)
    _top_digit_size(spec, k, size_limit)
    return _g_k(spec, k)


@functools.lru_cache(maxsize=None)
def _G_k(spec, k):
    result = xpoly.XPoly.one(spec)
    for i, a in digits(k, spec.q).positions():
        result = result * _psi(spec, i) ** a
    return result


def G_k(spec, k, size_limit=None):
    _check_non_negative('k', k)
    _top_digit_size(spec, k, size_limit)
    return _G_k(spec, k)


def beta(spec, k, size_limit=None):
    """beta_k = G_k / g_k, of degree k with leading coefficient 1/g_k."""
    return G_k(spec, k, size_limit) / g_k(spec, k, size_limit)


class CarlitzExpansion(object):
    """Coefficients of f in the G basis or in the beta basis."""

    def __init__(self, field, basis, coeffs):
        if basis not in (G_BASIS, BETA_BASIS):
            raise exceptions.InvalidInput(name='basis', value=basis)
        self.field = field
        self.basis = basis
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def coefficient(self, k):
        if k < len(self.coeffs):
            return self.coeffs[k]
        return fq_ratfunc.RatFunc.zero(self.field)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CarlitzExpansion):
            return NotImplemented
        return ((self.field, self.basis, self.coeffs) ==
                (other.field, other.basis, other.coeffs))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.field, self.basis, self.coeffs))

    def render(self):
        return [c.render() for c in self.coeffs]

    def __repr__(self):
        return 'CarlitzExpansion(%s, %s)' % (self.basis, self.render())


def expand_g_basis(f, size_limit=None):
    """A_0, ..., A_n with f = sum A_k G_k.

    G_n is monic of degree n, so A_n is the leading coefficient of what is
    left after the higher terms have been subtracted.
    """
    spec = f.field
    if not f:
        return CarlitzExpansion(spec, G_BASIS, ())
    coeffs = [fq_ratfunc.RatFunc.zero(spec)] * (f.degree() + 1)
    rest = f
    while rest:
        n = rest.degree()
        coeffs[n] = rest.leading()
        rest = rest - G_k(spec, n, size_limit) * coeffs[n]
    return CarlitzExpansion(spec, G_BASIS, coeffs)


def expand_beta_basis(f, size_limit=None):
    """B_k = A_k g_k, so that f = sum B_k beta_k."""
    spec = f.field
    expansion = expand_g_basis(f, size_limit)
    return CarlitzExpansion(
        spec, BETA_BASIS,
        [a * g_k(spec, k, size_limit) for k, a in enumerate(expansion)])


def reconstruct(expansion, size_limit=None):
    spec = expansion.field
    element = G_k if expansion.basis == G_BASIS else beta
    result = xpoly.XPoly.zero(spec)
    for k, c in enumerate(expansion):
        if c:
            result = result + element(spec, k, size_limit) * c
    return result


def integer_valued_obstruction(f, size_limit=None):
    """Index of the first B_k outside F_q[t], or None."""
    for k, b in enumerate(expand_beta_basis(f, size_limit)):
        if not b.is_polynomial():
            LOG.debug('B_%(k)s = %(b)s is not a polynomial',
                      {'k': k, 'b': b.render()})
            return k
    return None


def is_integer_valued(f, size_limit=None):
    return integer_valued_obstruction(f, size_limit) is None


def _check_binomial_range(n, k):
    if not 0 <= k <= n:
        raise exceptions.OutOfRange(name='k', value=k,
                                    bounds='[0, %d]' % max(n, 0))


def carlitz_binomial(spec, n, k, size_limit=None):
    """(n choose k) in F_q[t], that is g_n / (g_k g_(n-k))."""
    _check_binomial_range(n, k)
    return fq_ratfunc.RatFunc(
        g_k(spec, n, size_limit),
        g_k(spec, k, size_limit) * g_k(spec, n - k, size_limit))


def binom_is_unit(spec, n, k, size_limit=None):
    _check_binomial_range(n, k)
    q = spec.q
    if g_degree(q, n) != g_degree(q, k) + g_degree(q, n - k):
        return False
    # All three factorials are monic, so the quotient is a unit iff it is 1.
    return (g_k(spec, n, size_limit) ==
            g_k(spec, k, size_limit) * g_k(spec, n - k, size_limit))


def digit_additivity(q, n, k):
    """Whether k and n - k add up digit by digit to n without carries."""
    _check_binomial_range(n, k)
    whole = digits(n, q)
    left = digits(k, q)
    right = digits(n - k, q)
    return all(whole.digit(i) == left.digit(i) + right.digit(i)
               for i in range(len(whole)))


LemmaResult = collections.namedtuple('LemmaResult', ['lhs', 'rhs', 'strict'])


def lemma_digit_inequality(q, s, k):
    """Compare sum (c_i + d_i) i q^i over the digits of k, q^s - k with s q^s.
    """
    if q < 2:
        raise exceptions.BadBase(base=q)
    _check_non_negative('s', s)
    n = q ** s
    if not 0 <= k <= n:
        raise exceptions.OutOfRange(name='k', value=k, bounds='[0, %d]' % n)
    lhs = g_degree(q, k) + g_degree(q, n - k)
    rhs = s * n
    return LemmaResult(lhs, rhs, lhs < rhs)


def decompose_beta(q, k):
    """[(q^i, a_i)] over the nonzero digits of k, i = 0 included."""
    if k < 1:
        raise exceptions.OutOfRange(name='k', value=k, bounds='>= 1')
    return [(q ** i, a) for i, a in digits(k, q).positions()]


def verify_decomposition(spec, k, size_limit=None):
    """Whether prod beta_(q^i)^a_i equals beta_k exactly."""
    product = xpoly.XPoly.one(spec)
    for power, exponent in decompose_beta(spec.q, k):
        product = product * beta(spec, power, size_limit) ** exponent
    return product == beta(spec, k, size_limit)
