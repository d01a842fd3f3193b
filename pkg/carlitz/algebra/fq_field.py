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

"""Exact arithmetic in the finite field F_q, q = p^n.

An element is stored as a single integer code in [0, q): its coordinates
c_0, ..., c_{n-1} in the power basis of the generator u are the base-p
digits of the code, least significant coordinate first. The code of an
element is therefore also its position in enumerate_field(), and the codes
of the prime subfield are the integers 0, ..., p-1.
"""

import itertools

from oslo_log import log as logging

from carlitz.algebra import exceptions
from carlitz import exceptions as common_ex

LOG = logging.getLogger(__name__)

MAX_PRIME = 2 ** 31

# Multiplication tables are precomputed below this order.
TABLE_LIMIT = 256

# Monic irreducible moduli, coefficients listed from u^0 up to u^n.
BUILTIN_MODULI = {
    4: (2, 2, (1, 1, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    16: (2, 4, (1, 1, 0, 0, 1)),
    32: (2, 5, (1, 0, 1, 0, 0, 1)),
    64: (2, 6, (1, 1, 0, 0, 0, 0, 1)),
    9: (3, 2, (2, 2, 1)),
    27: (3, 3, (1, 2, 0, 1)),
    81: (3, 4, (2, 0, 0, 2, 1)),
    25: (5, 2, (2, 4, 1)),
    49: (7, 2, (3, 6, 1)),
}


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _remainder_mod_p(a, b, p):
    """Remainder of a by the monic b, both coefficient lists over F_p."""
    a = list(a)
    db = len(b) - 1
    for shift in range(len(a) - 1 - db, -1, -1):
        c = a[shift + db]
        if c:
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
    return a[:db]


def _is_irreducible(modulus, p):
    n = len(modulus) - 1
    for degree in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=degree):
            if not any(_remainder_mod_p(modulus, low + (1,), p)):
                LOG.debug('Modulus %(m)s has the factor %(f)s over F_%(p)s',
                          {'m': modulus, 'f': low + (1,), 'p': p})
                return False
    return True


class FieldSpec(object):
    """The finite field F_q given by p, n and a defining modulus."""

    def __init__(self, p, n, modulus=()):
        self.p = p
        self.n = n
        self.modulus = tuple(modulus) if n > 1 else ()
        self.q = p ** n
        self._add_table = None
        self._mul_table = None
        if 1 < n and self.q <= TABLE_LIMIT:
            codes = range(self.q)
            self._add_table = tuple(
                tuple(self._coord_add(a, b) for b in codes) for a in codes)
            self._mul_table = tuple(
                tuple(self._coord_mul(a, b) for b in codes) for a in codes)

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.n, self.modulus) == (other.p, other.n,
                                                  other.modulus)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __str__(self):
        return 'F_%d' % self.q

    def __repr__(self):
        return 'FieldSpec(p=%d, n=%d, modulus=%s)' % (self.p, self.n,
                                                      self.modulus)

    # Coordinates of codes.

    def coordinates(self, a):
        coords = []
        for _ in range(self.n):
            a, c = divmod(a, self.p)
            coords.append(c)
        return tuple(coords)

    def from_coordinates(self, coords):
        code = 0
        for c in reversed(coords):
            code = code * self.p + c % self.p
        return code

    def _coord_add(self, a, b):
        p = self.p
        return self.from_coordinates(
            [(x + y) % p for x, y in zip(self.coordinates(a),
                                         self.coordinates(b))])

    def _coord_mul(self, a, b):
        p = self.p
        x = self.coordinates(a)
        y = self.coordinates(b)
        prod = [0] * (2 * self.n - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        return self.from_coordinates(
            _remainder_mod_p(prod, self.modulus, p))

    # Arithmetic on codes.

    def add(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._coord_add(a, b)

    def neg(self, a):
        if self.n == 1:
            return -a % self.p
        p = self.p
        return self.from_coordinates([-c % p for c in self.coordinates(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._coord_mul(a, b)

    def pow(self, a, e):
        if self.n == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a):
        if not a:
            raise exceptions.DivisionByZero(where=str(self))
        return self.pow(a, self.q - 2)

    def element(self, value):
        """Wrap a code as FqElem."""
        return FqElem(self, value)

    def constant(self, integer):
        """The image of an integer in the prime subfield."""
        return FqElem(self, integer % self.p)

    @property
    def generator(self):
        """The class u of the modulus variable; 1 in a prime field."""
        return FqElem(self, self.p if self.n > 1 else 1)


class FqElem(object):
    """An immutable element of F_q."""

    __slots__ = ('field', 'value')

    def __init__(self, field, value):
        if isinstance(value, FqElem):
            value = value.value
        elif field.n == 1:
            value %= field.p
        elif not 0 <= value < field.q:
            raise common_ex.OutOfRange(name='element code', value=value,
                                       bounds='[0, %d)' % field.q)
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'value', value)

    def __setattr__(self, name, value):
        raise AttributeError('FqElem is immutable')

    @property
    def coeffs(self):
        return self.field.coordinates(self.value)

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise exceptions.FieldMismatch(left=self.field,
                                               right=other.field)
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def inverse(self):
        return FqElem(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * FqElem(self.field, self.field.inv(b))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** -e
        return FqElem(self.field, self.field.pow(self.value, e))

    def __eq__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self.value == b

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def render(self):
        if self.field.n == 1:
            return str(self.value)
        terms = []
        for e, c in reversed(list(enumerate(self.coeffs))):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            mono = 'u' if e == 1 else 'u^%d' % e
            terms.append(mono if c == 1 else '%d*%s' % (c, mono))
        return '+'.join(terms) or '0'

    __str__ = render

    def __repr__(self):
        return 'FqElem(%s, %s)' % (self.field, self.render())


def make_field(p, n=1, modulus=None):
    """Validate p, n and the modulus and return the FieldSpec.

    :param p: the characteristic, a prime not above 2^31
    :param n: the extension degree
    :param modulus: n+1 coefficients of a monic irreducible polynomial
                    over F_p, constant term first; looked up in
                    BUILTIN_MODULI when omitted
    """
    if not 2 <= p <= MAX_PRIME:
        raise common_ex.OutOfRange(name='p', value=p,
                                   bounds='[2, %d]' % MAX_PRIME)
    if not is_prime(p):
        raise exceptions.NotPrime(p=p)
    if n < 1:
        raise common_ex.OutOfRange(name='n', value=n, bounds='n >= 1')
    if n == 1:
        return FieldSpec(p, 1)

    q = p ** n
    if modulus is None:
        if q not in BUILTIN_MODULI:
            raise exceptions.NoBuiltinModulus(q=q)
        modulus = BUILTIN_MODULI[q][2]
    modulus = tuple(modulus)
    if len(modulus) != n + 1 or not all(0 <= c < p for c in modulus):
        raise common_ex.InvalidInput(
            name='modulus', value='%s (need %d coefficients in [0, %d))'
            % (modulus, n + 1, p))
    if modulus[-1] != 1:
        raise common_ex.InvalidInput(name='modulus',
                                     value='%s is not monic' % (modulus,))
    if not _is_irreducible(modulus, p):
        raise exceptions.ReducibleModulus(modulus=modulus, p=p)
    LOG.debug('Built F_%(q)s with modulus %(m)s', {'q': q, 'm': modulus})
    return FieldSpec(p, n, modulus)


def factor_order(q):
    """(p, n) with q = p^n."""
    if q < 2:
        raise exceptions.NotPrimePower(q=q)
    p = 2
    while q % p:
        p += 1
    n = 0
    rest = q
    while rest % p == 0:
        rest //= p
        n += 1
    if rest != 1:
        raise exceptions.NotPrimePower(q=q)
    return p, n


def field_for_order(q, modulus=None):
    """Factor q = p^n and build F_q."""
    p, n = factor_order(q)
    return make_field(p, n, modulus)


def _same_field(a, b):
    if a.field != b.field:
        raise exceptions.FieldMismatch(left=a.field, right=b.field)


def fq_add(a, b):
    _same_field(a, b)
    return a + b


def fq_sub(a, b):
    _same_field(a, b)
    return a - b


def fq_mul(a, b):
    _same_field(a, b)
    return a * b


def fq_neg(a):
    return -a


def fq_inv(a):
    return a.inverse()


def fq_pow(a, e):
    return a ** e


def enumerate_field(spec):
    """All q elements, ordered by code (base-p counter, u^0 fastest)."""
    return [FqElem(spec, code) for code in range(spec.q)]
