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

"""The polynomial ring F_q[t].

Coefficients are kept as field codes (see fq_field), constant term first,
with trailing zeros stripped; the zero polynomial is the empty tuple.
"""

import itertools
import re

from carlitz.algebra import exceptions
from carlitz.algebra import fq_field

_ATOM = re.compile(r'^(\d+|[utX](\^\d+)?)$')


def _enclosed(text):
    """Whether one pair of parentheses spans all of text."""
    if not (text.startswith('(') and text.endswith(')')):
        return False
    depth = 0
    for i, ch in enumerate(text):
        depth += {'(': 1, ')': -1}.get(ch, 0)
        if depth == 0 and i < len(text) - 1:
            return False
    return True


def wrap(text):
    """Parenthesize text unless it is an atom or already enclosed."""
    if _ATOM.match(text) or _enclosed(text):
        return text
    return '(%s)' % text


class _Infinity(object):
    """Signed infinity for deg(0) and v_t(0).

    It only compares; arithmetic on it raises TypeError.
    """

    __slots__ = ('sign',)

    def __init__(self, sign):
        self.sign = sign

    def _key(self, other):
        if isinstance(other, _Infinity):
            return other.sign
        if isinstance(other, int):
            return 0
        return None

    def __eq__(self, other):
        return isinstance(other, _Infinity) and other.sign == self.sign

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('inf', self.sign))

    def __lt__(self, other):
        key = self._key(other)
        if key is None:
            return NotImplemented
        return self.sign < key

    def __gt__(self, other):
        key = self._key(other)
        if key is None:
            return NotImplemented
        return self.sign > key

    def __le__(self, other):
        return self == other or self < other

    def __ge__(self, other):
        return self == other or self > other

    def __repr__(self):
        return '+inf' if self.sign > 0 else '-inf'

    __str__ = __repr__


INFINITY = _Infinity(1)
NEG_INFINITY = _Infinity(-1)


def _strip(codes):
    codes = list(codes)
    while codes and not codes[-1]:
        codes.pop()
    return tuple(codes)


class FqPoly(object):
    """An immutable polynomial in t over F_q."""

    __slots__ = ('field', '_c')

    def __init__(self, field, coeffs=()):
        codes = []
        for c in coeffs:
            if isinstance(c, fq_field.FqElem):
                if c.field != field:
                    raise exceptions.FieldMismatch(left=field, right=c.field)
                codes.append(c.value)
            else:
                codes.append(field.constant(c).value)
        self.field = field
        self._c = _strip(codes)

    @classmethod
    def from_codes(cls, field, codes):
        poly = cls.__new__(cls)
        poly.field = field
        poly._c = _strip(codes)
        return poly

    @classmethod
    def zero(cls, field):
        return cls.from_codes(field, ())

    @classmethod
    def one(cls, field):
        return cls.from_codes(field, (1,))

    @classmethod
    def monomial(cls, field, exponent, coeff=1):
        if not isinstance(coeff, fq_field.FqElem):
            coeff = field.constant(coeff)
        return cls.from_codes(field, (0,) * exponent + (coeff.value,))

    @classmethod
    def t(cls, field):
        return cls.from_codes(field, (0, 1))

    @property
    def codes(self):
        return self._c

    @property
    def coeffs(self):
        return tuple(fq_field.FqElem(self.field, c) for c in self._c)

    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INFINITY

    def valuation(self):
        for i, c in enumerate(self._c):
            if c:
                return i
        return INFINITY

    def leading(self):
        if not self._c:
            raise exceptions.ZeroPolynomial(what='leading coefficient')
        return fq_field.FqElem(self.field, self._c[-1])

    def is_monic(self):
        return bool(self._c) and self._c[-1] == 1

    def is_constant(self):
        return len(self._c) <= 1

    def monic(self):
        if not self._c or self._c[-1] == 1:
            return self
        inv = self.field.inv(self._c[-1])
        mul = self.field.mul
        return FqPoly.from_codes(self.field, [mul(c, inv) for c in self._c])

    def scale(self, elem):
        c = self._coerce(elem)
        if c is NotImplemented:
            raise TypeError('cannot scale by %r' % (elem,))
        return self * c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    # Arithmetic.

    def _coerce(self, other):
        if isinstance(other, FqPoly):
            if other.field != self.field:
                raise exceptions.FieldMismatch(left=self.field,
                                               right=other.field)
            return other
        if isinstance(other, fq_field.FqElem):
            if other.field != self.field:
                raise exceptions.FieldMismatch(left=self.field,
                                               right=other.field)
            return FqPoly.from_codes(self.field, (other.value,))
        if isinstance(other, int):
            return FqPoly.from_codes(self.field,
                                     (self.field.constant(other).value,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        codes = list(a)
        for i, y in enumerate(b):
            codes[i] = add(codes[i], y)
        return FqPoly.from_codes(self.field, codes)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return FqPoly.from_codes(self.field, [neg(c) for c in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return FqPoly.zero(self.field)
        field = self.field
        out = [0] * (len(a) + len(b) - 1)
        if field.n == 1:
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            p = field.p
            return FqPoly.from_codes(field, [c % p for c in out])
        add, mul = field.add, field.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return FqPoly.from_codes(field, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError('negative exponent %d for a polynomial' % e)
        result = FqPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            raise exceptions.DivisionByZero(where='F_q[t]')
        field = self.field
        b = other._c
        db = len(b) - 1
        r = list(self._c)
        quot = [0] * max(len(r) - db, 0)
        inv_lc = field.inv(b[-1])
        if field.n == 1:
            p = field.p
            for shift in range(len(r) - 1 - db, -1, -1):
                c = r[shift + db] * inv_lc % p
                if c:
                    quot[shift] = c
                    for i, bi in enumerate(b):
                        r[shift + i] = (r[shift + i] - c * bi) % p
        else:
            mul, sub = field.mul, field.sub
            for shift in range(len(r) - 1 - db, -1, -1):
                c = mul(r[shift + db], inv_lc)
                if c:
                    quot[shift] = c
                    for i, bi in enumerate(b):
                        if bi:
                            r[shift + i] = sub(r[shift + i], mul(c, bi))
        return (FqPoly.from_codes(field, quot),
                FqPoly.from_codes(field, r[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.field, self._c))

    def render(self):
        terms = []
        for e in range(len(self._c) - 1, -1, -1):
            code = self._c[e]
            if not code:
                continue
            text = fq_field.FqElem(self.field, code).render()
            if e == 0:
                terms.append(wrap(text))
                continue
            mono = 't' if e == 1 else 't^%d' % e
            terms.append(mono if code == 1 else '%s*%s' % (wrap(text), mono))
        return ' + '.join(terms) or '0'

    __str__ = render

    def __repr__(self):
        return 'FqPoly(%s, %s)' % (self.field, self.render())


def poly_add(a, b):
    return a + b


def poly_sub(a, b):
    return a - b


def poly_mul(a, b):
    return a * b


def poly_pow(a, e):
    return a ** e


def poly_degree(a):
    return a.degree()


def t_adic_valuation(a):
    return a.valuation()


def poly_divmod(a, b):
    return divmod(a, b)


def poly_gcd(a, b):
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def enumerate_deg_below(spec, s):
    """All q^s polynomials of degree < s in the grouped order.

    The zero polynomial comes first. The rest is grouped by the degree d of
    the lowest nonzero term, d running from s-1 down to 0; inside a group
    the coefficient sequences read from t^(s-1) down to t^0 ascend, each
    coefficient compared by its code.
    """
    result = [FqPoly.zero(spec)]
    for d in range(s - 1, -1, -1):
        for top in itertools.product(range(spec.q), repeat=s - 1 - d):
            for lowest in range(1, spec.q):
                codes = (0,) * d + (lowest,) + tuple(reversed(top))
                result.append(FqPoly.from_codes(spec, codes))
    return result
