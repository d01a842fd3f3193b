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

from carlitz.algebra import exceptions
from carlitz.algebra import fq_field
from carlitz.algebra import fq_poly


class RatFunc(object):
    """A reduced fraction num/den in F_q(t).

    Canonical form: den is monic, gcd(num, den) = 1 and zero is 0/1, so two
    equal values always have identical numerators and denominators.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num, den=None):
        field = num.field
        if den is None:
            den = fq_poly.FqPoly.one(field)
        elif not isinstance(den, fq_poly.FqPoly):
            den = fq_poly.FqPoly.one(field) * den
        if den.field != field:
            raise exceptions.FieldMismatch(left=field, right=den.field)
        if not den:
            raise exceptions.DivisionByZero(where='F_q(t)')
        if not num:
            den = fq_poly.FqPoly.one(field)
        elif not den.is_constant():
            g = fq_poly.poly_gcd(num, den)
            if not g.is_constant():
                num = num // g
                den = den // g
        if den.codes[-1] != 1:
            inv = den.leading().inverse()
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def _canonical(cls, num, den):
        rf = cls.__new__(cls)
        rf.num = num
        rf.den = den
        return rf

    @classmethod
    def zero(cls, field):
        return cls._canonical(fq_poly.FqPoly.zero(field),
                              fq_poly.FqPoly.one(field))

    @classmethod
    def one(cls, field):
        return cls.from_poly(fq_poly.FqPoly.one(field))

    @classmethod
    def from_poly(cls, poly):
        return cls._canonical(poly, fq_poly.FqPoly.one(poly.field))

    @property
    def field(self):
        return self.num.field

    def valuation(self):
        if not self.num:
            return fq_poly.INFINITY
        return self.num.valuation() - self.den.valuation()

    def is_polynomial(self):
        return self.den.is_constant()

    def as_polynomial(self):
        if not self.is_polynomial():
            raise exceptions.NotPolynomial(value=self.render())
        return self.num

    def is_constant(self):
        return self.den.is_constant() and self.num.is_constant()

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise exceptions.FieldMismatch(left=self.field,
                                               right=other.field)
            return other
        if isinstance(other, (fq_poly.FqPoly, fq_field.FqElem, int)):
            poly = fq_poly.FqPoly.one(self.field) * other
            return RatFunc.from_poly(poly)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.den.is_constant():
                return RatFunc.from_poly(self.num + other.num)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._canonical(-self.num, self.den)

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
        if self.den.is_constant() and other.den.is_constant():
            return RatFunc.from_poly(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise exceptions.DivisionByZero(where='F_q(t)')
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** -e
        return RatFunc._canonical(self.num ** e, self.den ** e)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.num, self.den))

    def render(self):
        if self.den.is_constant():
            return self.num.render()
        return '%s/%s' % (fq_poly.wrap(self.num.render()),
                          fq_poly.wrap(self.den.render()))

    __str__ = render

    def __repr__(self):
        return 'RatFunc(%s, %s)' % (self.field, self.render())


def rf_add(a, b):
    return a + b


def rf_sub(a, b):
    return a - b


def rf_mul(a, b):
    return a * b


def rf_div(a, b):
    return a / b


def rf_valuation(a):
    return a.valuation()


def rf_is_polynomial(a):
    return a.is_polynomial()


def rf_as_polynomial(a):
    return a.as_polynomial()
