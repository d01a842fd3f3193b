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

"""Univariate polynomials in X over F_q(t), the ambient ring of Int."""

from carlitz.algebra import exceptions
from carlitz.algebra import fq_field
from carlitz.algebra import fq_poly
from carlitz.algebra import fq_ratfunc

RatFunc = fq_ratfunc.RatFunc


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _as_ratfunc(field, value):
    if isinstance(value, RatFunc):
        if value.field != field:
            raise exceptions.FieldMismatch(left=field, right=value.field)
        return value
    if isinstance(value, (fq_poly.FqPoly, fq_field.FqElem, int)):
        return RatFunc.one(field) * value
    raise TypeError('cannot use %r as a coefficient in %s(t)'
                    % (value, field))


class XPoly(object):
    """An immutable polynomial sum_e c_e X^e with c_e in F_q(t)."""

    __slots__ = ('field', '_c')

    def __init__(self, field, coeffs=()):
        self.field = field
        self._c = _strip(_as_ratfunc(field, c) for c in coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, [RatFunc.one(field)])

    @classmethod
    def x(cls, field):
        return cls(field, [RatFunc.zero(field), RatFunc.one(field)])

    @classmethod
    def constant(cls, field, value):
        return cls(field, [value])

    @property
    def coeffs(self):
        return self._c

    def coefficient(self, e):
        if 0 <= e < len(self._c):
            return self._c[e]
        return RatFunc.zero(self.field)

    def degree(self):
        return len(self._c) - 1 if self._c else fq_poly.NEG_INFINITY

    def leading(self):
        if not self._c:
            raise exceptions.ZeroPolynomial(what='leading coefficient')
        return self._c[-1]

    def is_monic(self):
        return bool(self._c) and self._c[-1] == 1

    def has_polynomial_coefficients(self):
        return all(c.is_polynomial() for c in self._c)

    def __bool__(self):
        return bool(self._c)

    def _coerce(self, other):
        if isinstance(other, XPoly):
            if other.field != self.field:
                raise exceptions.FieldMismatch(left=self.field,
                                               right=other.field)
            return other
        if isinstance(other, (RatFunc, fq_poly.FqPoly, fq_field.FqElem,
                              int)):
            return XPoly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        coeffs = list(a)
        for i, c in enumerate(b):
            coeffs[i] = coeffs[i] + c
        return XPoly(self.field, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return XPoly(self.field, [-c for c in self._c])

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
            return XPoly.zero(self.field)
        out = [RatFunc.zero(self.field)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return XPoly(self.field, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar of F_q(t)."""
        if isinstance(other, XPoly):
            if other.degree() != 0:
                return NotImplemented
            other = other.leading()
        inv = _as_ratfunc(self.field, other).inverse()
        return XPoly(self.field, [c * inv for c in self._c])

    def __pow__(self, m):
        if m < 0:
            raise ValueError('negative exponent %d for a polynomial' % m)
        result = XPoly.one(self.field)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def evaluate(self, a):
        a = _as_ratfunc(self.field, a)
        acc = RatFunc.zero(self.field)
        for c in reversed(self._c):
            acc = acc * a + c
        return acc

    __call__ = evaluate

    def divmod_monic(self, divisor):
        d = self._coerce(divisor)
        if d is NotImplemented or not d.is_monic() or d.degree() < 1:
            raise exceptions.NotMonic(
                value=d.render() if d is not NotImplemented else repr(divisor))
        dd = d.degree()
        rem = list(self._c)
        quot = [RatFunc.zero(self.field)] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd]
            if not c:
                continue
            quot[shift] = c
            for i, di in enumerate(d._c):
                if di:
                    rem[shift + i] = rem[shift + i] - c * di
        return XPoly(self.field, quot), XPoly(self.field, rem[:dd])

    def common_denominator(self):
        """Monic lcm of the coefficient denominators."""
        lcm = fq_poly.FqPoly.one(self.field)
        for c in self._c:
            if not c.den.is_constant():
                lcm = lcm * c.den // fq_poly.poly_gcd(lcm, c.den)
        return lcm

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
            c = self._c[e]
            if not c:
                continue
            text = fq_poly.wrap(c.render())
            if e == 0:
                terms.append(text)
                continue
            mono = 'X' if e == 1 else 'X^%d' % e
            terms.append(mono if c == 1 else '%s*%s' % (text, mono))
        return ' + '.join(terms) or '0'

    __str__ = render

    def render_fraction(self):
        """Render as (N)/(D) with D the common denominator."""
        den = self.common_denominator()
        if den.is_constant():
            return self.render()
        numerator = self * den
        return '%s/%s' % (fq_poly.wrap(numerator.render()),
                          fq_poly.wrap(den.render()))

    def __repr__(self):
        return 'XPoly(%s, %s)' % (self.field, self.render())


def xp_add(a, b):
    return a + b


def xp_sub(a, b):
    return a - b


def xp_mul(a, b):
    return a * b


def xp_pow(a, m):
    return a ** m


def xp_eval(f, a):
    return f.evaluate(a)


def xp_degree(f):
    return f.degree()


def xp_leading(f):
    return f.leading()


def xp_divmod_monic(f, d):
    return f.divmod_monic(d)
