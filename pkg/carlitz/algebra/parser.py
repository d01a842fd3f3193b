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

"""Expression grammar shared by every value type.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') INTEGER)?
    atom   := INTEGER | 'u' | 't' | 'X' | '(' expr ')'

Every expression is evaluated in F_q(t)[X] and then narrowed to the
requested type. The output of any render() method parses back to the same
value.
"""

import re

from oslo_log import log as logging

from carlitz.algebra import exceptions
from carlitz.algebra import fq_field
from carlitz.algebra import fq_poly
from carlitz.algebra import xpoly

LOG = logging.getLogger(__name__)

_TOKEN = re.compile(r'\s*(?:(\d+)|(\*\*|[-+*/^()])|([utX]))')

INT, OP, SYMBOL, END = 'int', 'op', 'symbol', 'end'


def tokenize(text):
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match:
            raise exceptions.ParseError(
                text=text, reason='unexpected character %r at offset %d'
                % (stripped[pos:].lstrip()[:1], pos))
        number, op, symbol = match.groups()
        if number is not None:
            tokens.append((INT, int(number)))
        elif op is not None:
            tokens.append((OP, '^' if op == '**' else op))
        else:
            tokens.append((SYMBOL, symbol))
        pos = match.end()
    tokens.append((END, None))
    return tokens


class Parser(object):
    """Recursive descent evaluator over one field.

    :param spec: the FieldSpec all literals live in
    :param aliases: optional symbol renaming applied before evaluation,
                    e.g. {'u': 't'} to read a modulus over F_p
    """

    def __init__(self, spec, aliases=None):
        self.spec = spec
        self.aliases = aliases or {}

    def parse(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        if self.tokens[0][0] == END:
            self._fail('empty expression')
        value = self._expr()
        if self._peek()[0] != END:
            self._fail('unexpected %r' % (self._peek()[1],))
        return value

    def _fail(self, reason):
        raise exceptions.ParseError(text=self.text, reason=reason)

    def _peek(self):
        return self.tokens[self.pos]

    def _next(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _accept(self, *ops):
        kind, value = self._peek()
        if kind == OP and value in ops:
            self.pos += 1
            return value
        return None

    def _expr(self):
        value = self._term()
        while True:
            op = self._accept('+', '-')
            if op is None:
                return value
            rhs = self._term()
            value = value + rhs if op == '+' else value - rhs

    def _term(self):
        value = self._unary()
        while True:
            op = self._accept('*', '/')
            if op is None:
                return value
            rhs = self._unary()
            if op == '*':
                value = value * rhs
                continue
            if rhs.degree() != 0:
                if not rhs:
                    self._fail('division by zero')
                self._fail('division by an expression containing X')
            value = value / rhs.leading()

    def _unary(self):
        op = self._accept('+', '-')
        if op == '-':
            return -self._unary()
        if op == '+':
            return self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        if self._accept('^') is None:
            return base
        kind, exponent = self._next()
        if kind != INT:
            self._fail('exponent must be a non-negative integer')
        return base ** exponent

    def _atom(self):
        kind, value = self._next()
        if kind == INT:
            return xpoly.XPoly.constant(self.spec, value)
        if kind == SYMBOL:
            name = self.aliases.get(value, value)
            if name is None:
                self._fail('symbol %s is not allowed here' % value)
            return self._symbol(name)
        if kind == OP and value == '(':
            inner = self._expr()
            if self._accept(')') is None:
                self._fail('missing closing parenthesis')
            return inner
        self._fail('unexpected %s' % ('end of input' if kind == END
                                       else repr(value)))

    def _symbol(self, name):
        if name == 'X':
            return xpoly.XPoly.x(self.spec)
        if name == 't':
            return xpoly.XPoly.constant(self.spec,
                                        fq_poly.FqPoly.t(self.spec))
        if self.spec.n == 1:
            self._fail('u is undefined over the prime field %s' % self.spec)
        return xpoly.XPoly.constant(self.spec, self.spec.generator)


def parse_xpoly(spec, text):
    return Parser(spec).parse(text)


def parse_ratfunc(spec, text):
    value = parse_xpoly(spec, text)
    if value.degree() > 0:
        raise exceptions.ParseError(text=text,
                                    reason='X is not allowed here')
    return value.coefficient(0)


def parse_poly(spec, text):
    value = parse_ratfunc(spec, text)
    if not value.is_polynomial():
        raise exceptions.ParseError(text=text,
                                    reason='not a polynomial in t')
    return value.as_polynomial()


def parse_fq(spec, text):
    value = parse_poly(spec, text)
    if not value.is_constant():
        raise exceptions.ParseError(text=text,
                                    reason='not an element of %s' % spec)
    return value.coeffs[0] if value else spec.element(0)


def parse_modulus(p, text):
    """Read a polynomial in u over F_p, coefficients from u^0 upwards."""
    prime = fq_field.make_field(p)
    poly = Parser(prime, aliases={'u': 't', 't': None}).parse(text)
    if poly.degree() > 0 or not poly.coefficient(0).is_polynomial():
        raise exceptions.ParseError(text=text,
                                    reason='not a polynomial in u')
    codes = poly.coefficient(0).as_polynomial().codes
    LOG.debug('Parsed modulus %(text)s as %(codes)s',
              {'text': text, 'codes': codes})
    return codes
