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

from carlitz import exceptions
from carlitz.i18n import _


class FieldMismatch(exceptions.CarlitzException):
    msg_fmt = _("Cannot combine elements of %(left)s and %(right)s")


class DivisionByZero(exceptions.CarlitzException, ZeroDivisionError):
    msg_fmt = _("Division by zero in %(where)s")


class NotPrime(exceptions.InvalidInput):
    msg_fmt = _("%(p)s is not a prime")


class NotPrimePower(exceptions.InvalidInput):
    msg_fmt = _("%(q)s is not a prime power")


class ReducibleModulus(exceptions.InvalidInput):
    msg_fmt = _("Modulus %(modulus)s is not irreducible over F_%(p)s")


class NoBuiltinModulus(exceptions.InvalidInput):
    msg_fmt = _("No built-in modulus for q = %(q)s, supply one explicitly")


class NotPolynomial(exceptions.CarlitzException):
    msg_fmt = _("%(value)s is not a polynomial in t")


class NotMonic(exceptions.CarlitzException):
    msg_fmt = _("Divisor %(value)s is not monic of positive degree in X")


class ZeroPolynomial(exceptions.CarlitzException):
    msg_fmt = _("The zero polynomial has no %(what)s")


class ParseError(exceptions.InvalidInput):
    msg_fmt = _("Cannot parse '%(text)s': %(reason)s")
