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

import ddt
from hypothesis import given
from hypothesis import strategies as st

from carlitz.algebra import exceptions as algebra_ex
from carlitz.algebra import fq_field
from carlitz import exceptions
from carlitz import tests

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81]


@st.composite
def triples(draw, q):
    spec = tests.field(q)
    codes = st.integers(min_value=0, max_value=spec.q - 1)
    return tuple(spec.element(draw(codes)) for _ in range(3))


@ddt.ddt
class MakeFieldTestCase(tests.TestCase):

    def test_prime_field(self):
        spec = fq_field.make_field(3, 1)
        self.assertEqual(3, spec.q)
        self.assertEqual((), spec.modulus)
        self.assertEqual('F_3', str(spec))

    def test_builtin_modulus(self):
        spec = fq_field.make_field(2, 2)
        self.assertEqual((1, 1, 1), spec.modulus)
        self.assertEqual(spec, fq_field.make_field(2, 2))

    def test_reducible_modulus(self):
        self.assertRaises(algebra_ex.ReducibleModulus,
                          fq_field.make_field, 2, 2, (1, 0, 1))

    def test_not_prime(self):
        self.assertRaises(algebra_ex.NotPrime, fq_field.make_field, 4)

    def test_no_builtin_modulus(self):
        self.assertRaises(algebra_ex.NoBuiltinModulus,
                          fq_field.make_field, 2, 7)

    def test_supplied_modulus(self):
        spec = fq_field.make_field(2, 7, (1, 1, 0, 0, 0, 0, 0, 1))
        self.assertEqual(128, spec.q)

    @ddt.data((1, 1, 0), (1, 1), (1, 3, 1))
    def test_malformed_modulus(self, modulus):
        self.assertRaises(exceptions.InvalidInput,
                          fq_field.make_field, 2, 2, modulus)

    @ddt.data((1, 1), (2 ** 31 + 11, 1), (2, 0))
    @ddt.unpack
    def test_out_of_range(self, p, n):
        self.assertRaises(exceptions.OutOfRange, fq_field.make_field, p, n)

    @ddt.data(4, 8, 9, 16, 25, 27, 32, 49, 64, 81)
    def test_builtin_moduli_are_irreducible(self, q):
        p, n, modulus = fq_field.BUILTIN_MODULI[q]
        self.assertEqual(q, p ** n)
        self.assertTrue(fq_field._is_irreducible(modulus, p))

    @ddt.data((9, 3, 2), (7, 7, 1), (64, 2, 6))
    @ddt.unpack
    def test_field_for_order(self, q, p, n):
        spec = fq_field.field_for_order(q)
        self.assertEqual((p, n), (spec.p, spec.n))

    @ddt.data(1, 6, 12, 100)
    def test_not_prime_power(self, q):
        self.assertRaises(algebra_ex.NotPrimePower,
                          fq_field.field_for_order, q)


@ddt.ddt
class ArithmeticTestCase(tests.TestCase):

    def test_examples(self):
        f3, f4, f5 = tests.field(3), tests.field(4), tests.field(5)
        self.assertEqual(f3.element(1),
                         fq_field.fq_add(f3.element(2), f3.element(2)))
        u = f4.generator
        self.assertEqual('u+1', fq_field.fq_mul(u, u).render())
        self.assertEqual(f5.element(1),
                         fq_field.fq_mul(f5.element(4), f5.element(4)))

    def test_inverse(self):
        self.assertEqual(3, fq_field.fq_inv(tests.field(5).element(2)).value)
        self.assertEqual(1, fq_field.fq_inv(tests.field(2).element(1)).value)
        u = tests.field(4).generator
        self.assertEqual('u+1', fq_field.fq_inv(u).render())

    def test_inverse_of_zero(self):
        self.assertRaises(algebra_ex.DivisionByZero,
                          fq_field.fq_inv, tests.field(7).element(0))

    def test_field_mismatch(self):
        self.assertRaises(algebra_ex.FieldMismatch, fq_field.fq_add,
                          tests.field(2).element(1),
                          tests.field(3).element(1))

    def test_code_out_of_range(self):
        self.assertRaises(exceptions.OutOfRange, fq_field.FqElem,
                          tests.field(4), 4)

    def test_integers_map_to_prime_subfield(self):
        f9 = tests.field(9)
        self.assertEqual(f9.element(1), f9.element(2) * 2)
        self.assertEqual(f9.constant(5), f9.element(2))

    def test_immutable(self):
        a = tests.field(3).element(1)
        self.assertRaises(AttributeError, setattr, a, 'value', 2)

    @ddt.data((2, ['0', '1']), (3, ['0', '1', '2']),
              (4, ['0', '1', 'u', 'u+1']))
    @ddt.unpack
    def test_enumerate_field(self, q, rendered):
        self.assertEqual(rendered, [a.render() for a in
                                    fq_field.enumerate_field(tests.field(q))])

    def test_render_extension(self):
        f9 = tests.field(9)
        self.assertEqual('2*u+1',
                         f9.element(f9.from_coordinates((1, 2))).render())
        self.assertEqual('0', f9.element(0).render())

    @ddt.data(*ORDERS)
    def test_multiplicative_group(self, q):
        spec = tests.field(q)
        for a in fq_field.enumerate_field(spec)[1:]:
            self.assertEqual(1, (a ** (q - 1)).value)
            self.assertEqual(spec.element(1), a * a.inverse())

    @ddt.data(*ORDERS)
    def test_field_axioms(self, q):
        @tests.AXIOMS
        @given(triples(q))
        def check(elems):
            a, b, c = elems
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a.field.element(0), a + (-a))
            self.assertEqual(a, (a - b) + b)

        check()
