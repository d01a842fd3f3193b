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

import itertools

import ddt
from hypothesis import given
from hypothesis import strategies as st

from carlitz.algebra import fq_poly
from carlitz.algebra import fq_ratfunc
from carlitz.algebra import xpoly
from carlitz import basis
from carlitz import exceptions
from carlitz import tests


def poly(q, *codes):
    return fq_poly.FqPoly.from_codes(tests.field(q), codes)


@st.composite
def xpolys(draw):
    spec = tests.field(draw(st.sampled_from([2, 3])))
    codes = st.lists(st.integers(min_value=0, max_value=spec.q - 1),
                     max_size=3)
    coeffs = []
    for _ in range(draw(st.integers(min_value=0, max_value=9))):
        num = fq_poly.FqPoly.from_codes(spec, draw(codes))
        den = fq_poly.FqPoly.from_codes(spec, draw(codes)) or 1
        coeffs.append(fq_ratfunc.RatFunc(num, den))
    return xpoly.XPoly(spec, coeffs)


@ddt.ddt
class DigitsTestCase(tests.TestCase):

    @ddt.data((7, 2, [1, 1, 1]), (9, 3, [0, 0, 1]), (0, 5, []),
              (5, 3, [2, 1]), (6, 2, [0, 1, 1]))
    @ddt.unpack
    def test_digits(self, k, q, expected):
        vector = basis.digits(k, q)
        self.assertEqual(expected, list(vector))
        self.assertEqual(k, vector.value)

    def test_bad_base(self):
        self.assertRaises(exceptions.BadBase, basis.digits, 3, 1)
        self.assertRaises(exceptions.OutOfRange, basis.digits, -1, 2)

    @ddt.data((2, 8, 3), (3, 9, 2), (3, 1, 0), (2, 6, None), (4, 2, None),
              (5, 0, None))
    @ddt.unpack
    def test_power_exponent(self, q, k, expected):
        self.assertEqual(expected, basis.power_exponent(q, k))


@ddt.ddt
class CarlitzBasisTestCase(tests.TestCase):

    def test_psi(self):
        f2 = tests.field(2)
        x = xpoly.XPoly.x(f2)
        self.assertEqual(x, basis.psi(f2, 0))
        self.assertEqual('X^2 + X', basis.psi(f2, 1).render())

    @ddt.data(2, 3, 4, 5, 7, 8, 9)
    def test_psi_1_is_x_q_minus_x(self, q):
        spec = tests.field(q)
        x = xpoly.XPoly.x(spec)
        self.assertEqual(x ** q - x, basis.psi(spec, 1))

    def test_psi_is_additive(self):
        for q, m in [(2, 2), (3, 1), (3, 2), (4, 1)]:
            spec = tests.field(q)
            psi = basis.psi(spec, m)
            values = fq_poly.enumerate_deg_below(spec, 2)
            for a, b in itertools.product(values, repeat=2):
                self.assertEqual(psi(a) + psi(b), psi(a + b))

    def test_factorial_factor(self):
        f2 = tests.field(2)
        self.assertEqual(poly(2, 1), basis.carlitz_factorial_factor(f2, 0))
        self.assertEqual(poly(2, 0, 1, 1),
                         basis.carlitz_factorial_factor(f2, 1))

    @ddt.data(*itertools.product([2, 3], [0, 1, 2, 3]))
    @ddt.unpack
    def test_factorial_factor_degree(self, q, m):
        f_m = basis.carlitz_factorial_factor(tests.field(q), m)
        self.assertEqual(m * q ** m, f_m.degree())
        self.assertTrue(f_m.is_monic())

    def test_small_betas(self):
        for q in (2, 3, 4):
            spec = tests.field(q)
            self.assertEqual(xpoly.XPoly.x(spec), basis.beta(spec, 1))
            self.assertEqual(xpoly.XPoly.one(spec), basis.beta(spec, 0))
        f2 = tests.field(2)
        self.assertEqual('(X^2 + X)/(t^2 + t)',
                         basis.beta(f2, 2).render_fraction())

    def test_g_5(self):
        f2 = tests.field(2)
        t = fq_poly.FqPoly.t(f2)
        self.assertEqual((t ** 4 + t) * (t ** 2 + t) ** 2,
                         basis.g_k(f2, 5))

    def test_size_limit(self):
        f3 = tests.field(3)
        self.override('size_limit', 9)
        self.assertRaises(exceptions.SizeLimit, basis.psi, f3, 3)
        self.assertRaises(exceptions.SizeLimit, basis.beta, f3, 27)
        self.assertEqual(9, basis.psi(f3, 2).degree())
        self.assertRaises(exceptions.SizeLimit, basis.psi, f3, 2, 8)

    @ddt.data(*itertools.product([2, 3], range(11)))
    @ddt.unpack
    def test_degree_and_leading_coefficient(self, q, k):
        spec = tests.field(q)
        b = basis.beta(spec, k)
        self.assertEqual(k, b.degree())
        self.assertEqual(fq_ratfunc.RatFunc(poly(q, 1), basis.g_k(spec, k)),
                         b.leading())
        self.assertTrue(basis.G_k(spec, k).is_monic())

    @ddt.data(*itertools.product([2, 3], range(1, 28)))
    @ddt.unpack
    def test_g_degree(self, q, n):
        self.assertEqual(basis.g_k(tests.field(q), n).degree(),
                         basis.g_degree(q, n))

    @ddt.data(81, 80, 64)
    def test_g_degree_large(self, n):
        for q in (2, 3):
            self.assertEqual(basis.g_k(tests.field(q), n).degree(),
                             basis.g_degree(q, n))

    @ddt.data(*itertools.product([2, 3, 4], [1, 2]))
    @ddt.unpack
    def test_beta_at_t_power(self, q, s):
        spec = tests.field(q)
        t_s = fq_poly.FqPoly.monomial(spec, s)
        self.assertEqual(1, basis.beta(spec, q ** s)(t_s))


@ddt.ddt
class ExpansionTestCase(tests.TestCase):

    def setUp(self):
        super(ExpansionTestCase, self).setUp()
        self.f2 = tests.field(2)
        self.x = xpoly.XPoly.x(self.f2)

    def test_expand_x_squared(self):
        g = basis.expand_g_basis(self.x ** 2)
        self.assertEqual(['0', '1', '1'], g.render())
        b = basis.expand_beta_basis(self.x ** 2)
        self.assertEqual(['0', '1', 't^2 + t'], b.render())
        self.assertEqual(basis.BETA_BASIS, b.basis)

    def test_expand_basis_elements(self):
        for k in range(6):
            g = basis.expand_g_basis(basis.G_k(self.f2, k))
            self.assertEqual([0] * k + [1], list(g))
            b = basis.expand_beta_basis(basis.beta(self.f2, k))
            self.assertEqual([0] * k + [1], list(b))

    def test_expand_zero(self):
        self.assertEqual(0, len(basis.expand_g_basis(
            xpoly.XPoly.zero(self.f2))))

    def test_integer_valued(self):
        self.assertTrue(basis.is_integer_valued(basis.beta(self.f2, 2) ** 2))
        f = self.x ** 2 / poly(2, 0, 1, 1)
        self.assertFalse(basis.is_integer_valued(f))
        self.assertEqual(1, basis.integer_valued_obstruction(f))
        self.assertNotEqual(1, f(1))
        self.assertTrue(basis.is_integer_valued(
            self.x ** 3 * poly(2, 1, 1) + poly(2, 0, 1)))

    @tests.PROPERTIES
    @given(xpolys())
    def test_round_trip(self, f):
        g = basis.expand_g_basis(f)
        self.assertEqual(f, basis.reconstruct(g))
        b = basis.expand_beta_basis(f)
        self.assertEqual(f, basis.reconstruct(b))
        for k, (a_k, b_k) in enumerate(zip(g, b)):
            self.assertEqual(a_k * basis.g_k(f.field, k), b_k)

    @ddt.data(2, 3)
    def test_betas_are_integer_valued_pointwise(self, q):
        spec = tests.field(q)
        points = fq_poly.enumerate_deg_below(spec, 3)
        for k in range(q * q + q + 1):
            b = basis.beta(spec, k)
            pointwise = all(b(f).is_polynomial() for f in points)
            self.assertTrue(pointwise)
            self.assertEqual(pointwise, basis.is_integer_valued(b))


@ddt.ddt
class BinomialTestCase(tests.TestCase):

    def test_examples(self):
        for q in (2, 3, 4):
            spec = tests.field(q)
            self.assertEqual(1, basis.carlitz_binomial(spec, 7, 0))
            t = fq_poly.FqPoly.t(spec)
            self.assertEqual(t ** q - t, basis.carlitz_binomial(spec, q, 1))
            self.assertTrue(basis.binom_is_unit(spec, 5, 5))
        self.assertRaises(exceptions.OutOfRange, basis.carlitz_binomial,
                          tests.field(2), 2, 3)
        self.assertRaises(exceptions.OutOfRange, basis.binom_is_unit,
                          tests.field(2), 2, -1)

    @ddt.data(2, 3)
    def test_unit_criteria(self, q):
        spec = tests.field(q)
        for n in range(82):
            for k in range(n + 1):
                unit = basis.binom_is_unit(spec, n, k)
                additive = basis.digit_additivity(q, n, k)
                degrees = (basis.g_degree(q, n) ==
                           basis.g_degree(q, k) + basis.g_degree(q, n - k))
                if additive:
                    self.assertTrue(unit)
                self.assertEqual(unit, degrees)
                if basis.power_exponent(q, n) is not None:
                    self.assertEqual(unit, additive)

    def test_prime_power_binomials_are_not_units(self):
        for q, s in [(2, 3), (3, 2)]:
            spec = tests.field(q)
            n = q ** s
            for k in range(1, n):
                value = basis.carlitz_binomial(spec, n, k)
                self.assertTrue(value.is_polynomial())
                self.assertFalse(value.is_constant())


@ddt.ddt
class DigitInequalityTestCase(tests.TestCase):

    def test_examples(self):
        self.assertEqual((2, 8, True), basis.lemma_digit_inequality(2, 2, 1))
        self.assertEqual((24, 24, False),
                         basis.lemma_digit_inequality(2, 3, 0))
        self.assertEqual((18, 18, False),
                         basis.lemma_digit_inequality(3, 2, 9))

    def test_out_of_range(self):
        self.assertRaises(exceptions.OutOfRange,
                          basis.lemma_digit_inequality, 2, 2, 5)
        self.assertRaises(exceptions.BadBase,
                          basis.lemma_digit_inequality, 1, 2, 0)

    @ddt.data(*itertools.product([2, 3, 5], [1, 2, 3]))
    @ddt.unpack
    def test_sweep(self, q, s):
        n = q ** s
        for k in range(n + 1):
            lhs, rhs, strict = basis.lemma_digit_inequality(q, s, k)
            self.assertLessEqual(lhs, rhs)
            self.assertEqual(0 < k < n, strict)


@ddt.ddt
class DecompositionTestCase(tests.TestCase):

    @ddt.data((2, 4, [(4, 1)]), (3, 9, [(9, 1)]), (2, 3, [(1, 1), (2, 1)]),
              (3, 5, [(1, 2), (3, 1)]), (2, 6, [(2, 1), (4, 1)]))
    @ddt.unpack
    def test_decompose(self, q, k, expected):
        self.assertEqual(expected, basis.decompose_beta(q, k))

    def test_decompose_needs_positive_k(self):
        self.assertRaises(exceptions.OutOfRange, basis.decompose_beta, 2, 0)

    def test_explicit_products(self):
        f2, f3 = tests.field(2), tests.field(3)
        self.assertEqual(basis.beta(f2, 1) * basis.beta(f2, 2),
                         basis.beta(f2, 3))
        self.assertEqual(basis.beta(f3, 1) ** 2 * basis.beta(f3, 3),
                         basis.beta(f3, 5))

    @ddt.data(*itertools.product([2, 3], range(1, 21)))
    @ddt.unpack
    def test_product_identity(self, q, k):
        self.assertTrue(basis.verify_decomposition(tests.field(q), k))
