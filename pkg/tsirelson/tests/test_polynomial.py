from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from tsirelson.exact_algebra import INV_SQRT2, ONE, SQRT2, UNIT, A, B, NCMonomial, NCPolynomial, QSqrt2Scalar
from tsirelson.exceptions import InputError
from tsirelson.scenario import SYMMETRY_MAP


class MonomialTests(SimpleTestCase):
    def test_normal_form(self):
        self.assertEqual(NCMonomial.reduced((0, 0, 1), (1, 1)), NCMonomial((1,), ()))
        self.assertEqual(NCMonomial.parse("A0B1B0"), NCMonomial((0,), (1, 0)))
        self.assertEqual(NCMonomial.parse("1"), UNIT)
        self.assertEqual(NCMonomial.parse("A0A0"), UNIT)

    def test_adjoint_and_canonical(self):
        monomial = NCMonomial((0, 1), (1, 0))
        self.assertEqual(monomial.adjoint(), NCMonomial((1, 0), (0, 1)))
        self.assertEqual(monomial.canonical(), monomial)
        self.assertEqual(monomial.adjoint().canonical(), monomial)

    def test_malformed_word(self):
        for word in ["A2", "C0", "A0b1", ""]:
            with self.subTest(word=word):
                with self.assertRaises(InputError):
                    NCMonomial.parse(word)


class PolynomialAlgebraTests(SimpleTestCase):
    def test_involution_and_commutation(self):
        self.assertEqual(A(0) * A(0), NCPolynomial.constant(1))
        self.assertEqual(B(1) * B(1), NCPolynomial.constant(1))
        self.assertEqual(A(0) * B(0), B(0) * A(0))
        self.assertNotEqual(A(0) * A(1), A(1) * A(0))

    def test_adjoint_reverses_words(self):
        poly = A(0) * A(1) * B(0) * B(1)
        self.assertEqual(poly.adjoint(), A(1) * A(0) * B(1) * B(0))
        self.assertFalse((A(0) * A(1)).is_hermitian())
        self.assertTrue((A(0) * A(1) + A(1) * A(0)).is_hermitian())

    def test_cancellation_drops_terms(self):
        poly = A(0) + B(0) - A(0)
        self.assertEqual(poly, B(0))
        self.assertTrue((A(0) - A(0)).is_zero())

    def test_exact_coefficients(self):
        g = (A(0) + A(1)).scale(INV_SQRT2)
        square = g * g
        # g^2 = 1 + (A0 A1 + A1 A0)/2
        self.assertEqual(square.coefficient(UNIT), ONE)
        self.assertEqual(square.coefficient(NCMonomial((0, 1), ())), QSqrt2Scalar(Fraction(1, 2)))
        self.assertTrue(square.is_exact())
        self.assertEqual(square.degree(), 2)

    def test_substitute(self):
        image = (A(0) * B(1)).substitute(SYMMETRY_MAP)
        # A0 -> -B1 and B1 -> A1
        self.assertEqual(image, -(A(1) * B(1)))
        self.assertEqual(A(1).substitute(SYMMETRY_MAP), -B(0))

    def test_float_coefficients(self):
        poly = A(0).scale(0.25) + NCPolynomial.constant(SQRT2)
        self.assertFalse(poly.is_exact())
        self.assertEqual(poly.coefficient(NCMonomial((0,), ())), 0.25)


class PolynomialTextTests(SimpleTestCase):
    def test_parse(self):
        poly = NCPolynomial.parse("1/1*A0B0B1 - 1/2*s2*B0")
        self.assertEqual(poly, A(0) * B(0) * B(1) - B(0).scale(INV_SQRT2))

    def test_str_orders_by_degree(self):
        poly = A(0) * B(0) * B(1) - B(0).scale(INV_SQRT2)
        self.assertEqual(str(poly), "-1/2*s2*B0 + 1/1*A0B0B1")
        self.assertEqual(str(NCPolynomial()), "0")
        self.assertEqual(str(NCPolynomial.constant(1) - A(1)), "1/1*1 - 1/1*A1")

    def test_round_trip(self):
        g = (A(0) + A(1)).scale(INV_SQRT2)
        polys = [
            NCPolynomial(),
            g - B(0),
            NCPolynomial.constant(1) - g * B(0),
            B(1) * (NCPolynomial.constant(1) - g * B(0)),
            A(0).scale(0.1) - B(1).scale(1e-17),
        ]
        for poly in polys:
            with self.subTest(poly=str(poly)):
                self.assertEqual(NCPolynomial.parse(str(poly)), poly)

    def test_malformed(self):
        for text in ["A0", "1/2*C0", "1/2*A0 + ", "x*A0"]:
            with self.subTest(text=text):
                with self.assertRaises(InputError):
                    NCPolynomial.parse(text)


class PolynomialLawTests(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(31)

    def random_poly(self):
        poly = NCPolynomial()
        for _ in range(int(self.rng.integers(1, 5))):
            length = int(self.rng.integers(0, 4))
            letters = [(str(self.rng.choice(["A", "B"])), int(self.rng.integers(0, 2))) for _ in range(length)]
            monomial = NCMonomial.reduced([i for p, i in letters if p == "A"], [i for p, i in letters if p == "B"])
            rational = Fraction(int(self.rng.integers(-5, 6)), int(self.rng.integers(1, 5)))
            coefficient = QSqrt2Scalar(rational, int(self.rng.integers(-2, 3)))
            poly = poly + NCPolynomial.from_monomial(monomial, coefficient)
        return poly

    def assertNormalForm(self, poly):
        for monomial, coefficient in poly.terms.items():
            self.assertEqual(NCMonomial.reduced(monomial.a, monomial.b), monomial)
            self.assertFalse(coefficient.is_zero())
        self.assertEqual(NCPolynomial(poly.terms), poly)
        self.assertEqual(NCPolynomial.parse(str(poly)), poly)
        self.assertEqual(str(NCPolynomial.parse(str(poly))), str(poly))

    def test_adjoint_is_anti_multiplicative(self):
        for _ in range(200):
            f, g = self.random_poly(), self.random_poly()
            self.assertEqual((f * g).adjoint(), g.adjoint() * f.adjoint())
            self.assertEqual(f.adjoint().adjoint(), f)

    def test_product_is_associative(self):
        for _ in range(200):
            f, g, h = self.random_poly(), self.random_poly(), self.random_poly()
            self.assertEqual((f * g) * h, f * (g * h))

    def test_products_stay_in_normal_form(self):
        for _ in range(200):
            f, g = self.random_poly(), self.random_poly()
            with self.subTest(f=str(f), g=str(g)):
                self.assertNormalForm(f)
                self.assertNormalForm(f * g)
                self.assertNormalForm(f * g - g * f)
