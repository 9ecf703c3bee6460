from fractions import Fraction

from django.test import SimpleTestCase

from tsirelson.optimize import dual_membership
from tsirelson.optimize.membership import INSIDE, OUTSIDE
from tsirelson.scenario import beta_t, tsirelson_point
from tsirelson.slices import expr_from_slice


class DualMembershipTests(SimpleTestCase):
    def test_beta_t_is_inside(self):
        result = dual_membership(beta_t(), restarts=50, seed=0)
        self.assertEqual(result.verdict, INSIDE)
        self.assertEqual(result.level, "L1AB_ABB")
        self.assertIsNotNone(result.certificate)

    def test_outside_the_octagon(self):
        result = dual_membership(expr_from_slice(Fraction(3, 10), 0), restarts=50, seed=0)
        self.assertEqual(result.verdict, OUTSIDE)
        self.assertEqual(result.witness_source, "local")
        self.assertGreater(result.witness_value, 1)

    def test_scaled_beyond_the_tsirelson_point(self):
        result = dual_membership(beta_t().scale(2), restarts=50, seed=0)
        self.assertEqual(result.verdict, OUTSIDE)
        self.assertEqual(result.witness_source, "P_T")
        self.assertEqual(result.witness, tsirelson_point())
        self.assertAlmostEqual(result.witness_value, 2.0)

    def test_unknown_level(self):
        with self.assertRaises(ValueError):
            dual_membership(beta_t(), levels=["L9"])
