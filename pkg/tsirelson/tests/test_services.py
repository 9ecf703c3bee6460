import math
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from tsirelson.certificates import w3_matrix
from tsirelson.exact_algebra import HALF, QSqrt2Scalar
from tsirelson.exceptions import InputError
from tsirelson.scenario import beta_t, tsirelson_point
from tsirelson.services.figures import (
    ALMOST_QUANTUM_RADIUS,
    VIEW_SIZE,
    circle_points,
    layers_svg,
    parse_axes,
    projection_rows,
    slice_layers,
    to_view,
)
from tsirelson.services.serialization import (
    behavior_from_dict,
    behavior_to_dict,
    certificate_from_dict,
    certificate_to_dict,
    expression_from_dict,
    expression_to_dict,
    format_scalar,
    format_value,
)


class ScalarFormatTests(SimpleTestCase):
    def test_format(self):
        self.assertEqual(format_scalar(QSqrt2Scalar(1, -HALF)), "1/1-1/2*s2")
        self.assertEqual(format_scalar(2.0), "2")
        self.assertEqual(format_scalar(0.25), "0.25")

    def test_integral_values(self):
        self.assertEqual(format_value(QSqrt2Scalar(2)), "2")
        self.assertEqual(format_value(QSqrt2Scalar(-3)), "-3")
        self.assertEqual(format_value(QSqrt2Scalar(Fraction(1, 2))), "1/2")
        self.assertEqual(format_value(QSqrt2Scalar(2, 1)), "2/1+1/1*s2")
        self.assertEqual(format_value(2.5), "2.5")
        self.assertEqual(format_scalar(QSqrt2Scalar(0)), "0/1")


class DocumentTests(SimpleTestCase):
    def test_behavior_document(self):
        document = behavior_to_dict(tsirelson_point())
        self.assertEqual(document["kind"], "exact")
        self.assertEqual(document["mA"], ["0/1", "0/1"])
        self.assertEqual(document["K"][1][1], "-1/2*s2")
        self.assertEqual(behavior_from_dict(document), tsirelson_point())

    def test_expression_document(self):
        self.assertEqual(expression_from_dict(expression_to_dict(beta_t())), beta_t())

    def test_certificate_document(self):
        document = certificate_to_dict(w3_matrix())
        self.assertEqual(document["labels"], ["N0", "N2", "N6", "N1", "N5", "N4"])
        certificate = certificate_from_dict(document)
        self.assertEqual(certificate.polys, w3_matrix().polys)
        self.assertTrue(certificate.is_exact)

    def test_default_labels(self):
        document = certificate_to_dict(w3_matrix())
        del document["labels"]
        self.assertEqual(certificate_from_dict(document).basis_labels, [f"K{k}" for k in range(6)])

    def test_malformed_documents(self):
        good = expression_to_dict(beta_t())
        cases = [
            [],
            {**good, "kind": "complex"},
            {**good, "a": ["0/1"]},
            {**good, "c": [["0/1", "0/1"], ["0/1"]]},
            {**good, "a": [0, "0/1"]},
            {**good, "a": ["zero", "0/1"]},
            {"kind": "float", "a": [True, 0], "b": [0, 0], "c": [[0, 0], [0, 0]]},
        ]
        for document in cases:
            with self.subTest(document=document):
                with self.assertRaises(InputError):
                    expression_from_dict(document)

    def test_non_finite_float(self):
        document = {"kind": "float", "mA": [float("nan"), 0], "mB": [0, 0], "K": [[0, 0], [0, 0]]}
        with self.assertRaises(InputError):
            behavior_from_dict(document)

    def test_malformed_certificates(self):
        document = certificate_to_dict(w3_matrix())
        with self.assertRaises(InputError):
            certificate_from_dict({**document, "basis": []})
        with self.assertRaises(InputError):
            certificate_from_dict({**document, "W": document["W"][:5]})
        with self.assertRaises(InputError):
            certificate_from_dict({**document, "labels": ["N0"]})


class FigureTests(SimpleTestCase):
    def test_view_mapping(self):
        np.testing.assert_allclose(to_view(0, 0), (VIEW_SIZE / 2, VIEW_SIZE / 2))
        x, y = to_view(0.35, 0.35)
        self.assertAlmostEqual(x, VIEW_SIZE)
        self.assertAlmostEqual(y, 0.0)

    def test_circle_points(self):
        points = circle_points(ALMOST_QUANTUM_RADIUS)
        self.assertEqual(len(points), 64)
        np.testing.assert_allclose(np.hypot(*np.array(points).T), ALMOST_QUANTUM_RADIUS)

    def test_layers(self):
        self.assertEqual([layer.name for layer in slice_layers()], ["octagon", "second_order", "almost_quantum", "chsh"])
        self.assertAlmostEqual(ALMOST_QUANTUM_RADIUS, 1 / (4 * math.sqrt(2)))

    def test_svg(self):
        text = layers_svg(slice_layers())
        self.assertTrue(text.startswith("<svg"))
        self.assertIn('viewBox="0 0 1000 1000"', text)
        self.assertEqual(text.count("<g id="), 4)

    def test_axes(self):
        axes = parse_axes("K00, K11, mA0")
        self.assertEqual([axis.vector().index(1) for axis in axes], [4, 7, 0])
        with self.assertRaises(InputError):
            parse_axes("K00,K11")

    def test_projection(self):
        rows = projection_rows(parse_axes("K00,K11,mA0"), 3, seed=2)
        self.assertEqual(len(rows), 3 + 16 + 1)
        self.assertEqual(rows[-1][0], "tsirelson")
        np.testing.assert_allclose(rows[-1][1:], [2 ** -0.5, -(2 ** -0.5), 0.0], atol=1e-15)
        for _, *coordinates in rows:
            self.assertTrue(all(-1 - 1e-12 <= c <= 1 + 1e-12 for c in coordinates))
        with self.assertRaises(InputError):
            projection_rows(parse_axes("K00,K11,mA0"), -1, seed=2)
