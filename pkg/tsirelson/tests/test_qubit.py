import math

import numpy as np
from django.test import SimpleTestCase

from tsirelson.optimize import appendix_d_check, face_scan, qubit_max
from tsirelson.optimize.face import TSIRELSON_LABEL, vertex_label
from tsirelson.scenario import BellExpression, beta_t, chsh, tsirelson_point
from tsirelson.slices import EXPOSING_VERTICES


class QubitMaxTests(SimpleTestCase):
    def test_chsh(self):
        result = qubit_max(chsh(), restarts=50, seed=0)
        self.assertAlmostEqual(result.value, 2 * math.sqrt(2), delta=1e-9)
        self.assertLessEqual(result.best.behavior.distance(tsirelson_point()), 1e-6)

    def test_beta_t(self):
        self.assertAlmostEqual(qubit_max(beta_t(), restarts=50, seed=0).value, 1.0, delta=1e-9)

    def test_single_correlator(self):
        beta = BellExpression([0, 0, 0, 0, 1, 0, 0, 0])
        self.assertAlmostEqual(qubit_max(beta, restarts=50, seed=0).value, 1.0, delta=1e-9)

    def test_deterministic_for_a_seed(self):
        first = qubit_max(beta_t(), restarts=50, seed=3)
        second = qubit_max(beta_t(), restarts=50, seed=3)
        self.assertEqual(first.value, second.value)
        self.assertEqual([m.params for m in first.maximizers], [m.params for m in second.maximizers])

    def test_restart_floor(self):
        with self.assertRaises(ValueError):
            qubit_max(chsh(), restarts=10)


class FaceScanTests(SimpleTestCase):
    def test_beta_t_face(self):
        report = face_scan(beta_t(), restarts=50, seed=0)
        expected = {TSIRELSON_LABEL, *(vertex_label(idx) for idx in EXPOSING_VERTICES)}
        self.assertEqual(set(report.labels), expected)
        self.assertEqual(len(report.clusters), 3)
        self.assertEqual(report.labels[0], TSIRELSON_LABEL)
        self.assertAlmostEqual(report.value, 1.0, delta=1e-9)

    def test_chsh_face(self):
        report = face_scan(chsh(), restarts=50, seed=0)
        self.assertEqual(report.labels, [TSIRELSON_LABEL])

    def test_vertex_label(self):
        self.assertEqual(vertex_label((-1, 1, 1, -1)), "L(-1,+1,+1,-1)")


class NullifierIdentityTests(SimpleTestCase):
    def test_closed_forms_at_random_realizations(self):
        rng = np.random.default_rng(11)
        for params in rng.uniform(-math.pi, math.pi, size=(25, 5)):
            report = appendix_d_check(params)
            self.assertLessEqual(report.max_closed_form_deviation, 1e-12)
            self.assertLessEqual(report.combination_deviation, 1e-12)

    def test_maximizers_of_beta_t(self):
        for maximizer in qubit_max(beta_t(), restarts=50, seed=0).maximizers:
            report = appendix_d_check(maximizer.params)
            self.assertLessEqual(report.max_closed_form_deviation, 1e-12)
            self.assertLessEqual(abs(report.stationarity), 1e-6)
            self.assertLessEqual(abs(report.c2theta_sb0), 1e-6)
