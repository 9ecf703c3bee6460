import math

import numpy as np
from django.test import SimpleTestCase

from tsirelson.optimize import SDPProblem, moment_structure, npa_bound, qubit_max, solve_sdp
from tsirelson.optimize.sdp import INFEASIBLE, OPTIMAL, UNBOUNDED
from tsirelson.scenario import beta_t, chsh, local_bound, normalized_chsh, symmetry_expr, value_qubit
from tsirelson.slices import expr_from_slice

ALMOST_QUANTUM_RADIUS = 1 / (4 * math.sqrt(2))


class SolveSDPTests(SimpleTestCase):
    def test_two_by_two(self):
        problem = SDPProblem(np.identity(2), [np.array([[0.0, 1.0], [1.0, 0.0]])], np.array([1.0]))
        solution = solve_sdp(problem)
        self.assertEqual(solution.status, OPTIMAL)
        self.assertAlmostEqual(solution.value, 1.0, delta=1e-6)
        self.assertAlmostEqual(float(solution.y[0]), 1.0, delta=1e-6)
        self.assertGreaterEqual(np.linalg.eigvalsh(solution.matrix)[0], -1e-6)

    def test_infeasible(self):
        problem = SDPProblem(-np.identity(2), [np.diag([1.0, -1.0])], np.array([1.0]))
        solution = solve_sdp(problem)
        self.assertEqual(solution.status, INFEASIBLE)
        self.assertEqual(solution.value, -np.inf)

    def test_unbounded(self):
        problem = SDPProblem(np.identity(1), [np.identity(1)], np.array([1.0]))
        solution = solve_sdp(problem)
        self.assertEqual(solution.status, UNBOUNDED)

    def test_malformed_problems(self):
        with self.assertRaises(ValueError):
            SDPProblem(np.identity(2), [np.array([[0.0, 1.0], [0.0, 0.0]])], np.array([1.0]))
        with self.assertRaises(ValueError):
            SDPProblem(np.identity(2), [np.identity(3)], np.array([1.0]))
        with self.assertRaises(ValueError):
            SDPProblem(np.identity(2), [np.identity(2)], np.array([1.0, 2.0]))


class MomentStructureTests(SimpleTestCase):
    def test_sizes(self):
        self.assertEqual([moment_structure(tag).size for tag in ("L1", "L1AB", "L1AB_ABB")], [5, 9, 13])

    def test_unit_diagonal(self):
        structure = moment_structure("L1AB")
        F0, F = structure.sdp_matrices()
        np.testing.assert_array_equal(np.diag(F0), np.ones(9))
        for matrix in F:
            np.testing.assert_array_equal(matrix, matrix.T)
        self.assertEqual(len(set(structure.behavior_indices())), 8)

    def test_unknown_level(self):
        with self.assertRaises(ValueError):
            moment_structure("L7")


class NPABoundTests(SimpleTestCase):
    def test_chsh(self):
        self.assertAlmostEqual(npa_bound(chsh(), "L1"), 2 * math.sqrt(2), delta=1e-5)
        self.assertAlmostEqual(npa_bound(normalized_chsh(), "L1AB"), 1.0, delta=1e-5)

    def test_almost_quantum_circle(self):
        for gamma in (0.0, math.pi / 8, math.pi / 4):
            with self.subTest(gamma=gamma):
                beta = expr_from_slice(ALMOST_QUANTUM_RADIUS * math.cos(gamma), ALMOST_QUANTUM_RADIUS * math.sin(gamma))
                self.assertAlmostEqual(npa_bound(beta, "L1AB"), 1.0, delta=1e-4)

    def test_beta_t_needs_a_larger_level(self):
        self.assertGreater(npa_bound(beta_t(), "L1AB"), 1.001)
        self.assertAlmostEqual(npa_bound(beta_t(), "L1AB_ABB"), 1.0, delta=1e-5)

    def test_levels_tighten(self):
        rng = np.random.default_rng(6)
        expressions = [beta_t(), chsh()] + [expr_from_slice(float(r0), float(r1)) for r0, r1 in rng.uniform(-0.6, 0.6, size=(4, 2))]
        for beta in expressions:
            bounds = [npa_bound(beta, tag) for tag in ("L1", "L1AB", "L1AB_ABB", "L1AB_ABB_AAB")]
            with self.subTest(bounds=bounds):
                for looser, tighter in zip(bounds, bounds[1:]):
                    self.assertGreaterEqual(looser, tighter - 1e-6)

    def test_symmetry_invariance(self):
        beta = expr_from_slice(0.2, -0.1)
        self.assertAlmostEqual(npa_bound(symmetry_expr(beta), "L1AB"), npa_bound(beta, "L1AB"), delta=1e-5)

    def test_bounds_dominate_qubit_values(self):
        rng = np.random.default_rng(5)
        for r0, r1 in rng.uniform(-0.3, 0.3, size=(3, 2)):
            beta = expr_from_slice(float(r0), float(r1))
            lower = qubit_max(beta, restarts=50, seed=1).value
            self.assertGreaterEqual(npa_bound(beta, "L1AB"), lower - 1e-6)

    def test_bounds_dominate_sampled_behaviors(self):
        rng = np.random.default_rng(7)
        for r0, r1 in rng.uniform(-0.8, 0.8, size=(100, 2)):
            beta = expr_from_slice(float(r0), float(r1))
            samples = rng.uniform(0, 2 * math.pi, size=(40, 5))
            lower = max(local_bound(beta)[0], max(value_qubit(beta, params) for params in samples))
            with self.subTest(r0=r0, r1=r1):
                self.assertGreaterEqual(npa_bound(beta, "L1AB"), lower - 1e-6)
