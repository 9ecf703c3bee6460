from dataclasses import replace

import numpy as np
from django.test import SimpleTestCase

from tsirelson.certificates import (
    LEVEL_TAGS,
    SOSCertificate,
    coordinates_in,
    expectation_float,
    gram_expand,
    monomials_of_level,
    nullifier_basis,
    paper_generating_sequence,
    sos_terms,
    state_action_exact,
    state_action_float,
    verify_certificate,
    w3_eigenvalues,
    w3_matrix,
)
from tsirelson.exact_algebra import HALF, INV_SQRT2, ONE, SQRT2, ZERO, A, B, ExactMatrix, NCMonomial, NCPolynomial
from tsirelson.scenario import TSIRELSON_PARAMS, beta_t, normalized_chsh


class LevelTests(SimpleTestCase):
    def test_sizes(self):
        self.assertEqual([monomials_of_level(tag).size for tag in LEVEL_TAGS], [5, 9, 13, 17])

    def test_levels_are_nested(self):
        for smaller, larger in zip(LEVEL_TAGS, LEVEL_TAGS[1:]):
            self.assertTrue(set(monomials_of_level(smaller).monomials) <= set(monomials_of_level(larger).monomials))

    def test_unknown_level(self):
        with self.assertRaises(ValueError):
            monomials_of_level("L2")


class StateActionTests(SimpleTestCase):
    def test_single_letters(self):
        self.assertEqual(state_action_exact(A(0)), [HALF, HALF, HALF, -HALF])
        self.assertEqual(state_action_exact(NCPolynomial.constant(1)), [INV_SQRT2, ZERO, ZERO, INV_SQRT2])

    def test_float_action_agrees(self):
        for poly in (A(0), A(1) * B(1), B(0) * B(1), A(0) * A(1) * B(0) - B(1).scale(SQRT2)):
            exact = [float(x) for x in state_action_exact(poly)]
            np.testing.assert_allclose(state_action_float(poly, TSIRELSON_PARAMS), exact, atol=1e-14)

    def test_expectation(self):
        value = expectation_float(normalized_chsh().as_polynomial(), TSIRELSON_PARAMS)
        self.assertAlmostEqual(value, 1.0, delta=1e-12)


class NullifierTests(SimpleTestCase):
    def test_dimensions(self):
        self.assertEqual([nullifier_basis(tag).dimension for tag in LEVEL_TAGS], [2, 5, 9, 13])

    def test_nullifiers_annihilate_phi_plus(self):
        for tag in LEVEL_TAGS:
            for poly in nullifier_basis(tag).polys:
                self.assertTrue(all(x.is_zero() for x in state_action_exact(poly)))

    def test_generating_sequence(self):
        sequence = paper_generating_sequence()
        level = monomials_of_level("L1AB_ABB")
        self.assertEqual(len(sequence), 9)
        for poly in sequence:
            self.assertTrue(set(poly.monomials()) <= set(level.monomials))
            self.assertTrue(all(x.is_zero() for x in state_action_exact(poly)))
        self.assertEqual(coordinates_in(sequence, level.monomials).rank(), 9)
        combined = sequence + nullifier_basis(level).polys
        self.assertEqual(coordinates_in(combined, level.monomials).rank(), 9)


class GramExpansionTests(SimpleTestCase):
    def test_single_square(self):
        n0 = paper_generating_sequence()[0]
        expected = (
            NCPolynomial.constant(2)
            + (A(0) * A(1) + A(1) * A(0)).scale(HALF)
            - ((A(0) + A(1)) * B(0)).scale(SQRT2)
        )
        self.assertEqual(gram_expand([n0], ExactMatrix([[ONE]])), expected)

    def test_float_weights(self):
        n0 = paper_generating_sequence()[0]
        expanded = gram_expand([n0], np.array([[0.5]]))
        self.assertAlmostEqual(float(expanded.coefficient(NCMonomial((0,), (0,)))), -np.sqrt(2) / 2)

    def test_dimension_mismatch(self):
        with self.assertRaises(ValueError):
            gram_expand(paper_generating_sequence()[:2], ExactMatrix([[ONE]]))


class CertificateTests(SimpleTestCase):
    def test_w3_certifies_beta_t(self):
        report = verify_certificate(beta_t(), w3_matrix())
        self.assertTrue(report.exact)
        self.assertTrue(report.identity_holds)
        self.assertTrue(report.psd_holds)
        self.assertEqual(report.rank, 4)
        self.assertTrue(report.residual.is_zero())

    def test_w3_eigenvalues(self):
        values = sorted(v for v in np.linalg.eigvalsh(w3_matrix().float_matrix()) if abs(v) > 1e-12)
        np.testing.assert_allclose(values, w3_eigenvalues(), atol=1e-10)

    def test_perturbed_w3_fails(self):
        cert = w3_matrix()
        rows = cert.W.tolist()
        rows[0][0] = ONE
        report = verify_certificate(beta_t(), replace(cert, W=ExactMatrix(rows)))
        self.assertFalse(report.identity_holds)
        self.assertFalse(report.passed)

    def test_wrong_target_fails(self):
        report = verify_certificate(normalized_chsh(), w3_matrix())
        self.assertFalse(report.identity_holds)

    def test_chsh_certificate(self):
        sequence = paper_generating_sequence()
        quarter = ONE * HALF * HALF
        cert = SOSCertificate(
            basis_labels=["N0", "N1"],
            polys=sequence[:2],
            W=ExactMatrix([[quarter, ZERO], [ZERO, quarter]]),
            target=normalized_chsh(),
        )
        report = verify_certificate(normalized_chsh(), cert)
        self.assertTrue(report.passed)
        self.assertEqual(report.rank, 2)

    def test_float_certificate(self):
        cert = w3_matrix()
        report = verify_certificate(beta_t(), replace(cert, W=cert.float_matrix()))
        self.assertFalse(report.exact)
        self.assertTrue(report.passed)
        self.assertLess(report.max_residual, 1e-12)

    def test_shape_mismatch(self):
        cert = w3_matrix()
        with self.assertRaises(ValueError):
            verify_certificate(beta_t(), replace(cert, polys=cert.polys[:5]))

    def test_sos_terms(self):
        terms = sos_terms(w3_matrix())
        self.assertEqual(len(terms), 4)
        self.assertTrue(all(weight > 0 for weight, _ in terms))
        total = sum((operator.adjoint() * operator).scale(weight) for weight, operator in terms)
        expected = NCPolynomial.constant(1) - beta_t().as_polynomial()
        residual = total - expected
        self.assertLess(max(abs(float(c)) for c in residual.terms.values()), 1e-10)
