import logging
from functools import lru_cache

import cvxpy as cp
import numpy as np

from tsirelson.certificates import (
    RelaxationLevel,
    SOSCertificate,
    gram_products,
    monomials_of_level,
    nullifier_basis,
    verify_certificate,
)
from tsirelson.exact_algebra import NCPolynomial
from tsirelson.scenario import BellExpression

from .sdp import INFEASIBLE, OPTIMAL, solve_problem

logger = logging.getLogger(__name__)

MIN_VERIFY_TOL = 1e-7


@lru_cache(maxsize=None)
def _gram_data(tag: str):
    """Nullifier basis of a level and the coefficient matrices of its Gram products."""
    basis = nullifier_basis(monomials_of_level(tag))
    polys = basis.polys
    products = gram_products(polys)
    labels = sorted(
        {monomial.canonical() for product in products.values() for monomial in product.terms},
        key=lambda m: m.sort_key(),
    )
    n = len(polys)
    coefficient_matrices = {}
    for label in labels:
        matrix = np.zeros((n, n))
        for (k, l), product in products.items():
            matrix[k, l] += float(product.coefficient(label))
            if label.adjoint() != label:
                matrix[k, l] += float(product.coefficient(label.adjoint()))
        coefficient_matrices[label] = (matrix + matrix.T) / 2
    return polys, products, coefficient_matrices


def sos_search(beta: BellExpression, level: RelaxationLevel | str, tol: float = 1e-7) -> SOSCertificate | None:
    """
    Look for ``W >= 0`` with ``gram_expand(nullifiers, W) = 1 - beta``.

    Maximizes the smallest eigenvalue of ``W`` (capped at 1) subject to the
    coefficient-matching equalities, and returns a float certificate when
    that optimum is at least ``-tol`` and the certificate verifies.
    """
    tag = level if isinstance(level, str) else level.tag
    polys, products, coefficient_matrices = _gram_data(tag)
    target = NCPolynomial.constant(1) - beta.as_polynomial()
    target_labels = {monomial.canonical() for monomial in target.terms}
    if not target_labels <= set(coefficient_matrices):
        logger.info(f"1 - beta has monomials outside the Gram span at level {tag}")
        return None

    n = len(polys)
    W = cp.Variable((n, n), symmetric=True)
    t = cp.Variable()
    constraints = [W - t * np.identity(n) >> 0, t <= 1]
    for label, matrix in coefficient_matrices.items():
        rhs = float(target.coefficient(label))
        if label.adjoint() != label:
            rhs += float(target.coefficient(label.adjoint()))
        constraints.append(cp.trace(matrix @ W) == rhs)
    problem = cp.Problem(cp.Maximize(t), constraints)
    status = solve_problem(problem)
    if status == INFEASIBLE:
        logger.info(f"No Gram matrix matches 1 - beta at level {tag}")
        return None
    if status != OPTIMAL:
        logger.warning(f"SOS search at level {tag} ended with status {status}")
        return None
    if t.value < -tol:
        logger.info(f"SOS search at level {tag}: best minimum eigenvalue {float(t.value):.3g}")
        return None

    weights = np.asarray(W.value, dtype=float)
    certificate = SOSCertificate(
        basis_labels=[f"K{k}" for k in range(n)],
        polys=list(polys),
        W=(weights + weights.T) / 2,
        target=beta,
    )
    report = verify_certificate(beta, certificate, tol=max(tol, MIN_VERIFY_TOL))
    if not report.passed:
        logger.warning(
            f"SOS certificate at level {tag} failed verification (residual {report.max_residual:.3g})"
        )
        return None
    logger.info(f"SOS certificate found at level {tag} with minimum eigenvalue {float(t.value):.3g}")
    return certificate
