"""
Second-order test around the Tsirelson realization.

A slice expression can only be maximized at the Tsirelson point if the
Hessian of its qubit value function is negative semidefinite along the whole
circle of jointly rotated realizations. The largest radius passing the test
bounds the slice from outside.
"""
from __future__ import annotations

import logging
import math

import numpy as np
from scipy.optimize import minimize_scalar

from tsirelson.exact_algebra.eigen import eig_sym_numeric
from tsirelson.scenario import hessian_qubit_fd
from tsirelson.slices import expr_from_slice

logger = logging.getLogger(__name__)

PAPER_FORMULA = "paper_formula"
FINITE_DIFFERENCE = "finite_difference"

SLACK = {PAPER_FORMULA: 1e-10, FINITE_DIFFERENCE: 1e-6}
MIN_ALPHA_GRID = 64

# Finite-difference rows come in the order (theta, a0, a1, b0, b1); the closed
# form lists the two second-party angles the other way round.
CLOSED_FORM_ORDER = [0, 1, 2, 4, 3]


def hessian_paper(r: float, gamma: float, alpha: float) -> np.ndarray:
    """Closed-form Hessian at radius ``r``, slice angle ``gamma`` and rotation ``alpha``."""
    s = math.sin
    c = math.cos
    q = math.pi / 4
    column = [
        2 * r * s(alpha) * s(gamma + q),
        -2 * r * c(alpha) * s(-gamma + q),
        -2 * r * s(gamma) * s(alpha + q),
        2 * r * c(gamma) * s(-alpha + q),
    ]
    hessian = np.array(
        [
            [-2.0, *column],
            [column[0], -0.5, 0.0, 0.25, 0.25],
            [column[1], 0.0, -0.5, 0.25, 0.25],
            [column[2], 0.25, 0.25, -0.5, 0.0],
            [column[3], 0.25, 0.25, 0.0, -0.5],
        ]
    )
    return hessian


def rotated_tsirelson_params(alpha: float) -> np.ndarray:
    """Tsirelson realization with both parties rotated by ``alpha - pi/4``."""
    shift = alpha - math.pi / 4
    return np.array([math.pi / 4, math.pi / 4 + shift, -math.pi / 4 + shift, shift, math.pi / 2 + shift])


def hessian_fd(r: float, gamma: float, alpha: float) -> np.ndarray:
    """Finite-difference Hessian on the same rotation circle, in closed-form order."""
    beta = expr_from_slice(r * math.cos(gamma), r * math.sin(gamma))
    hessian = hessian_qubit_fd(beta, rotated_tsirelson_params(alpha))
    return hessian[np.ix_(CLOSED_FORM_ORDER, CLOSED_FORM_ORDER)]


def _largest_eigenvalue(r, gamma, alpha, source) -> float:
    hessian = hessian_paper(r, gamma, alpha) if source == PAPER_FORMULA else hessian_fd(r, gamma, alpha)
    return float(eig_sym_numeric(hessian)[-1])


def worst_eigenvalue(r: float, gamma: float, alphas: np.ndarray, source: str) -> float:
    """
    Largest Hessian eigenvalue over the rotation circle: grid maximum refined
    by a bounded scalar search around the worst grid point.
    """
    values = [_largest_eigenvalue(r, gamma, alpha, source) for alpha in alphas]
    worst = int(np.argmax(values))
    step = alphas[1] - alphas[0]
    refined = minimize_scalar(
        lambda alpha: -_largest_eigenvalue(r, gamma, alpha, source),
        bounds=(alphas[worst] - step, alphas[worst] + step),
        method="bounded",
        options={"xatol": 1e-9},
    )
    return max(values[worst], -float(refined.fun))


def hessian_rmax(gamma: float, alpha_grid: int = 256, tol: float = 1e-4, source: str = PAPER_FORMULA) -> float:
    """
    Largest ``r`` in [0, 1] for which the Hessian stays negative semidefinite
    for every rotation, found by bisection.

    :param source: ``paper_formula`` (closed form) or ``finite_difference``
    """
    if alpha_grid < MIN_ALPHA_GRID:
        raise ValueError(f"alpha_grid must be at least {MIN_ALPHA_GRID}, got {alpha_grid}")
    if source not in SLACK:
        raise ValueError(f"Unknown Hessian source {source!r}")
    alphas = np.linspace(0.0, 2 * math.pi, alpha_grid, endpoint=False)

    def feasible(r):
        return worst_eigenvalue(r, gamma, alphas, source) <= SLACK[source]

    low, high = 0.0, 1.0
    if feasible(high):
        return high
    while high - low > tol:
        middle = (low + high) / 2
        if feasible(middle):
            low = middle
        else:
            high = middle
    result = (low + high) / 2
    logger.info(f"Hessian radius for gamma={gamma:.6f} ({source}): {result:.6f}")
    return result
