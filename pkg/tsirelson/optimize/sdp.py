"""
Small dense semidefinite programs

    maximize  c . y   subject to   F0 + sum_i y_i F_i  >= 0

modelled with cvxpy and solved by the configured conic solver.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import cvxpy as cp
import numpy as np

from tsirelson import conf
from tsirelson.exceptions import SolverError

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
MAX_ITER = "max_iter"

MAX_SIZE = 32
MAX_VARIABLES = 200

_STATUS = {
    cp.OPTIMAL: OPTIMAL,
    cp.OPTIMAL_INACCURATE: OPTIMAL,
    cp.INFEASIBLE: INFEASIBLE,
    cp.INFEASIBLE_INACCURATE: INFEASIBLE,
    cp.UNBOUNDED: UNBOUNDED,
    cp.UNBOUNDED_INACCURATE: UNBOUNDED,
    cp.USER_LIMIT: MAX_ITER,
}


@dataclass(frozen=True)
class SDPProblem:
    F0: np.ndarray
    F: list[np.ndarray]
    objective: np.ndarray

    def __post_init__(self):
        n = self.F0.shape[0]
        if len(self.F) != len(self.objective):
            raise ValueError(f"{len(self.F)} constraint matrices for {len(self.objective)} objective entries")
        for matrix in [self.F0, *self.F]:
            if matrix.shape != (n, n):
                raise ValueError(f"Constraint matrix of shape {matrix.shape}, expected {(n, n)}")
            if not np.allclose(matrix, matrix.T, atol=1e-12):
                raise ValueError("Constraint matrices must be symmetric")
        if n > MAX_SIZE or len(self.F) > MAX_VARIABLES:
            raise ValueError(f"Problem of size {n} with {len(self.F)} variables exceeds {MAX_SIZE}/{MAX_VARIABLES}")

    @property
    def size(self) -> int:
        return self.F0.shape[0]

    @property
    def m(self) -> int:
        return len(self.F)


@dataclass(frozen=True)
class SDPSolution:
    value: float
    y: np.ndarray
    matrix: np.ndarray
    status: str
    dual_gap: float = float("nan")


def solve_problem(problem: cp.Problem) -> str:
    """
    Solve a cvxpy problem with the configured solver and map its status.

    :raises SolverError: when the solver breaks down or returns an unknown status
    """
    solver = conf.get("TSIRELSON_SDP_SOLVER")
    options = {}
    if solver == "CLARABEL":
        options["max_iter"] = conf.get("TSIRELSON_SDP_MAX_ITERS")
    elif solver == "SCS":
        options["max_iters"] = conf.get("TSIRELSON_SDP_MAX_ITERS") * 100
    try:
        problem.solve(solver=solver, **options)
    except cp.error.SolverError as exc:
        raise SolverError(f"{solver} failed: {exc}") from exc
    status = _STATUS.get(problem.status)
    if status is None:
        raise SolverError(f"{solver} returned status {problem.status!r}")
    if problem.status in (cp.OPTIMAL_INACCURATE, cp.INFEASIBLE_INACCURATE, cp.UNBOUNDED_INACCURATE):
        logger.warning(f"{solver} reported {problem.status}")
    logger.debug(f"{solver} finished with status {problem.status}")
    return status


def solve_sdp(prob: SDPProblem, tol: float = 1e-7) -> SDPSolution:
    """
    Maximize ``objective . y`` over ``F0 + sum y_i F_i >= 0``.

    :param tol: accuracy target; used to flag a loose duality gap
    """
    n = prob.size
    y = cp.Variable(prob.m)
    S = cp.Variable((n, n), symmetric=True)
    affine = cp.Constant(prob.F0)
    for i in range(prob.m):
        affine = affine + y[i] * prob.F[i]
    psd = S >> 0
    problem = cp.Problem(cp.Maximize(y @ prob.objective), [psd, S == affine])
    status = solve_problem(problem)
    if status != OPTIMAL:
        logger.info(f"SDP of size {n} with {prob.m} variables is {status}")
        value = -np.inf if status == INFEASIBLE else np.inf if status == UNBOUNDED else np.nan
        return SDPSolution(value, np.full(prob.m, np.nan), np.full((n, n), np.nan), status)

    value = float(problem.value)
    gap = float("nan")
    if psd.dual_value is not None:
        gap = abs(float(np.trace(psd.dual_value @ prob.F0)) - value)
        if gap > 10 * tol * max(1.0, abs(value)):
            logger.warning(f"SDP duality gap {gap:.3g} above tolerance {tol:.1g}")
    return SDPSolution(value, np.asarray(y.value, dtype=float), np.asarray(S.value, dtype=float), OPTIMAL, gap)
