"""
Moment-matrix relaxations of the quantum set.

The moment matrix of a level is indexed by its monomials; cell (k, l) holds
the expectation of ``adjoint(m_k) * m_l``. Real symmetric moment matrices
suffice here, so a monomial and its adjoint share one label.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from tsirelson.certificates import RelaxationLevel, monomials_of_level
from tsirelson.exact_algebra import UNIT, NCMonomial
from tsirelson.exceptions import SolverError
from tsirelson.scenario import BellExpression

from .sdp import OPTIMAL, SDPProblem, SDPSolution, solve_sdp

logger = logging.getLogger(__name__)

BEHAVIOR_MONOMIALS = (
    NCMonomial((0,), ()),
    NCMonomial((1,), ()),
    NCMonomial((), (0,)),
    NCMonomial((), (1,)),
    NCMonomial((0,), (0,)),
    NCMonomial((0,), (1,)),
    NCMonomial((1,), (0,)),
    NCMonomial((1,), (1,)),
)


@dataclass(frozen=True)
class MomentStructure:
    level: RelaxationLevel
    cell_labels: dict[tuple[int, int], NCMonomial]
    free_labels: list[NCMonomial]

    @property
    def size(self) -> int:
        return self.level.size

    def behavior_indices(self) -> list[int]:
        """Positions of the eight correlator moments among the free labels."""
        index = {label: i for i, label in enumerate(self.free_labels)}
        return [index[monomial.canonical()] for monomial in BEHAVIOR_MONOMIALS]

    def sdp_matrices(self) -> tuple[np.ndarray, list[np.ndarray]]:
        n = self.size
        index = {label: i for i, label in enumerate(self.free_labels)}
        F0 = np.zeros((n, n))
        F = [np.zeros((n, n)) for _ in self.free_labels]
        for (k, l), label in self.cell_labels.items():
            if label == UNIT:
                F0[k, l] = 1.0
            else:
                F[index[label]][k, l] = 1.0
        return F0, F


def moment_structure(level: RelaxationLevel | str) -> MomentStructure:
    if isinstance(level, str):
        level = monomials_of_level(level)
    cells = {}
    for k, left in enumerate(level.monomials):
        for l, right in enumerate(level.monomials):
            cells[(k, l)] = (left.adjoint() * right).canonical()
    free = sorted({label for label in cells.values() if label != UNIT}, key=NCMonomial.sort_key)
    return MomentStructure(level, cells, free)


def npa_problem(beta: BellExpression, level: RelaxationLevel | str) -> tuple[MomentStructure, SDPProblem]:
    structure = moment_structure(level)
    F0, F = structure.sdp_matrices()
    objective = np.zeros(len(F))
    for position, coefficient in zip(structure.behavior_indices(), beta.to_numpy()):
        objective[position] += coefficient
    return structure, SDPProblem(F0, F, objective)


def npa_solve(beta: BellExpression, level: RelaxationLevel | str, tol: float = 1e-6) -> SDPSolution:
    structure, problem = npa_problem(beta, level)
    solution = solve_sdp(problem, tol)
    if solution.status != OPTIMAL:
        raise SolverError(f"Moment relaxation at level {structure.level.tag} ended with status {solution.status}")
    logger.info(f"Moment bound at level {structure.level.tag}: {solution.value:.10f}")
    return solution


def npa_bound(beta: BellExpression, level: RelaxationLevel | str, tol: float = 1e-6) -> float:
    """Upper bound on the quantum value of ``beta`` from the given level."""
    return npa_solve(beta, level, tol).value
