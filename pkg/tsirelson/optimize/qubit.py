"""
Multi-start local maximization of a Bell expression over two-qubit
realizations with measurements in the Z-X plane. This gives lower bounds on
the quantum value and the realizations attaining them.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize
from scipy.stats import qmc

from tsirelson import conf
from tsirelson.scenario import Behavior, BellExpression, behavior_from_qubit, grad_qubit, value_qubit

logger = logging.getLogger(__name__)

MIN_RESTARTS = 50
DEDUP_DISTANCE = 1e-6
GRID_THETAS = (0.0, math.pi / 4)
GRID_ANGLES = (0.0, math.pi / 2, math.pi, -math.pi / 2)


@dataclass(frozen=True)
class Maximizer:
    value: float
    params: tuple[float, ...]
    behavior: Behavior


@dataclass(frozen=True)
class QubitMaxResult:
    value: float
    maximizers: list[Maximizer]

    @property
    def best(self) -> Maximizer:
        return self.maximizers[0]


def start_points(restarts: int, seed: int) -> np.ndarray:
    """Scrambled Halton points over the parameter box plus a coarse grid."""
    sampler = qmc.Halton(d=5, scramble=True, seed=seed)
    lower = [0.0, -math.pi, -math.pi, -math.pi, -math.pi]
    upper = [math.pi / 2, math.pi, math.pi, math.pi, math.pi]
    quasi_random = qmc.scale(sampler.random(restarts), lower, upper)
    grid = np.array(
        [(theta, *angles) for theta in GRID_THETAS for angles in itertools.product(GRID_ANGLES, repeat=4)]
    )
    return np.vstack([quasi_random, grid])


def local_maximize(beta: BellExpression, start: np.ndarray) -> tuple[float, np.ndarray]:
    result = minimize(
        lambda x: -value_qubit(beta, x),
        start,
        jac=lambda x: -grad_qubit(beta, x),
        method="BFGS",
        options={"gtol": 1e-11, "maxiter": 2000},
    )
    return -float(result.fun), np.asarray(result.x, dtype=float)


def qubit_max(beta: BellExpression, restarts: int = 200, tol: float = 1e-7, seed: int | None = None) -> QubitMaxResult:
    """
    Best value of ``beta`` found over qubit realizations, with every distinct
    realization (up to behavior distance 1e-6) within ``tol`` of it.
    """
    if restarts < MIN_RESTARTS:
        raise ValueError(f"restarts must be at least {MIN_RESTARTS}, got {restarts}")
    seed = conf.get("TSIRELSON_SCAN_SEED") if seed is None else seed
    beta = beta.to_float()
    runs = [local_maximize(beta, start) for start in start_points(restarts, seed)]
    best = max(value for value, _ in runs)

    maximizers: list[Maximizer] = []
    for value, params in sorted(runs, key=lambda run: -run[0]):
        if value < best - tol:
            break
        behavior = behavior_from_qubit(params)
        if any(behavior.distance(m.behavior) <= DEDUP_DISTANCE for m in maximizers):
            continue
        maximizers.append(Maximizer(value, tuple(float(p) for p in params), behavior))
    logger.info(f"Qubit maximum {best:.12f} from {len(runs)} starts, {len(maximizers)} distinct maximizers")
    return QubitMaxResult(best, maximizers)
