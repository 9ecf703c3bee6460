"""
The two-parameter family of Bell expressions maximized by the Tsirelson
point, and the octagon it forms inside the dual of the quantum set.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from tsirelson.exact_algebra import HALF, INV_SQRT2, ONE, SQRT2, ZERO, A, B, ExactMatrix, NCPolynomial, QSqrt2Scalar
from tsirelson.exact_algebra.eigen import eig_sym_numeric
from tsirelson.scenario import (
    LOCAL_VERTICES,
    TSIRELSON_OCTANTS,
    Behavior,
    BellExpression,
    beta_t,
    chsh,
    grad_octants,
    local_vertex,
    normalized_chsh,
    pair,
    symmetry_expr,
    tsirelson_point,
)

logger = logging.getLogger(__name__)

SLICE_TOL = 1e-10
OCTAGON_TOL = 1e-9

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"

# Radius of the vertices: 1 - 1/sqrt(2).
OCTAGON_RADIUS = QSqrt2Scalar(1, Fraction(-1, 2))


class ExtendedSliceParams(NamedTuple):
    r0: object
    r1: object
    r2: object
    lam: object


class SliceParams(NamedTuple):
    r0: object
    r1: object


class PauliCoeffs(NamedTuple):
    """Coefficients of ZA, XA, ZB, XB, ZAZB, XAXB, ZAXB, XAZB in the Bell operator."""

    p1: object
    p2: object
    p3: object
    p4: object
    p5: object
    p6: object
    p7: object
    p8: object


def _scalar(value):
    if isinstance(value, (int, Fraction)):
        return QSqrt2Scalar(value)
    if isinstance(value, QSqrt2Scalar):
        return value
    return float(value)


# -- the families -----------------------------------------------------------


def _family_polynomials():
    g = (A(0) + A(1)).scale(INV_SQRT2)
    d = (A(0) - A(1)).scale(INV_SQRT2)
    return {
        "r0": g - B(0),
        "r1": d - B(1),
        "r2": d * B(0) + g * B(1),
        "lam": g * B(0),
        "one_minus_lam": d * B(1),
    }


def expr_from_extended(params) -> BellExpression:
    """
    Bell expression ``r0 (g - B0) + r1 (d - B1) + r2 (d B0 + g B1)
    + lam g B0 + (1 - lam) d B1`` with ``g, d = (A0 +- A1)/sqrt(2)``.
    """
    r0, r1, r2, lam = (_scalar(v) for v in ExtendedSliceParams(*params))
    family = _family_polynomials()
    poly = (
        family["r0"].scale(r0)
        + family["r1"].scale(r1)
        + family["r2"].scale(r2)
        + family["lam"].scale(lam)
        + family["one_minus_lam"].scale(1 - lam)
    )
    expression = BellExpression.from_polynomial(poly)
    exact = all(isinstance(v, QSqrt2Scalar) for v in (r0, r1, r2, lam))
    return expression if exact else expression.to_float()


def expr_from_slice(r0, r1) -> BellExpression:
    r0, r1 = _scalar(r0), _scalar(r1)
    lam = HALF if isinstance(r0, QSqrt2Scalar) and isinstance(r1, QSqrt2Scalar) else 0.5
    return expr_from_extended((r0, r1, 0, lam))


def slice_coords_of(beta: BellExpression) -> SliceParams | None:
    """Inverse of ``expr_from_slice``; ``None`` when ``beta`` is off the slice."""
    r0, r1 = -beta.b[0], -beta.b[1]
    candidate = expr_from_slice(r0, r1)
    if beta.is_exact:
        return SliceParams(r0, r1) if candidate == beta else None
    if np.max(np.abs(candidate.to_numpy() - beta.to_numpy())) <= SLICE_TOL:
        return SliceParams(r0, r1)
    return None


# -- Bell operator for the fixed optimal measurements -----------------------


def pauli_coeffs(beta: BellExpression) -> PauliCoeffs:
    a0, a1 = beta.a
    b0, b1 = beta.b
    (c00, c01), (c10, c11) = beta.c
    h = INV_SQRT2 if beta.is_exact else 1 / math.sqrt(2)
    return PauliCoeffs(
        (a0 + a1) * h,
        (a0 - a1) * h,
        b0,
        b1,
        (c00 + c10) * h,
        (c01 - c11) * h,
        (c01 + c11) * h,
        (c00 - c10) * h,
    )


def eigenstate_residuals(p: PauliCoeffs) -> tuple:
    """Residuals that all vanish iff the Bell operator fixes |phi+>."""
    return (p.p1 + p.p3, p.p2 + p.p4, p.p5 + p.p6 - 1, p.p7 - p.p8)


_I = np.identity(2)
_Z = np.diag([1.0, -1.0])
_X = np.array([[0.0, 1.0], [1.0, 0.0]])


def bell_operator_matrix(p: PauliCoeffs) -> np.ndarray:
    """Bell operator in the basis |00>, |01>, |10>, |11>."""
    terms = (
        (p.p1, np.kron(_Z, _I)),
        (p.p2, np.kron(_X, _I)),
        (p.p3, np.kron(_I, _Z)),
        (p.p4, np.kron(_I, _X)),
        (p.p5, np.kron(_Z, _Z)),
        (p.p6, np.kron(_X, _X)),
        (p.p7, np.kron(_Z, _X)),
        (p.p8, np.kron(_X, _Z)),
    )
    return sum((float(coefficient) * operator for coefficient, operator in terms), np.zeros((4, 4)))


def bell_operator_value(beta: BellExpression) -> float:
    """Best value of ``beta`` over all two-qubit states for the fixed measurements."""
    return float(eig_sym_numeric(bell_operator_matrix(pauli_coeffs(beta)))[-1])


# -- stationarity at the Tsirelson point ------------------------------------


@dataclass(frozen=True)
class StationarityReduction:
    lam: QSqrt2Scalar
    r2: QSqrt2Scalar
    rank: int
    free_parameters: tuple[str, ...]
    equations: list[list[QSqrt2Scalar]]


def stationarity_reduce() -> StationarityReduction:
    """
    Solve the five stationarity equations of the extended family at the
    Tsirelson parameters.

    The gradient is affine in ``(r0, r1, r2, lam)``, so each column of the
    system is the gradient of a unit change in one parameter.
    """
    names = ("r0", "r1", "r2", "lam")
    base = grad_octants(expr_from_extended((0, 0, 0, 0)), TSIRELSON_OCTANTS)
    columns = []
    for i in range(4):
        unit = [0, 0, 0, 0]
        unit[i] = 1
        shifted = grad_octants(expr_from_extended(unit), TSIRELSON_OCTANTS)
        columns.append([s - b for s, b in zip(shifted, base)])
    system = ExactMatrix.from_columns(columns, 5)
    rhs = [-b for b in base]
    augmented = ExactMatrix([list(system.row(i)) + [rhs[i]] for i in range(5)])
    reduced, pivots = augmented.rref()
    assert 4 not in pivots, "stationarity system is inconsistent"
    free = tuple(names[i] for i in range(4) if i not in pivots)
    assert set(free) == {"r0", "r1"} and all(all(x.is_zero() for x in columns[i]) for i in (0, 1))
    solution = {names[p]: reduced[row, 4] for row, p in enumerate(pivots)}
    rank = len(pivots)
    logger.info(f"Stationarity reduces to lam={solution['lam']}, r2={solution['r2']} (rank {rank})")
    equations = [list(augmented.row(i)) for i in range(5)]
    return StationarityReduction(solution["lam"], solution["r2"], rank, free, equations)


# -- the octagon ------------------------------------------------------------


class HalfPlane(NamedTuple):
    """``u*r0 + v*r1 <= w``."""

    u: QSqrt2Scalar
    v: QSqrt2Scalar
    w: QSqrt2Scalar

    def slack(self, r0, r1):
        return self.w - (self.u * r0 + self.v * r1)


def local_halfplane(idx) -> HalfPlane:
    """Constraint ``pair(expr_from_slice(r0, r1), L_idx) <= 1`` as a half-plane."""
    vertex = local_vertex(idx)
    c0 = pair(expr_from_slice(0, 0), vertex)
    u = pair(expr_from_slice(1, 0), vertex) - c0
    v = pair(expr_from_slice(0, 1), vertex) - c0
    return HalfPlane(u, v, 1 - c0)


@lru_cache(maxsize=None)
def octagon_constraints() -> tuple[HalfPlane, ...]:
    """The 16 local constraints with coincident half-planes merged."""
    seen = {}
    for idx in LOCAL_VERTICES:
        plane = local_halfplane(idx)
        if plane.u.is_zero() and plane.v.is_zero():
            continue
        # w > 0 for every constraint here, so dividing by it is a normal form.
        key = (plane.u / plane.w, plane.v / plane.w)
        seen.setdefault(key, plane)
    return tuple(seen.values())


def _intersect(first: HalfPlane, second: HalfPlane):
    det = first.u * second.v - first.v * second.u
    if det.is_zero():
        return None
    r0 = (first.w * second.v - first.v * second.w) / det
    r1 = (first.u * second.w - first.w * second.u) / det
    return r0, r1


@lru_cache(maxsize=None)
def octagon_vertices() -> tuple[SliceParams, ...]:
    """
    Exact vertices of the feasible region of the local constraints, sorted by
    angle from the positive r0 axis.
    """
    constraints = octagon_constraints()
    points = set()
    for i, first in enumerate(constraints):
        for second in constraints[i + 1:]:
            point = _intersect(first, second)
            if point is None:
                continue
            if all(plane.slack(*point).sign() >= 0 for plane in constraints):
                points.add(point)

    def angle(point):
        value = math.atan2(float(point[1]), float(point[0]))
        return value if value >= 0 else value + 2 * math.pi

    vertices = tuple(SliceParams(*p) for p in sorted(points, key=angle))
    logger.debug(f"Octagon has {len(vertices)} vertices from {len(constraints)} constraints")
    return vertices


def saturated_constraints(r0, r1) -> list[HalfPlane]:
    return [plane for plane in octagon_constraints() if plane.slack(r0, r1).is_zero()]


def in_octagon(r0, r1) -> str:
    """Classify a slice point as ``interior``, ``boundary`` or ``outside``."""
    r0, r1 = _scalar(r0), _scalar(r1)
    if isinstance(r0, QSqrt2Scalar) and isinstance(r1, QSqrt2Scalar):
        signs = [plane.slack(r0, r1).sign() for plane in octagon_constraints()]
        if min(signs) < 0:
            return OUTSIDE
        return BOUNDARY if 0 in signs else INTERIOR
    slacks = [float(plane.slack(r0, r1)) for plane in octagon_constraints()]
    if min(slacks) < -OCTAGON_TOL:
        return OUTSIDE
    return BOUNDARY if min(slacks) <= OCTAGON_TOL else INTERIOR


def self_tests_tsirelson(r0, r1) -> bool:
    """Interior slice expressions are maximized by the Tsirelson point alone."""
    return in_octagon(r0, r1) == INTERIOR


def octagon_affine_dimension() -> int:
    vertices = octagon_vertices()
    origin = vertices[0]
    differences = [[v.r0 - origin.r0, v.r1 - origin.r1] for v in vertices[1:]]
    return ExactMatrix(differences).rank()


# -- decomposition and exposure reports -------------------------------------


@dataclass(frozen=True)
class BoundaryDecomposition:
    """``beta(r0, r1) = p * CHSH/(2 sqrt 2) + (1 - p) * beta(boundary)``."""

    p: QSqrt2Scalar
    boundary: SliceParams
    holds: bool


def chsh_boundary_decomposition(r0, r1) -> BoundaryDecomposition:
    """
    Write a slice expression inside the octagon as a mixture of the
    normalized CHSH expression and a point of the octagon boundary on the
    same ray.

    :raises ValueError: for float input and for points outside the octagon
    """
    r0, r1 = _scalar(r0), _scalar(r1)
    if not (isinstance(r0, QSqrt2Scalar) and isinstance(r1, QSqrt2Scalar)):
        raise ValueError("chsh_boundary_decomposition needs exact coordinates")
    if in_octagon(r0, r1) == OUTSIDE:
        raise ValueError(f"({r0}, {r1}) lies outside the octagon")
    if r0 == 0 and r1 == 0:
        vertex = octagon_vertices()[0]
        return BoundaryDecomposition(ONE, vertex, expr_from_slice(r0, r1) == normalized_chsh())
    stretch = min(
        plane.w / (plane.u * r0 + plane.v * r1)
        for plane in octagon_constraints()
        if (plane.u * r0 + plane.v * r1).sign() > 0
    )
    boundary = SliceParams(r0 * stretch, r1 * stretch)
    p = 1 - stretch.inverse()
    mixture = normalized_chsh().scale(p) + expr_from_slice(*boundary).scale(1 - p)
    return BoundaryDecomposition(p, boundary, mixture == expr_from_slice(r0, r1))


@dataclass(frozen=True)
class ChshDecompositionReport:
    mirrored: BellExpression
    mirrored_coords: SliceParams | None
    midpoint_coords: SliceParams | None
    normalized_identity: bool
    unnormalized_identity: bool
    scale_factor: QSqrt2Scalar

    @property
    def passed(self) -> bool:
        return (
            self.normalized_identity
            and self.mirrored_coords == SliceParams(-OCTAGON_RADIUS, ZERO)
            and self.midpoint_coords == SliceParams(ZERO, ZERO)
        )


def chsh_decompose_check() -> ChshDecompositionReport:
    """
    Check ``(beta_T + S^4 beta_T)/2 = CHSH/(2 sqrt 2)`` and record that the
    identity fails for the unnormalized CHSH expression by the factor
    ``2 sqrt 2``.
    """
    mirrored = beta_t()
    for _ in range(4):
        mirrored = symmetry_expr(mirrored)
    midpoint = (beta_t() + mirrored).scale(HALF)
    return ChshDecompositionReport(
        mirrored=mirrored,
        mirrored_coords=slice_coords_of(mirrored),
        midpoint_coords=slice_coords_of(midpoint),
        normalized_identity=midpoint == normalized_chsh(),
        unnormalized_identity=midpoint == chsh(),
        scale_factor=SQRT2 * 2,
    )


EXPOSING_VERTICES = ((-1, -1, -1, 1), (-1, 1, 1, -1))


def exposing_point() -> Behavior:
    """Mean of the Tsirelson point and the two local vertices attaining beta_T = 1."""
    third = QSqrt2Scalar(Fraction(1, 3))
    total = tsirelson_point().vector()
    for idx in EXPOSING_VERTICES:
        total = [x + y for x, y in zip(total, local_vertex(idx).vector())]
    return Behavior([x * third for x in total])


@dataclass(frozen=True)
class ExposureReport:
    pair_value: QSqrt2Scalar
    solution: SliceParams | None
    is_vertex: bool
    affine_dimension: int
    dimension_pair: tuple[int, int]

    @property
    def passed(self) -> bool:
        return (
            self.pair_value == ONE
            and self.solution == SliceParams(OCTAGON_RADIUS, ZERO)
            and self.is_vertex
            and self.affine_dimension == 2
        )


def expose_check() -> ExposureReport:
    """
    Check that the mixed point exposes beta_T: its pairing is 1, and inside
    the slice only beta_T reaches 1 on both local vertices.
    """
    value = pair(beta_t(), exposing_point())
    first, second = (local_halfplane(idx) for idx in EXPOSING_VERTICES)
    solution = _intersect(first, second)
    if solution is not None:
        solution = SliceParams(*solution)
        if in_octagon(*solution) == OUTSIDE:
            solution = None
    dimension = octagon_affine_dimension()
    return ExposureReport(
        pair_value=value,
        solution=solution,
        is_vertex=solution is not None and solution in octagon_vertices(),
        affine_dimension=dimension,
        dimension_pair=(0, dimension),
    )
