"""
Relaxation levels, nullifiers of the maximally entangled state and
sum-of-squares certificates ``1 - beta = N^T W N``.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from tsirelson.exact_algebra import (
    INV_SQRT2,
    ONE,
    SQRT2,
    ZERO,
    A,
    B,
    ExactMatrix,
    NCMonomial,
    NCPolynomial,
    PSDReport,
    QSqrt2Scalar,
    psd_check_exact,
)
from tsirelson.exact_algebra.eigen import eig_sym_numeric
from tsirelson.scenario import BellExpression, QubitRealizationParams, beta_t

logger = logging.getLogger(__name__)

FLOAT_CERT_TOL = 1e-8
NONZERO_WEIGHT_TOL = 1e-12

LEVEL_TAGS = ("L1", "L1AB", "L1AB_ABB", "L1AB_ABB_AAB")


@dataclass(frozen=True)
class RelaxationLevel:
    tag: str
    monomials: tuple[NCMonomial, ...]

    @property
    def size(self) -> int:
        return len(self.monomials)


@lru_cache(maxsize=None)
def monomials_of_level(tag: str) -> RelaxationLevel:
    """
    Monomial list of a relaxation level:
    ``L1`` = {1, A_x, B_y}; ``L1AB`` adds A_x B_y; ``L1AB_ABB`` adds
    A_x B_y B_y' (y != y'); ``L1AB_ABB_AAB`` adds A_x A_x' B_y (x != x').
    """
    if tag not in LEVEL_TAGS:
        raise ValueError(f"Unknown relaxation level {tag!r}; expected one of {', '.join(LEVEL_TAGS)}")
    monomials = [NCMonomial(), NCMonomial((0,), ()), NCMonomial((1,), ()), NCMonomial((), (0,)), NCMonomial((), (1,))]
    depth = LEVEL_TAGS.index(tag)
    if depth >= 1:
        monomials += [NCMonomial((x,), (y,)) for x in range(2) for y in range(2)]
    if depth >= 2:
        monomials += [NCMonomial((x,), (y, 1 - y)) for x in range(2) for y in range(2)]
    if depth >= 3:
        monomials += [NCMonomial((x, 1 - x), (y,)) for x in range(2) for y in range(2)]
    return RelaxationLevel(tag, tuple(monomials))


# -- action on states -------------------------------------------------------
# Basis order |00>, |01>, |10>, |11>; index 2*i + j for the first qubit i.


def _apply_a_exact(index: int, vector: list[QSqrt2Scalar]) -> list[QSqrt2Scalar]:
    # (Z + X)/sqrt(2) for A0, (Z - X)/sqrt(2) for A1, on the first qubit.
    flip = ONE if index == 0 else -ONE
    out = []
    for i in range(2):
        for j in range(2):
            z_part = vector[2 * i + j] if i == 0 else -vector[2 * i + j]
            out.append((z_part + flip * vector[2 * (1 - i) + j]) * INV_SQRT2)
    return out


def _apply_b_exact(index: int, vector: list[QSqrt2Scalar]) -> list[QSqrt2Scalar]:
    # Z for B0, X for B1, on the second qubit.
    out = []
    for i in range(2):
        for j in range(2):
            if index == 0:
                out.append(vector[2 * i + j] if j == 0 else -vector[2 * i + j])
            else:
                out.append(vector[2 * i + 1 - j])
    return out


def _monomial_action(monomial: NCMonomial, vector, apply_a, apply_b):
    for index in reversed(monomial.b):
        vector = apply_b(index, vector)
    for index in reversed(monomial.a):
        vector = apply_a(index, vector)
    return vector


PHI_PLUS = (INV_SQRT2, ZERO, ZERO, INV_SQRT2)


def state_action_exact(f: NCPolynomial) -> list[QSqrt2Scalar]:
    """``f |phi+>`` for the optimal CHSH measurements, exactly."""
    total = [ZERO] * 4
    for monomial, coefficient in f.terms.items():
        image = _monomial_action(monomial, list(PHI_PLUS), _apply_a_exact, _apply_b_exact)
        total = [t + coefficient * x for t, x in zip(total, image)]
    return total


_Z = np.diag([1.0, -1.0])
_X = np.array([[0.0, 1.0], [1.0, 0.0]])
_I = np.identity(2)


def qubit_operators(params: Sequence[float]):
    """Observables ``(A0, A1, B0, B1)`` and state of a qubit realization."""
    theta, a0, a1, b0, b1 = QubitRealizationParams(*params)

    def observable(angle):
        return math.cos(angle) * _Z + math.sin(angle) * _X

    a_ops = tuple(np.kron(observable(angle), _I) for angle in (a0, a1))
    b_ops = tuple(np.kron(_I, observable(angle)) for angle in (b0, b1))
    state = np.array([math.cos(theta), 0.0, 0.0, math.sin(theta)])
    return a_ops, b_ops, state


def state_action_float(f: NCPolynomial, params: Sequence[float]) -> np.ndarray:
    """``f |phi_theta>`` for the angle observables of ``params``."""
    a_ops, b_ops, state = qubit_operators(params)
    total = np.zeros(4)
    for monomial, coefficient in f.terms.items():
        image = _monomial_action(
            monomial, state.copy(), lambda i, v: a_ops[i] @ v, lambda i, v: b_ops[i] @ v
        )
        total += float(coefficient) * image
    return total


def expectation_float(f: NCPolynomial, params: Sequence[float]) -> float:
    """``<phi_theta| f |phi_theta>`` for a hermitian polynomial."""
    _, _, state = qubit_operators(params)
    return float(state @ state_action_float(f, params))


# -- nullifiers -------------------------------------------------------------


@dataclass(frozen=True)
class NullifierBasis:
    level: RelaxationLevel
    polys: list[NCPolynomial]
    action_matrix: ExactMatrix

    @property
    def dimension(self) -> int:
        return len(self.polys)


def action_matrix(level: RelaxationLevel) -> ExactMatrix:
    """4 x n matrix whose columns are the monomials applied to |phi+>."""
    columns = [state_action_exact(NCPolynomial.from_monomial(m)) for m in level.monomials]
    return ExactMatrix.from_columns(columns, 4)


def combine(monomials: Sequence[NCMonomial], coefficients: Sequence[object]) -> NCPolynomial:
    return NCPolynomial({m: c for m, c in zip(monomials, coefficients)})


@lru_cache(maxsize=None)
def nullifier_basis(level: RelaxationLevel | str) -> NullifierBasis:
    """Exact kernel of the action matrix, one polynomial per free monomial."""
    if isinstance(level, str):
        level = monomials_of_level(level)
    matrix = action_matrix(level)
    polys = [combine(level.monomials, vector) for vector in matrix.kernel()]
    logger.debug(f"Level {level.tag}: {len(polys)} nullifiers from {level.size} monomials")
    return NullifierBasis(level, polys, matrix)


def paper_generating_sequence() -> list[NCPolynomial]:
    """The nine nullifiers N0..N8 used to state the beta_T certificate."""
    g = (A(0) + A(1)).scale(INV_SQRT2)
    d = (A(0) - A(1)).scale(INV_SQRT2)
    one = NCPolynomial.constant(1)
    return [
        g - B(0),
        d - B(1),
        one - g * B(0),
        one - d * B(1),
        g * B(1) + d * B(0),
        B(1) * (one - g * B(0)),
        B(0) * (one - d * B(1)),
        (one + g * B(0)) * B(1),
        (one + d * B(1)) * B(0),
    ]


GENERATING_LABELS = tuple(f"N{k}" for k in range(9))


def coordinates_in(polys: Sequence[NCPolynomial], monomials: Sequence[NCMonomial]) -> ExactMatrix:
    """Coefficient matrix with one row per polynomial over ``monomials``."""
    return ExactMatrix([[p.coefficient(m) for m in monomials] for p in polys], len(monomials))


# -- Gram expansions --------------------------------------------------------


def _as_rows(weights):
    if isinstance(weights, ExactMatrix):
        return weights.tolist()
    return [[float(x) for x in row] for row in np.asarray(weights, dtype=float)]


def gram_products(polys: Sequence[NCPolynomial]) -> dict[tuple[int, int], NCPolynomial]:
    return {(k, l): polys[k].adjoint() * polys[l] for k in range(len(polys)) for l in range(len(polys))}


def gram_expand(polys: Sequence[NCPolynomial], weights, products=None) -> NCPolynomial:
    """
    ``sum_kl w_kl N_k^dagger N_l``.

    :param weights: symmetric ``ExactMatrix`` or float array of size ``len(polys)``
    :param products: optional precomputed ``gram_products(polys)``
    :raises ValueError: on a dimension mismatch
    """
    rows = _as_rows(weights)
    n = len(polys)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"Gram matrix of size {len(rows)} for {n} polynomials")
    products = products or {}
    terms: dict[NCMonomial, object] = {}
    for k in range(n):
        for l in range(n):
            weight = rows[k][l]
            if weight == 0:
                continue
            product = products.get((k, l)) or polys[k].adjoint() * polys[l]
            for monomial, coefficient in product.terms.items():
                value = coefficient * weight
                terms[monomial] = terms[monomial] + value if monomial in terms else value
    return NCPolynomial(terms)


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class SOSCertificate:
    """Gram matrix ``W`` over a labeled basis of nullifiers, for ``target``."""

    basis_labels: list[str]
    polys: list[NCPolynomial]
    W: ExactMatrix | np.ndarray
    target: BellExpression

    @property
    def is_exact(self) -> bool:
        return isinstance(self.W, ExactMatrix) and all(p.is_exact() for p in self.polys) and self.target.is_exact

    def float_matrix(self) -> np.ndarray:
        return self.W.to_numpy() if isinstance(self.W, ExactMatrix) else np.asarray(self.W, dtype=float)


W3_LABELS = ("N0", "N2", "N6", "N1", "N5", "N4")
W3_POSITIONS = (0, 2, 6, 1, 5, 4)


def w3_matrix() -> SOSCertificate:
    """
    Block-diagonal Gram matrix certifying ``beta_T <= 1``, in the basis
    N0, N2, N6, N1, N5, N4 with ``s = 2 - sqrt(2)`` and prefactor 1/16.
    """
    s = QSqrt2Scalar(2, -1)
    r2 = SQRT2
    z = ZERO
    upper = [
        [r2, -2 * s, -s, z, z, z],
        [z, 2 * s, z, z, z, z],
        [z, z, r2, z, z, z],
        [z, z, z, QSqrt2Scalar(2), z, s],
        [z, z, z, z, r2 * s, s],
        [z, z, z, z, z, s],
    ]
    sixteenth = QSqrt2Scalar(Fraction(1, 16))
    full = [[(upper[i][j] if i <= j else upper[j][i]) * sixteenth for j in range(6)] for i in range(6)]
    sequence = paper_generating_sequence()
    return SOSCertificate(
        basis_labels=list(W3_LABELS),
        polys=[sequence[p] for p in W3_POSITIONS],
        W=ExactMatrix(full),
        target=beta_t(),
    )


@dataclass(frozen=True)
class CertificateReport:
    exact: bool
    identity_holds: bool
    psd_holds: bool
    residual: NCPolynomial
    max_residual: float
    psd: PSDReport | None = None
    eigenvalues: list[float] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.identity_holds and self.psd_holds

    @property
    def rank(self) -> int:
        if self.psd is not None:
            return self.psd.rank
        return sum(1 for value in self.eigenvalues if abs(value) > NONZERO_WEIGHT_TOL)


def verify_certificate(beta: BellExpression, cert: SOSCertificate, tol: float = FLOAT_CERT_TOL) -> CertificateReport:
    """
    Check ``gram_expand(cert) == 1 - beta`` coefficient-wise and ``W >= 0``.

    Exact certificates for exact targets are decided exactly (LDL^T over
    Q(sqrt 2)); anything else is checked to ``tol``.
    """
    n = len(cert.polys)
    matrix = cert.W
    if isinstance(matrix, ExactMatrix):
        if matrix.shape != (n, n):
            raise ValueError(f"Gram matrix of shape {matrix.shape} for {n} polynomials")
    elif np.asarray(matrix).shape != (n, n):
        raise ValueError(f"Gram matrix of shape {np.asarray(matrix).shape} for {n} polynomials")

    residual = gram_expand(cert.polys, matrix) - (NCPolynomial.constant(1) - beta.as_polynomial())
    max_residual = max((abs(float(c)) for c in residual.terms.values()), default=0.0)
    eigenvalues = [float(x) for x in eig_sym_numeric(cert.float_matrix())]

    if cert.is_exact and beta.is_exact:
        psd = psd_check_exact(matrix)
        return CertificateReport(
            exact=True,
            identity_holds=residual.is_zero(),
            psd_holds=psd.is_psd,
            residual=residual,
            max_residual=max_residual,
            psd=psd,
            eigenvalues=eigenvalues,
        )
    return CertificateReport(
        exact=False,
        identity_holds=max_residual <= tol,
        psd_holds=min(eigenvalues, default=0.0) >= -tol,
        residual=residual,
        max_residual=max_residual,
        eigenvalues=eigenvalues,
    )


def sos_terms(cert: SOSCertificate) -> list[tuple[float, NCPolynomial]]:
    """
    Split a certificate into ``sum_k w_k O_k^dagger O_k`` with ``w_k`` the
    non-zero eigenvalues of ``W`` and ``O_k`` the matching eigenvectors
    read in the certificate basis.
    """
    values, vectors = eig_sym_numeric(cert.float_matrix(), vectors=True)
    terms = []
    for k, weight in enumerate(values):
        if abs(weight) <= NONZERO_WEIGHT_TOL:
            continue
        operator = NCPolynomial()
        for coefficient, poly in zip(vectors[:, k], cert.polys):
            operator = operator + poly.scale(float(coefficient))
        terms.append((float(weight), operator))
    return terms


def w3_eigenvalues() -> list[float]:
    """Closed forms of the four non-zero eigenvalues of the beta_T Gram matrix."""
    root = math.sqrt(10 - 7 * math.sqrt(2))
    return sorted([(1 - root) / 8, (1 + root) / 8, (2 - math.sqrt(2)) / 8, (1.5 * math.sqrt(2) - 1) / 8])
