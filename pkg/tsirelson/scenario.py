"""
Behaviors and Bell expressions of the two-party, two-input, two-outcome
scenario.

Both are vectors of eight numbers in the fixed order

    behavior:   <A0>, <A1>, <B0>, <B1>, <A0B0>, <A0B1>, <A1B0>, <A1B1>
    expression:  a0,   a1,   b0,   b1,   c00,    c01,    c10,    c11

and carry a kind: ``exact`` (every entry a ``QSqrt2Scalar``) or ``float``.
Mixing kinds promotes to float.
"""
from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from tsirelson.exact_algebra import INV_SQRT2, ONE, ZERO, A, B, NCMonomial, NCPolynomial, QSqrt2Scalar

logger = logging.getLogger(__name__)

EXACT = "exact"
FLOAT = "float"

FLOAT_RANGE_TOL = 1e-12
LOCAL_TIE_TOL = 1e-9
GRADIENT_STEP = 1e-5
HESSIAN_STEP = 1e-4

BEHAVIOR_LABELS = ("mA0", "mA1", "mB0", "mB1", "K00", "K01", "K10", "K11")
EXPRESSION_LABELS = ("a0", "a1", "b0", "b1", "c00", "c01", "c10", "c11")


def _normalize(values: Sequence[object]) -> tuple[tuple, str]:
    values = list(values)
    if len(values) != 8:
        raise ValueError(f"Expected 8 entries, got {len(values)}")
    converted = []
    exact = True
    for value in values:
        if isinstance(value, (int, Fraction)):
            value = QSqrt2Scalar(value)
        if isinstance(value, QSqrt2Scalar):
            converted.append(value)
        else:
            value = float(value)
            if not math.isfinite(value):
                raise ValueError(f"Non-finite entry {value!r}")
            converted.append(value)
            exact = False
    if not exact:
        converted = [float(v) for v in converted]
    return tuple(converted), EXACT if exact else FLOAT


class _Vector8:
    """Shared behaviour of behaviors and expressions: an 8-vector with a kind."""

    _values: tuple
    kind: str

    def vector(self) -> list:
        return list(self._values)

    def to_numpy(self) -> np.ndarray:
        return np.array([float(v) for v in self._values])

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    def to_float(self):
        return type(self).from_vector([float(v) for v in self._values])

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.kind == other.kind and self._values == other._values

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.kind, self._values))

    @classmethod
    def from_vector(cls, values: Sequence[object]):
        return cls(values)


class Behavior(_Vector8):
    """Correlator table: marginals ``mA``, ``mB`` and correlators ``K``."""

    __slots__ = ("_values", "kind")

    def __init__(self, values: Sequence[object]) -> None:
        self._values, self.kind = _normalize(values)
        for value in self._values:
            if self.kind == EXACT:
                if (value - 1).sign() > 0 or (value + 1).sign() < 0:
                    raise ValueError(f"Behavior entry {value} outside [-1, 1]")
            elif abs(value) > 1 + FLOAT_RANGE_TOL:
                raise ValueError(f"Behavior entry {value!r} outside [-1, 1]")

    @classmethod
    def from_tables(cls, mA: Sequence, mB: Sequence, K: Sequence[Sequence]) -> Behavior:
        return cls([mA[0], mA[1], mB[0], mB[1], K[0][0], K[0][1], K[1][0], K[1][1]])

    @property
    def mA(self) -> tuple:
        return self._values[0:2]

    @property
    def mB(self) -> tuple:
        return self._values[2:4]

    @property
    def K(self) -> tuple:
        return (self._values[4:6], self._values[6:8])

    def distance(self, other: Behavior) -> float:
        return float(np.linalg.norm(self.to_numpy() - other.to_numpy()))

    def __repr__(self) -> str:
        return f"Behavior({[str(v) for v in self._values]}, kind={self.kind!r})"


class BellExpression(_Vector8):
    """Linear functional on behaviors with coefficients ``a``, ``b`` and ``c``."""

    __slots__ = ("_values", "kind")

    def __init__(self, values: Sequence[object]) -> None:
        self._values, self.kind = _normalize(values)

    @classmethod
    def from_tables(cls, a: Sequence, b: Sequence, c: Sequence[Sequence]) -> BellExpression:
        return cls([a[0], a[1], b[0], b[1], c[0][0], c[0][1], c[1][0], c[1][1]])

    @classmethod
    def zero(cls) -> BellExpression:
        return cls([ZERO] * 8)

    @property
    def a(self) -> tuple:
        return self._values[0:2]

    @property
    def b(self) -> tuple:
        return self._values[2:4]

    @property
    def c(self) -> tuple:
        return (self._values[4:6], self._values[6:8])

    def __add__(self, other: BellExpression) -> BellExpression:
        return BellExpression([x + y for x, y in zip(self._values, other._values)])

    def __sub__(self, other: BellExpression) -> BellExpression:
        return BellExpression([x - y for x, y in zip(self._values, other._values)])

    def __neg__(self) -> BellExpression:
        return BellExpression([-x for x in self._values])

    def scale(self, factor) -> BellExpression:
        return BellExpression([x * factor for x in self._values])

    def as_polynomial(self) -> NCPolynomial:
        """The formal polynomial ``sum a_x A_x + b_y B_y + c_xy A_x B_y``."""
        a0, a1, b0, b1, c00, c01, c10, c11 = self._values
        letters_a = (A(0), A(1))
        letters_b = (B(0), B(1))
        poly = NCPolynomial()
        for coefficient, term in (
            (a0, letters_a[0]),
            (a1, letters_a[1]),
            (b0, letters_b[0]),
            (b1, letters_b[1]),
            (c00, letters_a[0] * letters_b[0]),
            (c01, letters_a[0] * letters_b[1]),
            (c10, letters_a[1] * letters_b[0]),
            (c11, letters_a[1] * letters_b[1]),
        ):
            poly = poly + term.scale(coefficient)
        return poly

    @classmethod
    def from_polynomial(cls, poly: NCPolynomial) -> BellExpression:
        """
        Read the eight coefficients back from a formal polynomial.

        :raises ValueError: if the polynomial has a constant or a monomial of
            degree two inside one party
        """
        slots = {monomial: i for i, monomial in enumerate(_EXPRESSION_MONOMIALS)}
        values: list[object] = [ZERO] * 8
        for monomial, coefficient in poly.terms.items():
            if monomial not in slots:
                raise ValueError(f"Monomial {monomial.word()} is not part of a Bell expression")
            values[slots[monomial]] = coefficient
        return cls(values)

    def __repr__(self) -> str:
        return f"BellExpression({[str(v) for v in self._values]}, kind={self.kind!r})"


_EXPRESSION_MONOMIALS = (
    NCMonomial((0,), ()),
    NCMonomial((1,), ()),
    NCMonomial((), (0,)),
    NCMonomial((), (1,)),
    NCMonomial((0,), (0,)),
    NCMonomial((0,), (1,)),
    NCMonomial((1,), (0,)),
    NCMonomial((1,), (1,)),
)


class QubitRealizationParams(NamedTuple):
    """Two-qubit state cos(theta)|00> + sin(theta)|11>, observables cos(phi) Z + sin(phi) X."""

    theta: float
    a0: float
    a1: float
    b0: float
    b1: float


TSIRELSON_PARAMS = QubitRealizationParams(math.pi / 4, math.pi / 4, -math.pi / 4, 0.0, math.pi / 2)
TSIRELSON_OCTANTS = (1, 1, -1, 0, 2)

LocalVertexIndex = tuple[int, int, int, int]
LOCAL_VERTICES: tuple[LocalVertexIndex, ...] = tuple(itertools.product((-1, 1), repeat=4))


# -- reference points and expressions ---------------------------------------


def local_vertex(idx: LocalVertexIndex) -> Behavior:
    """Deterministic behavior L_ijkl with ``mB = (i, j)`` and ``mA = (k, l)``."""
    i, j, k, l = idx
    if any(v not in (-1, 1) for v in idx):
        raise ValueError(f"Local vertex indices must be +1 or -1, got {idx}")
    mA = (k, l)
    mB = (i, j)
    return Behavior.from_tables(mA, mB, [[mA[x] * mB[y] for y in range(2)] for x in range(2)])


def tsirelson_point() -> Behavior:
    h = INV_SQRT2
    return Behavior.from_tables([ZERO, ZERO], [ZERO, ZERO], [[h, h], [h, -h]])


def chsh() -> BellExpression:
    return BellExpression([0, 0, 0, 0, 1, 1, 1, -1])


def normalized_chsh() -> BellExpression:
    """CHSH divided by 2*sqrt(2), so its quantum maximum is 1."""
    return chsh().scale(QSqrt2Scalar(0, Fraction(1, 4)))


def beta_t() -> BellExpression:
    """The extremal expression at slice coordinates (1 - sqrt(2)/2, 0)."""
    half_gap = QSqrt2Scalar(Fraction(-1, 2), Fraction(1, 2))
    t = QSqrt2Scalar(1, Fraction(-1, 2))
    k = QSqrt2Scalar(0, Fraction(1, 4))
    return BellExpression([half_gap, half_gap, -t, ZERO, k, k, k, -k])


# -- pairing and local bound ------------------------------------------------


def pair(beta: BellExpression, behavior: Behavior):
    """``beta . P``; exact when both sides are exact, float otherwise."""
    if beta.is_exact and behavior.is_exact:
        total = ZERO
        for x, y in zip(beta.vector(), behavior.vector()):
            total = total + x * y
        return total
    return float(np.dot(beta.to_numpy(), behavior.to_numpy()))


def local_bound(beta: BellExpression):
    """
    Maximum of ``beta`` over the 16 deterministic vertices.

    :returns: ``(value, maximizers)``; ties are exact for exact expressions
        and within 1e-9 otherwise
    """
    values = [(idx, pair(beta, local_vertex(idx))) for idx in LOCAL_VERTICES]
    best = max(v for _, v in values)
    if beta.is_exact:
        maximizers = [idx for idx, v in values if v == best]
    else:
        maximizers = [idx for idx, v in values if v >= best - LOCAL_TIE_TOL]
    return best, maximizers


# -- qubit realizations -----------------------------------------------------


class _Trig(NamedTuple):
    c2t: object
    s2t: object
    ca: tuple
    sa: tuple
    cb: tuple
    sb: tuple


def _float_trig(params: QubitRealizationParams) -> _Trig:
    theta, a0, a1, b0, b1 = params
    return _Trig(
        math.cos(2 * theta),
        math.sin(2 * theta),
        (math.cos(a0), math.cos(a1)),
        (math.sin(a0), math.sin(a1)),
        (math.cos(b0), math.cos(b1)),
        (math.sin(b0), math.sin(b1)),
    )


_COS_OCTANT = (ONE, INV_SQRT2, ZERO, -INV_SQRT2, -ONE, -INV_SQRT2, ZERO, INV_SQRT2)


def _cos_octant(k: int) -> QSqrt2Scalar:
    return _COS_OCTANT[k % 8]


def _sin_octant(k: int) -> QSqrt2Scalar:
    return _COS_OCTANT[(k - 2) % 8]


def _exact_trig(octants: Sequence[int]) -> _Trig:
    theta, a0, a1, b0, b1 = octants
    return _Trig(
        _cos_octant(2 * theta),
        _sin_octant(2 * theta),
        (_cos_octant(a0), _cos_octant(a1)),
        (_sin_octant(a0), _sin_octant(a1)),
        (_cos_octant(b0), _cos_octant(b1)),
        (_sin_octant(b0), _sin_octant(b1)),
    )


def _behavior_values(tr: _Trig) -> list:
    mA = [tr.c2t * tr.ca[x] for x in range(2)]
    mB = [tr.c2t * tr.cb[y] for y in range(2)]
    K = [tr.ca[x] * tr.cb[y] + tr.s2t * tr.sa[x] * tr.sb[y] for x in range(2) for y in range(2)]
    return mA + mB + K


def _gradient_values(beta: BellExpression, tr: _Trig) -> list:
    a, b, c = beta.a, beta.b, beta.c
    d_theta = (
        sum(a[x] * (-2 * tr.s2t * tr.ca[x]) for x in range(2))
        + sum(b[y] * (-2 * tr.s2t * tr.cb[y]) for y in range(2))
        + sum(c[x][y] * 2 * tr.c2t * tr.sa[x] * tr.sb[y] for x in range(2) for y in range(2))
    )
    d_a = [
        -a[x] * tr.c2t * tr.sa[x]
        + sum(c[x][y] * (-tr.sa[x] * tr.cb[y] + tr.s2t * tr.ca[x] * tr.sb[y]) for y in range(2))
        for x in range(2)
    ]
    d_b = [
        -b[y] * tr.c2t * tr.sb[y]
        + sum(c[x][y] * (-tr.ca[x] * tr.sb[y] + tr.s2t * tr.sa[x] * tr.cb[y]) for x in range(2))
        for y in range(2)
    ]
    return [d_theta] + d_a + d_b


def behavior_from_qubit(params: Sequence[float]) -> Behavior:
    """Float statistics of the qubit family at ``(theta, a0, a1, b0, b1)``."""
    values = _behavior_values(_float_trig(QubitRealizationParams(*params)))
    return Behavior([min(1.0, max(-1.0, v)) for v in values])


def behavior_from_octants(octants: Sequence[int]) -> Behavior:
    """
    Exact statistics of the qubit family with every parameter a multiple of
    pi/4, given as integer multiples in the order ``(theta, a0, a1, b0, b1)``.
    """
    return Behavior(_behavior_values(_exact_trig(octants)))


def value_qubit(beta: BellExpression, params: Sequence[float]) -> float:
    return float(np.dot(beta.to_numpy(), _behavior_values(_float_trig(QubitRealizationParams(*params)))))


def grad_qubit(beta: BellExpression, params: Sequence[float], mode: str = "analytic") -> np.ndarray:
    """
    Gradient of ``pair(beta, behavior_from_qubit(params))``.

    :param mode: ``analytic`` (closed-form trigonometric derivatives) or
        ``finite_difference`` (central differences, step 1e-5)
    """
    params = np.asarray(params, dtype=float)
    if mode == "analytic":
        values = _gradient_values(beta.to_float(), _float_trig(QubitRealizationParams(*params)))
        return np.array(values, dtype=float)
    if mode == "finite_difference":
        gradient = np.zeros(5)
        for i in range(5):
            step = np.zeros(5)
            step[i] = GRADIENT_STEP
            gradient[i] = (value_qubit(beta, params + step) - value_qubit(beta, params - step)) / (2 * GRADIENT_STEP)
        return gradient
    raise ValueError(f"Unknown gradient mode {mode!r}")


def grad_octants(beta: BellExpression, octants: Sequence[int]) -> list:
    """Exact gradient at parameters that are multiples of pi/4; ``beta`` must be exact."""
    if not beta.is_exact:
        raise ValueError("grad_octants needs an exact expression")
    return _gradient_values(beta, _exact_trig(octants))


def hessian_qubit_fd(beta: BellExpression, params: Sequence[float], step: float = HESSIAN_STEP) -> np.ndarray:
    """Symmetrized central-difference Hessian of the qubit value function."""
    params = np.asarray(params, dtype=float)
    hessian = np.zeros((5, 5))
    basis = np.identity(5) * step
    for i in range(5):
        for j in range(i, 5):
            hessian[i, j] = (
                value_qubit(beta, params + basis[i] + basis[j])
                - value_qubit(beta, params + basis[i] - basis[j])
                - value_qubit(beta, params - basis[i] + basis[j])
                + value_qubit(beta, params - basis[i] - basis[j])
            ) / (4 * step * step)
            hessian[j, i] = hessian[i, j]
    return (hessian + hessian.T) / 2


# -- the discrete symmetry --------------------------------------------------

SYMMETRY_MAP = {
    ("A", 0): (-1, ("B", 1)),
    ("A", 1): (-1, ("B", 0)),
    ("B", 0): (-1, ("A", 0)),
    ("B", 1): (1, ("A", 1)),
}


def symmetry_expr(beta: BellExpression) -> BellExpression:
    """Apply A0 -> -B1, A1 -> -B0, B0 -> -A0, B1 -> A1 to the formal polynomial."""
    image = BellExpression.from_polynomial(beta.as_polynomial().substitute(SYMMETRY_MAP))
    return image if beta.is_exact else image.to_float()


@lru_cache(maxsize=None)
def symmetry_permutation() -> tuple[tuple[int, int], ...]:
    """
    The signed permutation induced on coefficient vectors, as
    ``(sign, source)`` per target slot.
    """
    permutation = []
    columns = []
    for i in range(8):
        unit = [ZERO] * 8
        unit[i] = ONE
        columns.append(symmetry_expr(BellExpression(unit)).vector())
    for target in range(8):
        sources = [(src, columns[src][target]) for src in range(8) if not columns[src][target].is_zero()]
        assert len(sources) == 1
        source, sign = sources[0]
        permutation.append((sign.sign(), source))
    return tuple(permutation)


def symmetry_behavior(behavior: Behavior) -> Behavior:
    """Same signed permutation on behaviors, so pairings are preserved."""
    values = behavior.vector()
    return Behavior([sign * values[source] for sign, source in symmetry_permutation()])


def symmetry_orbit(beta: BellExpression) -> list[BellExpression]:
    orbit = [beta]
    for _ in range(7):
        orbit.append(symmetry_expr(orbit[-1]))
    return orbit
