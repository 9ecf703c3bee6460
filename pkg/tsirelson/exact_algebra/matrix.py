"""
Dense matrices over Q(sqrt 2): reduced row echelon form, kernel, rank and an
exact positive-semidefiniteness test by symmetric diagonal pivoting.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .scalar import ONE, ZERO, QSqrt2Scalar


class ExactMatrix:
    """Immutable row-major matrix with ``QSqrt2Scalar`` entries."""

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: Sequence[Sequence[object]], cols: int | None = None) -> None:
        entries = tuple(tuple(QSqrt2Scalar.coerce(x) for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(row) != cols for row in entries):
            raise ValueError("Matrix rows must all have the same length")
        self._rows = len(entries)
        self._cols = cols
        self._entries = entries

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, size: int) -> ExactMatrix:
        return cls([[ONE if i == j else ZERO for j in range(size)] for i in range(size)], size)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], rows: int) -> ExactMatrix:
        return cls([[column[i] for column in columns] for i in range(rows)], len(columns))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    def __getitem__(self, key: tuple[int, int]) -> QSqrt2Scalar:
        i, j = key
        return self._entries[i][j]

    def row(self, i: int) -> tuple[QSqrt2Scalar, ...]:
        return self._entries[i]

    def tolist(self) -> list[list[QSqrt2Scalar]]:
        return [list(row) for row in self._entries]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self._entries], dtype=float).reshape(self.shape)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix([[self._entries[i][j] for i in range(self._rows)] for j in range(self._cols)], self._rows)

    def scale(self, factor) -> ExactMatrix:
        return ExactMatrix([[x * factor for x in row] for row in self._entries], self._cols)

    def with_entry(self, i: int, j: int, value) -> ExactMatrix:
        rows = self.tolist()
        rows[i][j] = QSqrt2Scalar.coerce(value)
        return ExactMatrix(rows, self._cols)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch {self.shape} vs {other.shape}")
        return ExactMatrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self._entries, other._entries)], self._cols
        )

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self._cols != other.rows:
                raise ValueError(f"Shape mismatch {self.shape} @ {other.shape}")
            columns = other.transpose()._entries
            return ExactMatrix([[_dot(row, column) for column in columns] for row in self._entries], other.cols)
        vector = list(other)
        if len(vector) != self._cols:
            raise ValueError(f"Vector of length {len(vector)} for {self._cols} columns")
        return [_dot(row, vector) for row in self._entries]

    def quadratic_form(self, vector: Sequence[QSqrt2Scalar]) -> QSqrt2Scalar:
        return _dot(vector, self @ vector)

    def is_symmetric(self) -> bool:
        return self._rows == self._cols and all(
            self._entries[i][j] == self._entries[j][i] for i in range(self._rows) for j in range(i)
        )

    def embed(self, size: int, positions: Sequence[int]) -> ExactMatrix:
        """Place this square matrix at ``positions`` of a ``size``-square zero matrix."""
        rows = [[ZERO] * size for _ in range(size)]
        for i, p in enumerate(positions):
            for j, q in enumerate(positions):
                rows[p][q] = self._entries[i][j]
        return ExactMatrix(rows, size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._entries == other._entries and self._cols == other._cols

    def __hash__(self) -> int:
        return hash((self._cols, self._entries))

    def __repr__(self) -> str:
        return f"ExactMatrix({[[str(x) for x in row] for row in self._entries]})"

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple[ExactMatrix, list[int]]:
        """
        Reduced row echelon form and the list of pivot columns.
        """
        rows = self.tolist()
        pivots: list[int] = []
        lead = 0
        for column in range(self._cols):
            pivot_row = next((r for r in range(lead, self._rows) if not rows[r][column].is_zero()), None)
            if pivot_row is None:
                continue
            rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
            inverse = rows[lead][column].inverse()
            rows[lead] = [x * inverse for x in rows[lead]]
            for r in range(self._rows):
                if r != lead and not rows[r][column].is_zero():
                    factor = rows[r][column]
                    rows[r] = [x - factor * y for x, y in zip(rows[r], rows[lead])]
            pivots.append(column)
            lead += 1
            if lead == self._rows:
                break
        return ExactMatrix(rows, self._cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list[QSqrt2Scalar]]:
        """
        Basis of the right null space, one vector per free column, read off
        the reduced row echelon form.
        """
        reduced, pivots = self.rref()
        free = [c for c in range(self._cols) if c not in pivots]
        basis = []
        for f in free:
            vector = [ZERO] * self._cols
            vector[f] = ONE
            for r, p in enumerate(pivots):
                vector[p] = -reduced[r, f]
            basis.append(vector)
        return basis

    def psd_check(self) -> PSDReport:
        return psd_check_exact(self)


def _dot(u: Sequence[QSqrt2Scalar], v: Sequence[QSqrt2Scalar]) -> QSqrt2Scalar:
    total = ZERO
    for x, y in zip(u, v):
        if not (x.is_zero() or y.is_zero()):
            total = total + x * y
    return total


@dataclass(frozen=True)
class PSDReport:
    """
    Outcome of the exact LDL^T test.

    ``pivots`` lists the positive pivots in elimination order; when the matrix
    is not PSD, ``witness`` satisfies ``v^T M v < 0`` exactly.
    """

    is_psd: bool
    pivots: list[QSqrt2Scalar] = field(default_factory=list)
    witness: list[QSqrt2Scalar] | None = None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def psd_check_exact(matrix: ExactMatrix) -> PSDReport:
    """
    Decide positive semidefiniteness over Q(sqrt 2).

    Works on the congruent matrix ``E M E^T``: every elimination step on a
    positive diagonal pivot is recorded in ``E`` so a negative direction found
    later maps back to the original coordinates through ``E^T``.

    :raises ValueError: if the matrix is not symmetric
    """
    if not matrix.is_symmetric():
        raise ValueError("psd_check_exact requires a symmetric matrix")
    n = matrix.rows
    a = matrix.tolist()
    e = ExactMatrix.identity(n).tolist()
    remaining = list(range(n))
    pivots: list[QSqrt2Scalar] = []

    while remaining:
        negative = next((i for i in remaining if a[i][i].sign() < 0), None)
        if negative is not None:
            return PSDReport(False, pivots, list(e[negative]))

        k = next((i for i in remaining if a[i][i].sign() > 0), None)
        if k is None:
            for i in remaining:
                for j in remaining:
                    if i < j and not a[i][j].is_zero():
                        sign = a[i][j].sign()
                        witness = [x - sign * y for x, y in zip(e[i], e[j])]
                        return PSDReport(False, pivots, witness)
            break

        pivot = a[k][k]
        pivots.append(pivot)
        remaining.remove(k)
        for i in remaining:
            factor = a[i][k] / pivot
            if factor.is_zero():
                continue
            for j in remaining:
                a[i][j] = a[i][j] - factor * a[k][j]
            e[i] = [x - factor * y for x, y in zip(e[i], e[k])]
        for i in remaining:
            a[i][k] = ZERO
            a[k][i] = ZERO

    return PSDReport(True, pivots, None)


def kernel(matrix: ExactMatrix) -> list[list[QSqrt2Scalar]]:
    return matrix.kernel()


def rank(matrix: ExactMatrix) -> int:
    return matrix.rank()
