from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from math import isqrt

from tsirelson.exceptions import InputError

_SCALAR_RE = re.compile(
    r"^(?:(?P<p>-?\d+)/(?P<pd>\d+)(?:(?P<op>[+-])(?P<q>\d+)/(?P<qd>\d+)\*s2)?"
    r"|(?P<sq>-?\d+)/(?P<sqd>\d+)\*s2)$"
)


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Cannot build an exact rational from {value!r}")


@total_ordering
class QSqrt2Scalar:
    """
    Exact number ``p + q*sqrt(2)`` with rational ``p`` and ``q``.

    Instances are immutable. Arithmetic with ``int``/``Fraction`` stays exact,
    arithmetic with ``float`` returns a ``float``.
    """

    __slots__ = ("_p", "_q")

    def __init__(self, p=0, q=0) -> None:
        self._p: Fraction = _fraction(p)
        self._q: Fraction = _fraction(q)

    @property
    def p(self) -> Fraction:
        return self._p

    @property
    def q(self) -> Fraction:
        return self._q

    @classmethod
    def coerce(cls, value) -> QSqrt2Scalar:
        if isinstance(value, QSqrt2Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"Cannot coerce {value!r} to an exact scalar")

    # -- text format ---------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> QSqrt2Scalar:
        """
        Parse ``p/q``, ``p/q+r/t*s2`` or ``r/t*s2``.

        :raises InputError: on anything else, including zero denominators
        """
        match = _SCALAR_RE.match(text.strip()) if isinstance(text, str) else None
        if match is None:
            raise InputError(f"Malformed exact scalar: {text!r}")
        try:
            if match["sq"] is not None:
                return cls(0, Fraction(int(match["sq"]), int(match["sqd"])))
            p = Fraction(int(match["p"]), int(match["pd"]))
            q = Fraction(0)
            if match["op"] is not None:
                q = Fraction(int(match["q"]), int(match["qd"]))
                if match["op"] == "-":
                    q = -q
        except ZeroDivisionError as exc:
            raise InputError(f"Zero denominator in exact scalar: {text!r}") from exc
        return cls(p, q)

    def __str__(self) -> str:
        rational = f"{self._p.numerator}/{self._p.denominator}"
        if self._q == 0:
            return rational
        irrational = f"{abs(self._q.numerator)}/{self._q.denominator}*s2"
        if self._p == 0:
            return irrational if self._q > 0 else f"-{irrational}"
        return f"{rational}{'+' if self._q > 0 else '-'}{irrational}"

    def __repr__(self) -> str:
        return f"QSqrt2Scalar({self._p!s}, {self._q!s})"

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, float):
            return float(self) + other
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2Scalar(self._p + other.p, self._q + other.q)

    __radd__ = __add__

    def __neg__(self) -> QSqrt2Scalar:
        return QSqrt2Scalar(-self._p, -self._q)

    def __pos__(self) -> QSqrt2Scalar:
        return self

    def __sub__(self, other):
        if isinstance(other, float):
            return float(self) - other
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2Scalar(self._p - other.p, self._q - other.q)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, float):
            return float(self) * other
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return QSqrt2Scalar(
            self._p * other.p + 2 * self._q * other.q,
            self._p * other.q + self._q * other.p,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QSqrt2Scalar:
        """Galois conjugate ``p - q*sqrt(2)``."""
        return QSqrt2Scalar(self._p, -self._q)

    def norm(self) -> Fraction:
        """Field norm ``p**2 - 2*q**2``; zero only for the zero scalar."""
        return self._p * self._p - 2 * self._q * self._q

    def inverse(self) -> QSqrt2Scalar:
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero in Q(sqrt 2)")
        n = self.norm()
        return QSqrt2Scalar(self._p / n, -self._q / n)

    def __truediv__(self, other):
        if isinstance(other, float):
            return float(self) / other
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, float):
            return other / float(self)
        return self.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> QSqrt2Scalar:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __abs__(self) -> QSqrt2Scalar:
        return -self if self.sign() < 0 else self

    # -- order ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self._p == 0 and self._q == 0

    def sign(self) -> int:
        """
        Exact sign of ``p + q*sqrt(2)`` as -1, 0 or 1.

        When ``p`` and ``q`` disagree in sign, the larger of ``p**2`` and
        ``2*q**2`` wins; the two are never equal for non-zero rationals.
        """
        p_sign = (self._p > 0) - (self._p < 0)
        q_sign = (self._q > 0) - (self._q < 0)
        if p_sign >= 0 and q_sign >= 0:
            return 1 if (p_sign or q_sign) else 0
        if p_sign <= 0 and q_sign <= 0:
            return -1
        p_square = self._p * self._p
        q_square = 2 * self._q * self._q
        assert p_square != q_square
        return p_sign if p_square > q_square else q_sign

    def __eq__(self, other) -> bool:
        if isinstance(other, QSqrt2Scalar):
            return self._p == other.p and self._q == other.q
        if isinstance(other, (int, Fraction)):
            return self._q == 0 and self._p == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._q == 0:
            return hash(self._p)
        return hash((self._p, self._q))

    def __lt__(self, other) -> bool:
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- conversion ----------------------------------------------------------

    def to_float(self) -> float:
        """
        Correctly rounded double nearest to the exact value.

        Brackets sqrt(2) between consecutive multiples of ``2**-k`` and refines
        until both ends of the induced interval round to the same double.
        """
        if self._q == 0:
            return float(self._p)
        bits = 64
        while True:
            low = Fraction(isqrt(2 << (2 * bits)), 1 << bits)
            high = low + Fraction(1, 1 << bits)
            ends = (self._p + self._q * low, self._p + self._q * high)
            if float(ends[0]) == float(ends[1]):
                return float(ends[0])
            bits *= 2

    __float__ = to_float


ZERO = QSqrt2Scalar(0, 0)
ONE = QSqrt2Scalar(1, 0)
SQRT2 = QSqrt2Scalar(0, 1)
HALF = QSqrt2Scalar(Fraction(1, 2), 0)
INV_SQRT2 = QSqrt2Scalar(0, Fraction(1, 2))


def scalar_arith(op: str, x: QSqrt2Scalar, y: QSqrt2Scalar | None = None):
    """
    Dispatch one of the scalar field operations by name.

    :param op: ``add``, ``mul``, ``neg``, ``inv``, ``sign`` or ``to_float``
    """
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "sign":
        return x.sign()
    if op == "to_float":
        return x.to_float()
    raise ValueError(f"Unknown scalar operation {op!r}")
