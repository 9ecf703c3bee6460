"""
Noncommutative polynomials in the observables A0, A1 (first party) and
B0, B1 (second party).

The algebra is generated by hermitian involutions with the rewrite rules
``X*X = 1`` and ``A_x*B_y = B_y*A_x``. Monomials are kept in normal form:
the A-word comes first, then the B-word, and neither word holds two equal
adjacent letters.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from tsirelson.exceptions import InputError

from .scalar import ONE, QSqrt2Scalar

_WORD_RE = re.compile(r"([AB])([01])")
_TERM_RE = re.compile(r"^(?P<coef>.+)\*(?P<word>1|(?:[AB][01])+)$")
_JOINER_RE = re.compile(r" ([+-]) ")


def _reduce(word: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for letter in word:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class NCMonomial(NamedTuple):
    """A-word followed by B-word, letters stored as the input index 0 or 1."""

    a: tuple[int, ...] = ()
    b: tuple[int, ...] = ()

    @classmethod
    def reduced(cls, a: Iterable[int] = (), b: Iterable[int] = ()) -> NCMonomial:
        return cls(_reduce(a), _reduce(b))

    @classmethod
    def parse(cls, word: str) -> NCMonomial:
        """Parse ``1`` or a letter string such as ``A0B1B0``."""
        if word == "1":
            return UNIT
        letters = _WORD_RE.findall(word)
        if "".join(p + i for p, i in letters) != word or not letters:
            raise InputError(f"Malformed monomial word: {word!r}")
        a = [int(i) for p, i in letters if p == "A"]
        b = [int(i) for p, i in letters if p == "B"]
        return cls.reduced(a, b)

    @property
    def degree(self) -> int:
        return len(self.a) + len(self.b)

    def sort_key(self):
        return (self.degree, -len(self.a), self.a, self.b)

    def is_unit(self) -> bool:
        return not self.a and not self.b

    def __mul__(self, other):
        if not isinstance(other, NCMonomial):
            return NotImplemented
        return NCMonomial.reduced(self.a + other.a, self.b + other.b)

    def adjoint(self) -> NCMonomial:
        return NCMonomial(self.a[::-1], self.b[::-1])

    def canonical(self) -> NCMonomial:
        """The smaller of the monomial and its adjoint, used as a moment label."""
        return min(self, self.adjoint(), key=NCMonomial.sort_key)

    def word(self) -> str:
        if self.is_unit():
            return "1"
        return "".join(f"A{i}" for i in self.a) + "".join(f"B{i}" for i in self.b)

    def __str__(self) -> str:
        return self.word()


UNIT = NCMonomial((), ())


def _is_zero(value) -> bool:
    if isinstance(value, QSqrt2Scalar):
        return value.is_zero()
    return value == 0


def _format_coefficient(value) -> str:
    if isinstance(value, QSqrt2Scalar):
        return str(value)
    return repr(float(value))


def _parse_coefficient(text: str):
    try:
        return QSqrt2Scalar.parse(text)
    except InputError:
        pass
    try:
        return float(text)
    except ValueError as exc:
        raise InputError(f"Malformed polynomial coefficient: {text!r}") from exc


def _negative(value) -> bool:
    if isinstance(value, QSqrt2Scalar):
        return value.sign() < 0
    return value < 0


class NCPolynomial:
    """
    Finite map from normal-form monomials to non-zero coefficients.

    Coefficients are ``QSqrt2Scalar`` for exact work; float coefficients are
    allowed for numeric Gram expansions and mix in the usual way.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[NCMonomial, object] | None = None) -> None:
        cleaned: dict[NCMonomial, object] = {}
        for monomial, coefficient in (terms or {}).items():
            if isinstance(coefficient, (int, Fraction)):
                coefficient = QSqrt2Scalar(coefficient)
            total = cleaned.get(monomial)
            total = coefficient if total is None else total + coefficient
            cleaned[monomial] = total
        self._terms = {m: c for m, c in cleaned.items() if not _is_zero(c)}

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, value) -> NCPolynomial:
        return cls({UNIT: value})

    @classmethod
    def letter(cls, party: str, index: int) -> NCPolynomial:
        if party == "A":
            return cls({NCMonomial((index,), ()): ONE})
        if party == "B":
            return cls({NCMonomial((), (index,)): ONE})
        raise ValueError(f"Unknown party {party!r}")

    @classmethod
    def from_monomial(cls, monomial: NCMonomial, coefficient=ONE) -> NCPolynomial:
        return cls({monomial: coefficient})

    @classmethod
    def parse(cls, text: str) -> NCPolynomial:
        """
        Parse the text form written by ``str()``: ``coef*word`` terms joined by
        `` + `` or `` - ``, or ``0`` for the zero polynomial.
        """
        text = text.strip()
        if text == "0":
            return cls()
        pieces = _JOINER_RE.split(text)
        signs = ["+"] + pieces[1::2]
        terms: dict[NCMonomial, object] = {}
        for sign, term in zip(signs, pieces[0::2]):
            match = _TERM_RE.match(term)
            if match is None:
                raise InputError(f"Malformed polynomial term: {term!r}")
            coefficient = _parse_coefficient(match["coef"])
            if sign == "-":
                coefficient = -coefficient
            monomial = NCMonomial.parse(match["word"])
            terms[monomial] = terms[monomial] + coefficient if monomial in terms else coefficient
        return cls(terms)

    # -- access --------------------------------------------------------------

    @property
    def terms(self) -> dict[NCMonomial, object]:
        return dict(self._terms)

    def monomials(self) -> list[NCMonomial]:
        return sorted(self._terms, key=NCMonomial.sort_key)

    def coefficient(self, monomial: NCMonomial):
        return self._terms.get(monomial, QSqrt2Scalar(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_exact(self) -> bool:
        return all(isinstance(c, QSqrt2Scalar) for c in self._terms.values())

    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=0)

    # -- algebra -------------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms[monomial] + coefficient if monomial in terms else coefficient
        return NCPolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> NCPolynomial:
        return NCPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, NCPolynomial):
            if isinstance(other, (int, float, Fraction, QSqrt2Scalar)):
                return self.scale(other)
            return NotImplemented
        terms: dict[NCMonomial, object] = {}
        for left, c_left in self._terms.items():
            for right, c_right in other._terms.items():
                product = left * right
                value = c_left * c_right
                terms[product] = terms[product] + value if product in terms else value
        return NCPolynomial(terms)

    def __rmul__(self, other):
        if isinstance(other, NCPolynomial):
            return other.__mul__(self)
        return self.scale(other)

    def scale(self, factor) -> NCPolynomial:
        return NCPolynomial({m: c * factor for m, c in self._terms.items()})

    def adjoint(self) -> NCPolynomial:
        """Reverse every word; generators are hermitian and coefficients real."""
        return NCPolynomial({m.adjoint(): c for m, c in self._terms.items()})

    def substitute(self, mapping: Mapping[tuple[str, int], tuple[int, tuple[str, int]]]) -> NCPolynomial:
        """
        Apply a signed relabeling of the letters as an algebra homomorphism.

        :param mapping: ``(party, index) -> (sign, (party, index))``; letters
            missing from the map are left unchanged
        """
        images = {}
        for party, count in (("A", 2), ("B", 2)):
            for index in range(count):
                sign, (target_party, target_index) = mapping.get((party, index), (1, (party, index)))
                images[(party, index)] = NCPolynomial.letter(target_party, target_index).scale(QSqrt2Scalar(sign))
        result = NCPolynomial()
        for monomial, coefficient in self._terms.items():
            image = NCPolynomial.constant(coefficient)
            for index in monomial.a:
                image = image * images[("A", index)]
            for index in monomial.b:
                image = image * images[("B", index)]
            result = result + image
        return result

    def is_hermitian(self) -> bool:
        return self == self.adjoint()

    def _lift(self, other):
        if isinstance(other, NCPolynomial):
            return other
        if isinstance(other, (int, float, Fraction, QSqrt2Scalar)):
            return NCPolynomial.constant(other)
        return None

    # -- comparison and text -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for position, monomial in enumerate(self.monomials()):
            coefficient = self._terms[monomial]
            if position == 0:
                parts.append(f"{_format_coefficient(coefficient)}*{monomial.word()}")
            elif _negative(coefficient):
                parts.append(f" - {_format_coefficient(-coefficient)}*{monomial.word()}")
            else:
                parts.append(f" + {_format_coefficient(coefficient)}*{monomial.word()}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"NCPolynomial({str(self)!r})"


def A(index: int) -> NCPolynomial:
    return NCPolynomial.letter("A", index)


def B(index: int) -> NCPolynomial:
    return NCPolynomial.letter("B", index)


def poly_mul(f: NCPolynomial, g: NCPolynomial) -> NCPolynomial:
    return f * g


def poly_adjoint(f: NCPolynomial) -> NCPolynomial:
    return f.adjoint()


def poly_substitute(f: NCPolynomial, mapping) -> NCPolynomial:
    return f.substitute(mapping)
