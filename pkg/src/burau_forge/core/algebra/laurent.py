"""Sparse Laurent polynomials in one variable t over an exact field."""
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple
import re

from ..errors import FieldMismatchError, NotInvertibleError, ParseError, PoleError
from .fields import (
    Field,
    GaussianRational,
    MultiQuadElement,
    Residue,
)

SCALAR_TYPES = (int, Fraction, GaussianRational, Residue, MultiQuadElement)

_TERM_RE = re.compile(
    r"\s*(?:"
    r"(?P<coef>\([^()]*\)|\{[^{}]*\}|\d+(?:/\d+)?)"
    r"(?:\s*\*\s*t(?:\s*\^\s*(?P<exp1>\(\s*-?\d+\s*\)|-?\d+))?)?"
    r"|(?P<var>t)(?:\s*\^\s*(?P<exp2>\(\s*-?\d+\s*\)|-?\d+))?"
    r")\s*"
)


class LaurentPoly:
    """Immutable sparse mapping exponent -> nonzero coefficient"""
    __slots__ = ("field", "_terms", "_hash")

    def __init__(self, field: Field, terms: Optional[Mapping[int, Any]] = None):
        clean: Dict[int, Any] = {}
        if terms:
            for k, c in terms.items():
                c = field.element(c)
                if c:
                    clean[int(k)] = c
        self.field = field
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, field: Field, terms: Dict[int, Any]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj._terms = terms
        obj._hash = None
        return obj

    # Constructors

    @classmethod
    def zero(cls, field: Field) -> "LaurentPoly":
        return cls._wrap(field, {})

    @classmethod
    def one(cls, field: Field) -> "LaurentPoly":
        return cls._wrap(field, {0: field.one()})

    @classmethod
    def constant(cls, field: Field, c: Any) -> "LaurentPoly":
        return cls(field, {0: c})

    @classmethod
    def monomial(cls, field: Field, c: Any, k: int) -> "LaurentPoly":
        return cls(field, {k: c})

    @classmethod
    def t(cls, field: Field, k: int = 1) -> "LaurentPoly":
        return cls._wrap(field, {k: field.one()})

    @classmethod
    def from_coefficients(cls, field: Field, coeffs: Iterable[Any], low: int = 0) -> "LaurentPoly":
        return cls(field, {low + j: c for j, c in enumerate(coeffs)})

    # Inspection

    def terms(self) -> List[Tuple[int, Any]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Tuple[int, Any]]:
        return iter(self.terms())

    def coefficient(self, k: int):
        return self._terms.get(k, self.field.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get(0) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coefficient(0)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no low degree")
        return min(self._terms)

    def leading_coefficient(self):
        return self._terms[self.degree()]

    def trailing_coefficient(self):
        return self._terms[self.low_degree()]

    def span(self) -> int:
        return self.degree() - self.low_degree() if self._terms else 0

    # Arithmetic

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field.tag} vs {other.field.tag}")
            return other
        if isinstance(other, SCALAR_TYPES):
            return LaurentPoly.constant(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._wrap(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap(self.field, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return LaurentPoly.zero(self.field)
        out: Dict[int, Any] = {}
        for ka, ca in self._terms.items():
            for kb, cb in o._terms.items():
                k = ka + kb
                s = out.get(k)
                out[k] = ca * cb if s is None else s + ca * cb
        return LaurentPoly._wrap(self.field, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Any) -> "LaurentPoly":
        c = self.field.element(c)
        if not c:
            return LaurentPoly.zero(self.field)
        return LaurentPoly._wrap(self.field, {k: v * c for k, v in self._terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._wrap(self.field, {e + k: c for e, c in self._terms.items()})

    def unit_inverse(self) -> "LaurentPoly":
        """Inverse of a unit c*t^k of the Laurent ring."""
        if not self.is_monomial():
            raise NotInvertibleError(f"{self} is not a unit of the Laurent ring")
        (k, c), = self._terms.items()
        return LaurentPoly._wrap(self.field, {-k: 1 / c})

    def __pow__(self, k: int):
        if k < 0:
            return self.unit_inverse() ** (-k)
        result, base = LaurentPoly.one(self.field), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        """Division by a unit or a scalar; anything else becomes a rational function."""
        if isinstance(other, SCALAR_TYPES):
            return self.scale(1 / self.field.element(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_monomial():
            return self * o.unit_inverse()
        from .ratfunc import RatFunc
        return RatFunc(self, o)

    def bar(self) -> "LaurentPoly":
        """The involution t -> 1/t combined with coefficient conjugation."""
        return LaurentPoly._wrap(self.field, {-k: c.conjugate() for k, c in self._terms.items()})

    def evaluate(self, point: Any):
        x = self.field.element(point)
        if not x:
            raise PoleError("Laurent polynomials are evaluated at invertible points only")
        total = self.field.zero()
        for k, c in self._terms.items():
            total = total + c * x ** k
        return total

    def change_field(self, field: Field) -> "LaurentPoly":
        return LaurentPoly(field, self._terms)

    def map_coefficients(self, func) -> "LaurentPoly":
        return LaurentPoly(self.field, {k: func(c) for k, c in self._terms.items()})

    # Comparison

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, SCALAR_TYPES):
            return self.is_constant() and self.coefficient(0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.tag, frozenset(self._terms.items())))
        return self._hash

    # Text

    def _format_term(self, mag: Any, k: int) -> str:
        coef = self.field.format_element(mag)
        if k == 0:
            return coef
        var = "t" if k == 1 else f"t^{k}"
        if mag == 1:
            return var
        return f"{coef}*{var}"

    def format(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, (k, c) in enumerate(self.terms()):
            negative = self.field.is_negative(c)
            body = self._format_term(-c if negative else c, k)
            if idx == 0:
                pieces.append("-" + body if negative else body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self.field.tag}, '{self.format()}')"

    @classmethod
    def parse(cls, text: str, field: Field) -> "LaurentPoly":
        text = text.strip()
        if not text:
            raise ParseError("Empty polynomial text")
        terms: Dict[int, Any] = {}
        pos, first = 0, True
        while pos < len(text):
            while pos < len(text) and text[pos].isspace():
                pos += 1
            sign = 1
            if text[pos] in "+-":
                sign = -1 if text[pos] == "-" else 1
                pos += 1
            elif not first:
                raise ParseError(f"Expected '+' or '-' at position {pos} in '{text}'")
            match = _TERM_RE.match(text, pos)
            if not match or match.end() == pos or not (match.group("coef") or match.group("var")):
                raise ParseError(f"Malformed term at position {pos} in '{text}'")
            coef_text = match.group("coef")
            if coef_text is None:
                coef = field.one()
                exp_text = match.group("exp2")
                k = 1 if exp_text is None else int(exp_text.strip("() "))
            else:
                if coef_text.startswith("(") and not field.has_i():
                    coef_text = coef_text[1:-1]
                coef = field.parse_element(coef_text)
                exp_text = match.group("exp1")
                if exp_text is not None:
                    k = int(exp_text.strip("() "))
                elif "*" in match.group(0):
                    k = 1
                else:
                    k = 0
            value = coef if sign > 0 else -coef
            terms[k] = terms[k] + value if k in terms else value
            pos, first = match.end(), False
        return cls(field, terms)


def lp(text: str, field: Field) -> LaurentPoly:
    """Shorthand parser used throughout the package for literal matrices."""
    return LaurentPoly.parse(text, field)
