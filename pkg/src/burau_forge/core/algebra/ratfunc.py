"""Reduced rational functions in t.

A :class:`RatFunc` stores a Laurent numerator over a monic polynomial
denominator with nonzero constant term, and the two share no common factor.
Powers of t therefore always live in the numerator, and an element belongs
to the Laurent ring exactly when the denominator is 1.
"""
from typing import Any, List, Optional, Tuple

from ..errors import AlgebraError, FieldMismatchError, NotInvertibleError, ParseError, PoleError
from .fields import Field
from .laurent import SCALAR_TYPES, LaurentPoly


def _dense(f: LaurentPoly) -> List[Any]:
    """Coefficient list (constant term first) of a polynomial with low degree >= 0."""
    out = [f.field.zero()] * (f.degree() + 1)
    for k, c in f.terms():
        out[k] = c
    return out


def _trim(coeffs: List[Any]) -> List[Any]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def poly_divmod(a: List[Any], b: List[Any]) -> Tuple[List[Any], List[Any]]:
    a, b = _trim(list(a)), _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    lead_inv = 1 / b[-1]
    quotient = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] * lead_inv
        quotient[shift] = c
        if c:
            for j, bj in enumerate(b):
                rem[shift + j] = rem[shift + j] - c * bj
    rem = _trim(rem[:len(b) - 1])
    return quotient, rem


def poly_gcd(a: List[Any], b: List[Any]) -> List[Any]:
    """Monic gcd by the Euclidean algorithm."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead_inv = 1 / a[-1]
    return [c * lead_inv for c in a]


def _exact_quotient(f: LaurentPoly, g: List[Any]) -> LaurentPoly:
    low = f.low_degree()
    q, r = poly_divmod(_dense(f.shift(-low)), g)
    if r:
        raise AlgebraError("inexact polynomial division")
    return LaurentPoly.from_coefficients(f.field, q, low)


def poly_lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic lcm of two polynomials with nonzero constant terms."""
    g = poly_gcd(_dense(a), _dense(b))
    return _exact_quotient(a * b, g).scale(1 / (a.leading_coefficient() * b.leading_coefficient()))


class RatFunc:
    """num / den with den monic, den(0) != 0, gcd(num, den) = 1"""
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: Optional[LaurentPoly] = None):
        field = num.field
        if den is None:
            den = LaurentPoly.one(field)
        elif den.field != field:
            raise FieldMismatchError(f"{field.tag} vs {den.field.tag}")
        if den.is_zero():
            raise NotInvertibleError("zero denominator")
        self._hash = None
        if num.is_zero():
            self.num, self.den = num, LaurentPoly.one(field)
            return
        k = den.low_degree()
        lead_inv = 1 / den.leading_coefficient()
        den = den.shift(-k).scale(lead_inv)
        num = num.shift(-k).scale(lead_inv)
        if not den.is_constant():
            low = num.low_degree()
            g = poly_gcd(_dense(num.shift(-low)), _dense(den))
            if len(g) > 1:
                den = _exact_quotient(den, g)
                num = _exact_quotient(num, g)
        self.num, self.den = num, den

    @classmethod
    def lift(cls, value: Any, field: Field) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        return cls(LaurentPoly.constant(field, value))

    @property
    def field(self) -> Field:
        return self.num.field

    def _coerce(self, other) -> Optional["RatFunc"]:
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field.tag} vs {other.field.tag}")
            return other
        if isinstance(other, LaurentPoly):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field.tag} vs {other.field.tag}")
            return RatFunc(other)
        if isinstance(other, SCALAR_TYPES):
            return RatFunc(LaurentPoly.constant(self.field, other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

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
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise NotInvertibleError("zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def bar(self) -> "RatFunc":
        return RatFunc(self.num.bar(), self.den.bar())

    def evaluate(self, point: Any):
        x = self.field.element(point)
        d = self.den.evaluate(x)
        if not d:
            raise PoleError(f"{self} has a pole at t = {self.field.format_element(x)}")
        return self.num.evaluate(x) / d

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise AlgebraError(f"{self} is not a Laurent polynomial")
        return self.num

    def val_inf(self) -> int:
        """Valuation at infinity: deg(den) - deg(num)."""
        if self.num.is_zero():
            raise AlgebraError("valuation of zero is undefined")
        return self.den.degree() - self.num.degree()

    def change_field(self, field: Field) -> "RatFunc":
        return RatFunc(self.num.change_field(field), self.den.change_field(field))

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, LaurentPoly):
            return self.is_laurent() and self.num == other
        if isinstance(other, SCALAR_TYPES):
            return self.is_laurent() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.is_laurent() else hash((self.num, self.den))
        return self._hash

    def format(self) -> str:
        if self.is_laurent():
            return self.num.format()
        return f"({self.num.format()})/({self.den.format()})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RatFunc({self.field.tag}, '{self.format()}')"

    @classmethod
    def parse(cls, text: str, field: Field) -> "RatFunc":
        text = text.strip()
        if ")/(" in text and text.startswith("(") and text.endswith(")"):
            num_text, den_text = text[1:-1].split(")/(", 1)
            return cls(LaurentPoly.parse(num_text, field), LaurentPoly.parse(den_text, field))
        if "/(" in text:
            raise ParseError(f"Rational function must read '(num)/(den)': '{text}'")
        return cls(LaurentPoly.parse(text, field))


def parse_entry(text: str, field: Field):
    """A matrix entry: Laurent polynomial text, or '(num)/(den)' for a rational function."""
    value = RatFunc.parse(text, field)
    return value.num if value.is_laurent() else value
