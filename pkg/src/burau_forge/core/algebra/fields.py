"""Exact coefficient fields.

Four field families are supported: the rationals, the Gaussian rationals,
prime fields and multi-quadratic towers over the rationals. Each field object
coerces plain Python numbers into its own element type; the element types
implement ``+ - * /``, unary minus, ``conjugate()`` and hashing. Rational
elements are plain :class:`fractions.Fraction` values.
"""
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Tuple
import logging
import re

from ..errors import (
    AlgebraError,
    FieldMismatchError,
    NotInvertibleError,
    ParseError,
    RadicalTowerOverflow,
)

logger = logging.getLogger(__name__)

MAX_RADICALS = 6

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_GAUSSIAN_RE = re.compile(
    r"^\(?\s*(?:(?P<re>[+-]?\d+(?:/\d+)?)\s*)?"
    r"(?:(?P<isign>[+-])?\s*(?P<im>\d+(?:/\d+)?)?\s*i)?\s*\)?$"
)


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ParseError(f"Not a rational number: '{text}'")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    if den == 0:
        raise ParseError(f"Zero denominator in '{text}'")
    return Fraction(num, den)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def squarefree_decomposition(n: int) -> Tuple[int, List[int]]:
    """Write |n| = s^2 * m with m squarefree; return (s, primes of m)."""
    n = abs(n)
    if n == 0:
        raise AlgebraError("Zero has no squarefree part")
    s, primes = 1, []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            primes.append(d)
        d += 1
    if n > 1:
        primes.append(n)
    return s, primes


class GaussianRational:
    """Element a + b*i of Q(i)"""
    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(other) -> Optional["GaussianRational"]:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian rational zero has no inverse")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = GaussianRational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


class Residue:
    """Element of the prime field F_p"""
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other) -> Optional["Residue"]:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int):
            return Residue(other, self.p)
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise NotInvertibleError(f"{other} has no image in F_{self.p}")
            return Residue(other.numerator * pow(other.denominator, self.p - 2, self.p), self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Residue(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.p}")
        return Residue(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.p), self.p)

    def conjugate(self) -> "Residue":
        return self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"


class MultiQuadElement:
    """Coordinate vector over the products of square roots of a tower"""
    __slots__ = ("field", "coords")

    def __init__(self, field: "MultiQuadField", coords: Tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    def _lift(self, other) -> Optional["MultiQuadElement"]:
        if isinstance(other, MultiQuadElement):
            if other.field == self.field:
                return other
            return None
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.field.element(other)
        return None

    def _promote(self, other):
        """Bring two tower elements into a common tower."""
        o = self._lift(other)
        if o is not None:
            return self, o
        if isinstance(other, MultiQuadElement):
            joint = self.field.join(other.field)
            return joint.element(self), joint.element(other)
        return None, None

    def __add__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return MultiQuadElement(a.field, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return MultiQuadElement(a.field, tuple(x - y for x, y in zip(a.coords, b.coords)))

    def __rsub__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return b - a

    def __mul__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return a.field.multiply(a, b)

    __rmul__ = __mul__

    def __neg__(self):
        return MultiQuadElement(self.field, tuple(-x for x in self.coords))

    def inverse(self) -> "MultiQuadElement":
        return self.field.invert(self)

    def __truediv__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._promote(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "MultiQuadElement":
        return self.field.conjugate(self)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, MultiQuadElement):
            if other.field == self.field:
                return self.coords == other.coords
            a, b = self._promote(other)
            return a.coords == b.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.tag, self.coords))

    def __repr__(self):
        return f"MultiQuadElement({self.field.tag}, {self.field.format_element(self)})"


class Field(ABC):
    """An exact coefficient field identified by its tag"""
    tag: str = ""
    characteristic: int = 0

    @abstractmethod
    def element(self, value: Any) -> Any:
        """Coerce a Python number (or an element of a subfield) into this field."""

    @abstractmethod
    def format_element(self, x: Any) -> str:
        pass

    @abstractmethod
    def parse_element(self, text: str) -> Any:
        pass

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def is_negative(self, x: Any) -> bool:
        """Whether ``x`` prints with a leading minus sign."""
        return False

    def needs_parens(self, x: Any) -> bool:
        return False

    def has_i(self) -> bool:
        return False

    def i(self):
        raise AlgebraError(f"Field {self.tag} does not contain i")

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"{type(self).__name__}('{self.tag}')"


class RationalField(Field):
    tag = "q"

    def element(self, value: Any) -> Fraction:
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, GaussianRational):
            if value.im:
                raise FieldMismatchError(f"{value} is not rational")
            return value.re
        if isinstance(value, MultiQuadElement):
            if not value.is_rational():
                raise FieldMismatchError(f"{value} is not rational")
            return value.coords[0]
        if isinstance(value, Residue):
            raise FieldMismatchError("residues do not embed into Q")
        return Fraction(value)

    def format_element(self, x: Fraction) -> str:
        return str(x)

    def parse_element(self, text: str) -> Fraction:
        return parse_rational(text)

    def is_negative(self, x: Fraction) -> bool:
        return x < 0


class GaussianField(Field):
    tag = "qi"

    def element(self, value: Any) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return self.parse_element(value)
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value, 0)
        if isinstance(value, MultiQuadElement) and value.is_rational():
            return GaussianRational(value.coords[0], 0)
        raise FieldMismatchError(f"Cannot coerce {value!r} into Q(i)")

    def format_element(self, x: GaussianRational) -> str:
        if x.im == 0:
            return str(x.re)
        if x.im == 1:
            im = "i"
        elif x.im == -1:
            im = "-i"
        else:
            im = f"{x.im}i"
        if x.re == 0:
            return f"({im})"
        sign = "" if im.startswith("-") else "+"
        return f"({x.re}{sign}{im})"

    def parse_element(self, text: str) -> GaussianRational:
        text = text.strip()
        if "i" not in text:
            return GaussianRational(parse_rational(text.strip("()")), 0)
        match = _GAUSSIAN_RE.match(text)
        if not match:
            raise ParseError(f"Not a Gaussian rational: '{text}'")
        re_part = parse_rational(match.group("re")) if match.group("re") else Fraction(0)
        im_part = parse_rational(match.group("im")) if match.group("im") else Fraction(1)
        if match.group("isign") == "-":
            im_part = -im_part
        return GaussianRational(re_part, im_part)

    def is_negative(self, x: GaussianRational) -> bool:
        return x.im == 0 and x.re < 0

    def needs_parens(self, x: GaussianRational) -> bool:
        return x.im != 0

    def has_i(self) -> bool:
        return True

    def i(self) -> GaussianRational:
        return GaussianRational(0, 1)


class PrimeField(Field):

    def __init__(self, p: int):
        if not is_prime(p):
            raise AlgebraError(f"F_p requires p prime, got {p}")
        self.p = p
        self.tag = f"fp:{p}"
        self.characteristic = p

    def element(self, value: Any) -> Residue:
        if isinstance(value, Residue):
            if value.p != self.p:
                raise FieldMismatchError(f"F_{value.p} element in F_{self.p}")
            return value
        if isinstance(value, str):
            return self.parse_element(value)
        if isinstance(value, int):
            return Residue(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise NotInvertibleError(f"{value} has no image in F_{self.p}")
            return Residue(value.numerator * pow(value.denominator, self.p - 2, self.p), self.p)
        if isinstance(value, GaussianRational) and value.im == 0:
            return self.element(value.re)
        raise FieldMismatchError(f"Cannot coerce {value!r} into F_{self.p}")

    def format_element(self, x: Residue) -> str:
        return str(x.value)

    def parse_element(self, text: str) -> Residue:
        return self.element(parse_rational(text))


class MultiQuadField(Field):
    """Q(sqrt(m_1), ..., sqrt(m_k)) with prime radicands, optionally with i = sqrt(-1)"""

    def __init__(self, gens: Iterable[int]):
        gens = tuple(sorted(set(gens)))
        for g in gens:
            if g != -1 and not is_prime(g):
                raise AlgebraError(f"Tower radicands must be primes or -1, got {g}")
        if len(gens) > MAX_RADICALS:
            raise RadicalTowerOverflow(
                f"Tower of {len(gens)} radicals exceeds the cap of {MAX_RADICALS}")
        self.gens = gens
        self.k = len(gens)
        self.size = 1 << self.k
        self.tag = "mq:" + ",".join(str(g) for g in gens)
        self._index = {g: j for j, g in enumerate(gens)}
        # Structure constants: e_a * e_b = factor[a & b] * e_(a ^ b)
        self._factor = [self._mask_product(m) for m in range(self.size)]

    def _mask_product(self, mask: int) -> int:
        out = 1
        for j, g in enumerate(self.gens):
            if mask >> j & 1:
                out *= g
        return out

    def element(self, value: Any) -> MultiQuadElement:
        if isinstance(value, MultiQuadElement):
            if value.field == self:
                return value
            return self._embed(value)
        if isinstance(value, str):
            return self.parse_element(value)
        if isinstance(value, GaussianRational):
            out = self.element(value.re)
            if value.im:
                out = out + self.i() * value.im
            return out
        if isinstance(value, (int, Fraction)):
            coords = [Fraction(0)] * self.size
            coords[0] = Fraction(value)
            return MultiQuadElement(self, tuple(coords))
        raise FieldMismatchError(f"Cannot coerce {value!r} into {self.tag}")

    def _embed(self, value: MultiQuadElement) -> MultiQuadElement:
        source = value.field
        missing = set(source.gens) - set(self.gens)
        if missing:
            raise FieldMismatchError(f"{source.tag} does not embed into {self.tag}")
        coords = [Fraction(0)] * self.size
        for mask, c in enumerate(value.coords):
            if not c:
                continue
            target = 0
            for j, g in enumerate(source.gens):
                if mask >> j & 1:
                    target |= 1 << self._index[g]
            coords[target] = c
        return MultiQuadElement(self, tuple(coords))

    def join(self, other: "MultiQuadField") -> "MultiQuadField":
        return multi_quad(set(self.gens) | set(other.gens))

    def adjoin(self, radicand: Any) -> "MultiQuadField":
        """Smallest tower containing this one and the square root of ``radicand``."""
        q = Fraction(radicand)
        if q == 0:
            return self
        _, primes = squarefree_decomposition(q.numerator * q.denominator)
        extra = set(primes)
        if q < 0:
            extra.add(-1)
        if extra <= set(self.gens):
            return self
        tower = multi_quad(set(self.gens) | extra)
        logger.debug(f"Adjoined sqrt({q}): {self.tag} -> {tower.tag}")
        return tower

    def sqrt(self, radicand: Any) -> MultiQuadElement:
        """Positive square root of a rational, which must already live in the tower."""
        q = Fraction(radicand)
        if q == 0:
            return self.zero()
        num, den = q.numerator, q.denominator
        s, primes = squarefree_decomposition(num * den)
        mask = 0
        for p in primes:
            if p not in self._index:
                raise AlgebraError(f"sqrt({q}) needs sqrt({p}) outside {self.tag}")
            mask |= 1 << self._index[p]
        if q < 0:
            if -1 not in self._index:
                raise AlgebraError(f"sqrt({q}) needs i outside {self.tag}")
            mask |= 1 << self._index[-1]
        coords = [Fraction(0)] * self.size
        coords[mask] = Fraction(s, den)
        return MultiQuadElement(self, tuple(coords))

    def multiply(self, a: MultiQuadElement, b: MultiQuadElement) -> MultiQuadElement:
        out = [Fraction(0)] * self.size
        factor = self._factor
        for ma, ca in enumerate(a.coords):
            if not ca:
                continue
            for mb, cb in enumerate(b.coords):
                if not cb:
                    continue
                out[ma ^ mb] += ca * cb * factor[ma & mb]
        return MultiQuadElement(self, tuple(out))

    def flip(self, x: MultiQuadElement, j: int) -> MultiQuadElement:
        """Galois conjugation negating the j-th radical."""
        return MultiQuadElement(self, tuple(
            -c if mask >> j & 1 else c for mask, c in enumerate(x.coords)))

    def invert(self, x: MultiQuadElement) -> MultiQuadElement:
        if not x:
            raise ZeroDivisionError(f"zero has no inverse in {self.tag}")
        numerator, current = self.one(), x
        for j in reversed(range(self.k)):
            partner = self.flip(current, j)
            numerator = self.multiply(numerator, partner)
            current = self.multiply(current, partner)
        return MultiQuadElement(self, tuple(c / current.coords[0] for c in numerator.coords))

    def conjugate(self, x: MultiQuadElement) -> MultiQuadElement:
        if -1 in self._index:
            return self.flip(x, self._index[-1])
        return x

    def has_i(self) -> bool:
        return -1 in self._index

    def i(self) -> MultiQuadElement:
        if -1 not in self._index:
            raise AlgebraError(f"Field {self.tag} does not contain i")
        coords = [Fraction(0)] * self.size
        coords[1 << self._index[-1]] = Fraction(1)
        return MultiQuadElement(self, tuple(coords))

    def format_element(self, x: MultiQuadElement) -> str:
        if x.is_rational():
            return str(x.coords[0])
        return "{" + ",".join(str(c) for c in x.coords) + "}"

    def parse_element(self, text: str) -> MultiQuadElement:
        text = text.strip()
        if text.startswith("{") and text.endswith("}"):
            parts = [p for p in text[1:-1].split(",")]
            if len(parts) != self.size:
                raise ParseError(f"{self.tag} expects {self.size} coordinates, got {len(parts)}")
            return MultiQuadElement(self, tuple(parse_rational(p) for p in parts))
        return self.element(parse_rational(text))

    def is_negative(self, x: MultiQuadElement) -> bool:
        return x.is_rational() and x.coords[0] < 0

    def needs_parens(self, x: MultiQuadElement) -> bool:
        return False


QQ = RationalField()
QQI = GaussianField()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


@lru_cache(maxsize=None)
def _multi_quad(gens: Tuple[int, ...]) -> MultiQuadField:
    return MultiQuadField(gens)


def multi_quad(gens: Iterable[int]) -> MultiQuadField:
    return _multi_quad(tuple(sorted(set(gens))))


def tower_for(radicands: Iterable[Any], with_i: bool = False) -> MultiQuadField:
    """Smallest multi-quadratic tower holding the square roots of all radicands."""
    field = multi_quad([-1] if with_i else [])
    for q in radicands:
        field = field.adjoin(q)
    return field


def field_from_tag(tag: str) -> Field:
    tag = tag.strip()
    if tag == "q":
        return QQ
    if tag == "qi":
        return QQI
    if tag.startswith("fp:"):
        try:
            return prime_field(int(tag[3:]))
        except ValueError:
            raise ParseError(f"Bad prime in field tag '{tag}'")
    if tag.startswith("mq:"):
        body = tag[3:]
        try:
            gens = [int(g) for g in body.split(",")] if body else []
        except ValueError:
            raise ParseError(f"Bad radicand in field tag '{tag}'")
        return multi_quad(gens)
    raise ParseError(f"Unknown field tag '{tag}'")


def element_field(x: Any, default: Field = QQ) -> Field:
    """The smallest registered field an element naturally belongs to."""
    if isinstance(x, GaussianRational):
        return QQI
    if isinstance(x, Residue):
        return prime_field(x.p)
    if isinstance(x, MultiQuadElement):
        return x.field
    return default
