"""Generators of the projective similitude group of D_2 = diag(1, t^-1 + t).

Every generator is kept as one fixed exact 2x2 lift, so that the
lifted identities can be checked exactly; :class:`ProjMat2` compares those
lifts up to scalars.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Iterable, Optional, Tuple
import logging
import re

from ..algebra import QQ, Field, LaurentPoly, SqMatrix, projective_canonical, projective_unitary_scalar
from ..algebra.fields import Residue, parse_rational
from ..errors import ParseError, PreconditionError

logger = logging.getLogger(__name__)

E_LABELS = ("-2t", "-4", "t^2")

Poly2 = Tuple[int, ...]


def poly2(coeffs: Iterable[int]) -> Poly2:
    """Normalized coefficient tuple (constant term first) of a polynomial over F_2."""
    out = [int(c) % 2 for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def poly2_add(f: Poly2, g: Poly2) -> Poly2:
    n = max(len(f), len(g))
    return poly2((f[k] if k < len(f) else 0) ^ (g[k] if k < len(g) else 0) for k in range(n))


def format_poly2(f: Poly2) -> str:
    if not f:
        return "0"
    terms = []
    for k in range(len(f) - 1, -1, -1):
        if f[k]:
            terms.append("1" if k == 0 else ("x" if k == 1 else f"x^{k}"))
    return " + ".join(terms)


_X_TERM_RE = re.compile(r"^(?:(1)|x(?:\^(\d+))?)$")


def parse_poly2(text: str) -> Poly2:
    """Parse 'x^2 + x + 1'; coefficients are read mod 2 so repeated terms cancel."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return ()
    coeffs: Dict[int, int] = {}
    for term in text.split("+"):
        match = _X_TERM_RE.match(term)
        if not match:
            raise ParseError(f"Malformed F_2[x] term '{term}'")
        k = 0 if match.group(1) else int(match.group(2) or 1)
        coeffs[k] = coeffs.get(k, 0) ^ 1
    top = max(coeffs)
    return poly2(coeffs.get(k, 0) for k in range(top + 1))


def format_scalar(x: Any) -> str:
    if isinstance(x, Residue):
        return str(x.value)
    return str(x)


@dataclass(frozen=True)
class GenId:
    """Generator letter: g[r], h0, h-1, au[f], al[f] or a central e[label]"""
    kind: str
    param: Any = None

    @classmethod
    def g(cls, r: Any) -> "GenId":
        if isinstance(r, (int, str)):
            r = parse_rational(r) if isinstance(r, str) else Fraction(r)
        return cls("g", r)

    @classmethod
    def au(cls, f: Iterable[int]) -> "GenId":
        return cls("au", poly2(f))

    @classmethod
    def al(cls, f: Iterable[int]) -> "GenId":
        return cls("al", poly2(f))

    @classmethod
    def e(cls, label: str) -> "GenId":
        if label not in E_LABELS:
            raise PreconditionError(f"Unknown central label '{label}', expected one of {E_LABELS}")
        return cls("e", label)

    def over(self, field: Field) -> "GenId":
        """The same letter with its parameter coerced into ``field``."""
        if self.kind != "g":
            return self
        return GenId("g", field.element(self.param))

    def format(self) -> str:
        if self.kind == "g":
            return f"g[{format_scalar(self.param)}]"
        if self.kind in ("au", "al"):
            return f"{self.kind}[{format_poly2(self.param)}]"
        if self.kind == "e":
            return f"e[{self.param}]"
        return self.kind

    def __str__(self):
        return self.format()


H0 = GenId("h0")
HM1 = GenId("h-1")


def phi(field: Field = QQ) -> LaurentPoly:
    """Phi = t^-1 + t"""
    return LaurentPoly.t(field, -1) + LaurentPoly.t(field)


def d2_form(field: Field = QQ) -> SqMatrix:
    return SqMatrix.diagonal([LaurentPoly.one(field), phi(field)], field)


def valid_parameter(r: Any) -> bool:
    """Elementary generators exist for r with r^4 != -1."""
    return bool(r ** 4 + 1)


def _f_of_phi(f: Poly2, field: Field) -> LaurentPoly:
    total = LaurentPoly.zero(field)
    power = LaurentPoly.one(field)
    p = phi(field)
    for c in f:
        if c:
            total = total + power
        power = power * p
    return total


def generator_lift(g: GenId, field: Field = QQ) -> SqMatrix:
    """The fixed lift of a generator over ``field``."""
    t = LaurentPoly.t(field)
    one = LaurentPoly.one(field)
    zero = LaurentPoly.zero(field)
    if g.kind == "g":
        r = field.element(g.param)
        if not valid_parameter(r):
            raise PreconditionError(f"g[{format_scalar(r)}] is undefined: r^4 = -1 over {field.tag}")
        r2 = r * r
        return SqMatrix([[t - r2, one.scale(r)], [-phi(field).scale(r), t.bar() - r2]], field)
    if g.kind == "h0":
        return SqMatrix.diagonal([one, -t], field)
    if g.kind == "h-1":
        return SqMatrix.diagonal([one, -one], field)
    if g.kind in ("au", "al"):
        if field.characteristic != 2:
            raise PreconditionError(f"{g.kind}[f] is defined in characteristic 2 only, not over {field.tag}")
        f = _f_of_phi(g.param, field)
        p = phi(field)
        diag = one + p * f
        upper, lower = (t.bar() + one) * f, (one + t) * p * f
        if g.kind == "al":
            upper, lower = (one + t) * f, (t.bar() + one) * p * f
        return SqMatrix([[diag, upper], [lower, diag]], field)
    if g.kind == "e":
        if g.param != "t^2" and field.characteristic == 2:
            raise PreconditionError(f"e[{g.param}] vanishes in characteristic 2")
        scalar = {"-2t": t.scale(-2), "-4": one.scale(-4), "t^2": t * t}[g.param]
        return SqMatrix.diagonal([scalar, scalar], field)
    raise PreconditionError(f"Unknown generator kind '{g.kind}'")


@dataclass(frozen=True, eq=False)
class ProjMat2:
    """Projective class of a 2x2 matrix, carrying the exact lift it came from"""
    lift: SqMatrix

    def __post_init__(self):
        if self.lift.n != 2:
            raise PreconditionError(f"ProjMat2 wraps 2x2 matrices, got {self.lift.n}x{self.lift.n}")

    @property
    def field(self) -> Field:
        return self.lift.field

    @cached_property
    def canonical(self) -> SqMatrix:
        return projective_canonical(self.lift)

    def __mul__(self, other: "ProjMat2") -> "ProjMat2":
        return ProjMat2(self.lift * other.lift)

    def inverse(self) -> "ProjMat2":
        # the adjugate represents the inverse class and stays Laurent
        return ProjMat2(self.lift.adjugate())

    def __pow__(self, k: int) -> "ProjMat2":
        base = self if k >= 0 else self.inverse()
        result = ProjMat2(SqMatrix.identity(2, self.field))
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other):
        if not isinstance(other, ProjMat2):
            return NotImplemented
        return self.field == other.field and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def is_identity(self) -> bool:
        return self.canonical.is_identity()

    def __str__(self):
        return str(self.canonical)


def gen_matrix(g: GenId, field: Field = QQ) -> ProjMat2:
    return ProjMat2(generator_lift(g, field))


def similitude_unit(A: SqMatrix) -> Optional[LaurentPoly]:
    """k with bar(A) D_2 A^T = k D_2, if k is a unit."""
    return projective_unitary_scalar(A, d2_form(A.field))


def cd_matrices(field: Field = QQ) -> Tuple[SqMatrix, SqMatrix]:
    """Upper-left blocks of S' and of the conjugated (s2 s3 s2)^2 s3^-6."""
    c = SqMatrix.from_strings([["1", "0"], ["0", "-t"]], field)
    d = SqMatrix.from_strings([
        ["t - t^2 + t^3", "t^2 - t^3"],
        ["t^-1 - 1 + t - t^2", "1 - t + t^2"],
    ], field)
    return c, d


COSET_NAMES = ("1", "h-1", "h0 h-1", "h0")
COSET_LETTERS = {"1": (), "h-1": (HM1,), "h0 h-1": (H0, HM1), "h0": (H0,)}


def coset_representatives(field: Field = QQ) -> Dict[str, SqMatrix]:
    """diag(1, 1), diag(1, -1), diag(1, t), diag(1, -t) keyed by the generator word they equal."""
    one = LaurentPoly.one(field)
    t = LaurentPoly.t(field)
    entries = {"1": one, "h-1": -one, "h0 h-1": t, "h0": -t}
    return {name: SqMatrix.diagonal([one, entries[name]], field) for name in COSET_NAMES}
