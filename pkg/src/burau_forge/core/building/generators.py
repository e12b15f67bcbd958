"""Generators of the projective unitary group of D = diag(1, Phi, Phi) acting on the building.

The elementary and orthogonal families k_E, o_E need square roots and live in
a multi-quadratic tower; the unipotent family k[r] has representatives over
Q(i) with the radical cleared, which keeps the whole unipotent side exact
over the Gaussian rationals.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple
import logging
import re

from ..algebra import QQI, Field, GaussianRational, LaurentPoly, SqMatrix, tower_for
from ..algebra.fields import MultiQuadField, parse_rational
from ..errors import ParseError, PreconditionError

logger = logging.getLogger(__name__)

INFINITY = "inf"
NAMED = ("d1", "d2", "g1", "g2", "g3", "g4")
GENERATOR_CACHE_SIZE = 512

I = GaussianRational(0, 1)

# u[A] conjugators for the named generators, with their inverses written out
ROTATION = ((0, 1), (-1, 0))
ROTATION_INV = ((0, -1), (1, 0))
PHASE = ((I, 0), (0, -I))
PHASE_INV = ((-I, 0), (0, I))
SWAP_I = ((0, I), (I, 0))
SWAP_I_INV = ((0, -I), (-I, 0))


@dataclass(frozen=True)
class BuildingGen:
    """Generator of PU: ke (square of r, or 0 / inf), oe (2x2 orthogonal), uk (r, or 0 / inf), uu (2x2 unitary) or named"""
    kind: str
    param: Any = None

    @classmethod
    def ke(cls, r: Any) -> "BuildingGen":
        """k_E[r] for rational r >= 0 or 'inf'."""
        if r == INFINITY:
            return cls("ke", INFINITY)
        r = Fraction(r)
        if r < 0:
            raise PreconditionError(f"k_E[r] needs r >= 0, got {r}")
        return cls("ke", r * r)

    @classmethod
    def ke_sqrt(cls, square: Any) -> "BuildingGen":
        """k_E[sqrt(square)]"""
        square = Fraction(square)
        if square < 0:
            raise PreconditionError(f"k_E[sqrt(q)] needs q >= 0, got {square}")
        return cls("ke", square)

    @classmethod
    def oe(cls, rows: Sequence[Sequence[Any]]) -> "BuildingGen":
        return cls("oe", tuple(tuple(row) for row in rows))

    @classmethod
    def uk(cls, r: Any) -> "BuildingGen":
        if r == INFINITY:
            return cls("uk", INFINITY)
        r = Fraction(r)
        if r < 0:
            raise PreconditionError(f"unipotent generators need r >= 0, got {r}")
        return cls("uk", r)

    @classmethod
    def uu(cls, rows: Sequence[Sequence[Any]]) -> "BuildingGen":
        return cls("uu", tuple(tuple(row) for row in rows))

    @classmethod
    def named(cls, name: str) -> "BuildingGen":
        if name not in NAMED:
            raise PreconditionError(f"Unknown generator '{name}', expected one of {NAMED}")
        return cls("named", name)

    def format(self) -> str:
        if self.kind == "named":
            return self.param
        if self.kind == "ke":
            if self.param == INFINITY:
                return "kE[inf]"
            return f"kE[sqrt({self.param})]"
        if self.kind == "uk":
            return f"k[{self.param}]"
        return f"{self.kind}[{self.param}]"

    def __str__(self):
        return self.format()


def parse_gens(text: str) -> List[BuildingGen]:
    """Comma separated names such as 'd1,d2,g1'; 'k[2]' and 'k[inf]' name unipotent generators."""
    gens = []
    for token in (tok.strip() for tok in text.split(",")):
        if not token:
            continue
        if token in NAMED:
            gens.append(BuildingGen.named(token))
            continue
        match = re.fullmatch(r"k\[(inf|[^\]]+)\]", token)
        if not match:
            raise ParseError(f"Unknown building generator '{token}'")
        value = match.group(1)
        gens.append(BuildingGen.uk(INFINITY if value == INFINITY else parse_rational(value)))
    return gens


def phi_poly(field: Field) -> LaurentPoly:
    return LaurentPoly.t(field, -1) + LaurentPoly.t(field)


def unitary_form(field: Field) -> SqMatrix:
    """D = diag(1, Phi, Phi)"""
    p = phi_poly(field)
    return SqMatrix.diagonal([LaurentPoly.one(field), p, p], field)


def required_radicands(g: BuildingGen) -> List[Fraction]:
    if g.kind == "ke" and g.param not in (INFINITY, 0):
        return [g.param, 1 + g.param * g.param]
    return []


def tower_for_gens(gens: Iterable[BuildingGen], extra: Iterable[Any] = ()) -> MultiQuadField:
    """Smallest tower holding every square root the generators and ``extra`` need."""
    radicands = [q for g in gens for q in required_radicands(g)] + list(extra)
    return tower_for(radicands)


def _block(field: Field, corner: Any, A: Sequence[Sequence[Any]]) -> SqMatrix:
    zero = field.zero()
    return SqMatrix([[corner, zero, zero],
                     [zero, A[0][0], A[0][1]],
                     [zero, A[1][0], A[1][1]]], field)


def _ke_matrix(square, field: MultiQuadField) -> SqMatrix:
    t = LaurentPoly.t(field)
    one = LaurentPoly.one(field)
    if square == INFINITY:
        return SqMatrix.diagonal([one, -t, one], field)
    if square == 0:
        return SqMatrix.diagonal([-t, one, one], field)
    r = field.sqrt(square)
    inv_s = 1 / field.sqrt(1 + square * square)
    r2 = field.element(square)
    zero = LaurentPoly.zero(field)
    return SqMatrix([
        [(one.scale(r2) - t).scale(inv_s), t.scale(-r * inv_s), zero],
        [phi_poly(field).scale(-r * inv_s), (one - t.scale(r2)).scale(inv_s), zero],
        [zero, zero, one],
    ], field)


def _uk_matrix(r, field: Field) -> SqMatrix:
    t = LaurentPoly.t(field)
    one = LaurentPoly.one(field)
    i = field.i()
    if r == INFINITY:
        return SqMatrix.diagonal([one, t.scale(i), one], field)
    if r == 0:
        return SqMatrix.diagonal([t.scale(i), one, one], field)
    r = field.element(r)
    r2 = r * r
    mu = (r2 + i) / (1 + i * r2)
    zero = LaurentPoly.zero(field)
    return SqMatrix([
        [one.scale(r2) - t, t.scale(-r * mu), zero],
        [phi_poly(field).scale(-r), (one - t.scale(r2)).scale(mu), zero],
        [zero, zero, one.scale(r2 + i)],
    ], field)


def conjugate_by_unitary(A: Sequence[Sequence[Any]], A_inv: Sequence[Sequence[Any]], X: SqMatrix) -> SqMatrix:
    field = X.field
    return _block(field, field.one(), A) * X * _block(field, field.one(), A_inv)


def _named_matrix(name: str, field: Field) -> SqMatrix:
    d1 = _uk_matrix(INFINITY, field)
    g1 = _uk_matrix(1, field)
    table = {
        "d1": lambda: d1,
        "d2": lambda: conjugate_by_unitary(ROTATION, ROTATION_INV, d1),
        "g1": lambda: g1,
        "g2": lambda: conjugate_by_unitary(ROTATION, ROTATION_INV, g1),
        "g3": lambda: conjugate_by_unitary(PHASE, PHASE_INV, g1),
        "g4": lambda: conjugate_by_unitary(SWAP_I, SWAP_I_INV, g1),
    }
    return table[name]()


def building_gen(g: BuildingGen, field: Optional[Field] = None) -> SqMatrix:
    """Projective representative of a generator.

    Elementary and orthogonal generators default to the smallest tower holding
    their radicals; everything else defaults to Q(i).
    """
    if field is None:
        field = tower_for_gens([g]) if g.kind in ("ke", "oe") else QQI
    return _generator_matrix(g, field)


# fields hash by tag; the explore workers share this cache
@lru_cache(maxsize=GENERATOR_CACHE_SIZE)
def _generator_matrix(g: BuildingGen, field: Field) -> SqMatrix:
    if g.kind == "ke":
        if not isinstance(field, MultiQuadField):
            raise PreconditionError(f"k_E generators live in a multi-quadratic tower, not {field.tag}")
        M = _ke_matrix(g.param, field)
    elif g.kind == "oe":
        M = _block(field, field.one(), [[field.element(x) for x in row] for row in g.param])
    elif g.kind in ("uk", "uu", "named"):
        if not field.has_i():
            raise PreconditionError(f"unipotent-side generators need i, which {field.tag} lacks")
        if g.kind == "uk":
            M = _uk_matrix(g.param, field)
        elif g.kind == "uu":
            M = _block(field, field.one(), [[field.element(x) for x in row] for row in g.param])
        else:
            M = _named_matrix(g.param, field)
    else:
        raise PreconditionError(f"Unknown generator kind '{g.kind}'")
    return M


def named_matrices(field: Field = QQI) -> Dict[str, SqMatrix]:
    return {name: building_gen(BuildingGen.named(name), field) for name in NAMED}


def phi(B: SqMatrix) -> Tuple[Any, Any]:
    """(b12, b13) of B at t = -i, for B in the unipotent kernel."""
    field = B.field
    if B.n != 3 or not B.is_laurent():
        raise PreconditionError("phi is defined on 3x3 Laurent matrices")
    X = B.to_laurent().evaluate(-field.i()).values()
    lead = X[0][0]
    if not lead:
        raise PreconditionError("evaluation at t = -i has a zero (1,1) entry")
    X = [[x / lead for x in row] for row in X]
    unipotent = (X[1][1] == 1 and X[2][2] == 1 and X[1][0] == 0 and X[2][0] == 0
                 and X[2][1] == 0 and X[1][2] == 0)
    if not unipotent:
        raise PreconditionError("matrix is not in the unipotent kernel: its value at t = -i is not unipotent")
    return X[0][1], X[0][2]


def in_unipotent_kernel(B: SqMatrix) -> bool:
    """Upper unipotent at t = -i with zero (2,3) and (3,2) entries."""
    try:
        phi(B)
    except PreconditionError:
        return False
    return True


def phi_closed_form(a1: Any, a2: Any, r: Any) -> Tuple[Any, Any]:
    """phi(u[A] k[r] u[A]^-1) for A = [[a1, a2], [-bar a2, bar a1]]."""
    a1, a2, r = QQI.element(a1), QQI.element(a2), QQI.element(r)
    c = r * (r * r + I) / (r ** 4 + 1)
    return a1.conjugate() * c, -a2 * c
