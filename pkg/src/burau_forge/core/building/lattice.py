"""Vertices of the affine building of PGL_3 over F(t) at the valuation at infinity.

A vertex is the class of the lattice spanned over O_inf by the columns of an
invertible matrix, up to scalars. Classes are stored in a Hermite form: lower
triangular, diagonal entries pi^k with k_0 = 0, and each entry below the
diagonal reduced to the polynomial part of its expansion at infinity.
"""
from dataclasses import dataclass
from typing import List, Tuple
import logging

from ..algebra import LaurentPoly, RatFunc, SqMatrix
from ..errors import NotInvertibleError
from .valuation import pi_power, truncate_at_infinity, val_inf

logger = logging.getLogger(__name__)

ADJACENT_DIVISORS = ((0, 0, 1), (0, 1, 1))


@dataclass(frozen=True)
class LatticeClass:
    """Canonical Hermite representative of a lattice class"""
    rep: SqMatrix

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(val_inf(self.rep[i, i]) for i in range(self.rep.n))

    def key(self) -> Tuple:
        return (self.rep.field.tag,) + tuple(tuple(e.format() for e in row) for row in self.rep.rows)

    def __str__(self):
        return str(self.rep)


def lattice_canonical(X: SqMatrix) -> LatticeClass:
    """Column reduction over O_inf followed by pi-scaling and reduction below the diagonal."""
    field = X.field
    n = X.n
    cols: List[List[RatFunc]] = [[RatFunc.lift(X[i, j], field) for i in range(n)] for j in range(n)]
    for i in range(n):
        live = [j for j in range(i, n) if cols[j][i]]
        if not live:
            raise NotInvertibleError("singular matrix has no lattice class")
        p = min(live, key=lambda j: (val_inf(cols[j][i]), j))
        cols[i], cols[p] = cols[p], cols[i]
        k = val_inf(cols[i][i])
        unit = RatFunc(pi_power(field, k)) / cols[i][i]
        cols[i] = [e * unit for e in cols[i]]
        for j in range(i + 1, n):
            if cols[j][i]:
                q = cols[j][i] / cols[i][i]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
    ks = [val_inf(cols[i][i]) for i in range(n)]
    for i in range(1, n):
        pivot = RatFunc(pi_power(field, ks[i]))
        for j in range(i):
            e = cols[j][i]
            if not e:
                continue
            rep = truncate_at_infinity(e, ks[i])
            q = (e - rep) / pivot
            cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
    scale = LaurentPoly.t(field, ks[0])
    rows = [[(cols[j][i] * scale).to_laurent() for j in range(n)] for i in range(n)]
    return LatticeClass(SqMatrix(rows, field))


def lattice_equal(L1: LatticeClass, L2: LatticeClass) -> bool:
    return L1.rep == L2.rep


def vertex_type(L: LatticeClass) -> int:
    """Degree of the determinant of the representative, mod 3."""
    return (-val_inf(L.rep.det())) % 3


def _min_val(M: SqMatrix) -> int:
    return min(val_inf(e) for _, _, e in M.entries() if not e.is_zero())


def elem_divisors(L1: LatticeClass, L2: LatticeClass) -> Tuple[int, int, int]:
    """Smith invariants of L1^-1 L2 over O_inf, shifted to start at 0.

    adj(L1) L2 differs from L1^-1 L2 by a scalar, so it gives the same
    normalized invariants while staying Laurent.
    """
    Y = L1.rep.adjugate() * L2.rep
    if Y.n != 3:
        raise NotInvertibleError("elementary divisors are computed for 3x3 lattices")
    first = _min_val(Y)
    pairs = _min_val(Y.adjugate())
    full = val_inf(Y.det())
    e = (first, pairs - first, full - pairs)
    return (0, e[1] - e[0], e[2] - e[0])


def adjacent(L1: LatticeClass, L2: LatticeClass) -> bool:
    return elem_divisors(L1, L2) in ADJACENT_DIVISORS


def same_class_oracle(X1: SqMatrix, X2: SqMatrix) -> bool:
    """X1^-1 X2 = c U with U, U^-1 over O_inf, decided from elementary divisors alone."""
    return elem_divisors(LatticeClass(X1), LatticeClass(X2)) == (0, 0, 0)
