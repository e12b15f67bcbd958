"""Quaternionic pairs: elements of Q(F) written as [[g1, g2], [-Phi bar(g2), bar(g1)]]."""
from typing import Optional, Tuple

from ..algebra import Field, LaurentPoly, SqMatrix, projective_canonical
from ..errors import PreconditionError
from .generators import phi

Pair = Tuple[LaurentPoly, LaurentPoly]


def pair_mul(x: Pair, y: Pair, p: LaurentPoly) -> Pair:
    """Product of two quaternionic matrices, kept in pair form."""
    a, b = x
    c, d = y
    return a * c - p * b * d.bar(), a * d + b * c.bar()


def pair_matrix(pair: Pair, field: Field) -> SqMatrix:
    g1, g2 = pair
    return SqMatrix([[g1, g2], [-(phi(field) * g2.bar()), g1.bar()]], field)


def normalize_pair(pair: Pair) -> Pair:
    """Scale so that the leading coefficient of the first nonzero component is 1."""
    g1, g2 = pair
    pivot = g1.leading_coefficient() if g1 else g2.leading_coefficient()
    inv = 1 / pivot
    return g1.scale(inv), g2.scale(inv)


def pair_span(pair: Pair) -> int:
    """Spread between the highest and lowest t-degree over all four entries."""
    g1, g2 = pair
    highs, lows = [], []
    if g1:
        highs += [g1.degree(), -g1.low_degree()]
        lows += [g1.low_degree(), -g1.degree()]
    if g2:
        highs += [g2.degree(), 1 - g2.low_degree()]
        lows += [g2.low_degree(), -1 - g2.degree()]
    return max(highs) - min(lows)


def quaternion_pair(A: SqMatrix) -> Optional[Pair]:
    """(g1, g2) of a representative of [A] in quaternionic form, or None when [A] is not in Q(F).

    Only the powers of t are free to rescale, since a constant factor keeps
    the quaternionic shape over fields with trivial conjugation.
    """
    if A.n != 2:
        raise PreconditionError(f"quaternionic form needs a 2x2 matrix, got {A.n}x{A.n}")
    if A.field.has_i():
        raise PreconditionError("quaternionic pairs are defined over fields with trivial conjugation")
    C = projective_canonical(A)
    a, b, c, d = C[0, 0], C[0, 1], C[1, 0], C[1, 1]
    if a:
        if not d:
            return None
        twice_m = -(a.degree() + d.low_degree())
    else:
        if d or not b or not c:
            return None
        twice_m = 1 - b.low_degree() - c.degree()
    if twice_m % 2:
        return None
    m = twice_m // 2
    a, b, c, d = a.shift(m), b.shift(m), c.shift(m), d.shift(m)
    if d != a.bar() or c != -(phi(A.field) * b.bar()):
        return None
    return a, b


def in_quaternionic_group(A: SqMatrix) -> bool:
    return quaternion_pair(A) is not None
