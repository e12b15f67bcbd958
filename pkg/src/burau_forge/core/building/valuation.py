"""The valuation at infinity on F(t), with uniformizer pi = t^-1."""
from typing import Any, Union

from ..algebra import LaurentPoly, RatFunc
from ..errors import AlgebraError

Scalar = Union[LaurentPoly, RatFunc]


def val_inf(f: Any) -> int:
    """deg(denominator) - deg(numerator); additive on products."""
    if isinstance(f, RatFunc):
        return f.val_inf()
    if isinstance(f, LaurentPoly):
        if f.is_zero():
            raise AlgebraError("valuation of zero is undefined")
        return -f.degree()
    if not f:
        raise AlgebraError("valuation of zero is undefined")
    return 0


def pi_power(field, k: int) -> LaurentPoly:
    """pi^k = t^-k"""
    return LaurentPoly.t(field, -k)


def truncate_at_infinity(f: Scalar, k: int) -> LaurentPoly:
    """Representative of f modulo pi^k O: the terms t^j of its expansion at infinity with j > -k.

    The expansion is produced by long division in descending powers of t, so
    only finitely many terms are ever computed.
    """
    f = RatFunc.lift(f, f.field)
    field = f.field
    if f.is_zero():
        return LaurentPoly.zero(field)
    den = f.den
    top, lead = den.degree(), den.leading_coefficient()
    rem = f.num
    terms = {}
    while rem and rem.degree() - top > -k:
        j = rem.degree() - top
        c = rem.leading_coefficient() / lead
        terms[j] = c
        rem = rem - den.scale(c).shift(j)
    return LaurentPoly(field, terms)
