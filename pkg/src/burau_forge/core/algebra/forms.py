"""Hermitian-form relations between matrices and forms."""
from typing import Optional

from .laurent import LaurentPoly
from .matrix import Entry, SqMatrix, first_nonzero
from .ratfunc import RatFunc
from ..errors import AlgebraError


def unitary_defect(A: SqMatrix, J: SqMatrix) -> SqMatrix:
    """bar(A) J A^T - J"""
    if A.n != J.n:
        raise AlgebraError(f"form of size {J.n} for a {A.n}x{A.n} matrix")
    return A.bar() * J * A.transpose() - J


def is_unitary(A: SqMatrix, J: SqMatrix) -> bool:
    return unitary_defect(A, J).is_zero()


def projective_unitary_scalar(A: SqMatrix, J: SqMatrix) -> Optional[LaurentPoly]:
    """The unit k = c*t^m with bar(A) J A^T = k J, or None when no such unit exists."""
    if A.n != J.n:
        raise AlgebraError(f"form of size {J.n} for a {A.n}x{A.n} matrix")
    P = A.bar() * J * A.transpose()
    i, j = first_nonzero(J)
    k = RatFunc.lift(P[i, j], A.field) / RatFunc.lift(J[i, j], A.field)
    if not k.is_laurent() or not k.num.is_monomial():
        return None
    k = k.num
    if not all(p == k * q for (_, _, p), (_, _, q) in zip(P.entries(), J.entries())):
        return None
    return k


def similitude_scalar(A: SqMatrix, J: SqMatrix) -> Optional[Entry]:
    """Any scalar function k (not necessarily a unit) with bar(A) J A^T = k J."""
    P = A.bar() * J * A.transpose()
    i, j = first_nonzero(J)
    k = RatFunc.lift(P[i, j], A.field) / RatFunc.lift(J[i, j], A.field)
    if not all(p == k * q for (_, _, p), (_, _, q) in zip(P.entries(), J.entries())):
        return None
    return k.num if k.is_laurent() else k
