"""Evaluation-at-minus-one criteria for when M-conjugates of a reduced B_4 image stay Laurent."""
from dataclasses import dataclass
from typing import Optional

from ..algebra import Field, SqMatrix
from ..errors import PreconditionError
from .diagonalization import BACKWARD, FORWARD, is_laurent_conjugate, stabilizing_conjugate


@dataclass(frozen=True)
class LaurentCriteria:
    """p1: M A M^-1 is Laurent; p2: the s2-conjugate is too; p3: M^-1 A M is Laurent"""
    p1: bool
    p2: bool
    p3: bool

    def as_tuple(self):
        return (self.p1, self.p2, self.p3)


def laurent_criteria(A: SqMatrix, field: Optional[Field] = None) -> LaurentCriteria:
    """Decide the three criteria from A at t = -1 alone.

    Passing a prime field reduces the coefficients first, which gives the
    mod-p variants of the tame and stable conditions.
    """
    if A.n != 3:
        raise PreconditionError(f"criteria are stated for 3x3 matrices, got {A.n}x{A.n}")
    if not A.is_laurent():
        raise PreconditionError("criteria need a matrix over the Laurent ring")
    A = A.to_laurent()
    if field is not None and field != A.field:
        A = A.change_field(field)
    X = A.evaluate(-1).values()
    p1 = X[1][0] == 0 and X[1][2] == 0
    # (1, -1, -1) X = lam (1, -1, -1)
    left = [X[0][j] - X[1][j] - X[2][j] for j in range(3)]
    p2 = left[1] == -left[0] and left[2] == -left[0]
    # X (1, 1, 1)^T = lam (1, 1, 1)^T
    sums = [X[i][0] + X[i][1] + X[i][2] for i in range(3)]
    p3 = sums[0] == sums[1] == sums[2]
    return LaurentCriteria(p1, p2, p3)


def direct_criteria(A: SqMatrix, field: Optional[Field] = None) -> LaurentCriteria:
    """The same three facts read off the conjugated matrices themselves."""
    A = A.to_laurent()
    if field is not None and field != A.field:
        A = A.change_field(field)
    return LaurentCriteria(
        is_laurent_conjugate(A, FORWARD),
        is_laurent_conjugate(stabilizing_conjugate(A), FORWARD),
        is_laurent_conjugate(A, BACKWARD),
    )
