"""Membership tests for the target groups Gamma_n and Gamma'_4, and the trivial-corner embeddings."""
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple
import logging

from ..algebra import QQ, Field, LaurentPoly, RatFunc, SqMatrix, is_unitary
from ..errors import PreconditionError
from .diagonalization import j_prime_unitary
from .representation import BurauKind, generator_matrix, row_vector_v, squier_form

logger = logging.getLogger(__name__)

J_PRIME_NOTE = "J'_4 = bar(M)^-1 D (M^T)^-1, checked as bar(A) K A^T = K with K = adj(bar M) D adj(M)^T"


@dataclass
class GammaReport:
    """Per-condition outcome of a target-group membership test"""
    conditions: Dict[str, bool] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.conditions.values())

    def to_dict(self) -> dict:
        return {"passed": self.passed, "conditions": dict(self.conditions), "notes": list(self.notes)}


def _is_permutation(values: List[List]) -> bool:
    n = len(values)
    if any(v != 0 and v != 1 for row in values for v in row):
        return False
    rows_ok = all(sum(1 for v in row if v == 1) == 1 for row in values)
    cols_ok = all(sum(1 for i in range(n) if values[i][j] == 1) == 1 for j in range(n))
    return rows_ok and cols_ok


def gamma_membership(A: SqMatrix, n: int) -> GammaReport:
    """v_n A = v_n, A 1_n = 1_n, bar(A) J_n A^T = J_n and A at t = 1 is a permutation matrix."""
    if A.n != n:
        raise PreconditionError(f"expected a {n}x{n} matrix, got {A.n}x{A.n}")
    report = GammaReport()
    if not A.is_laurent():
        report.conditions["laurent"] = False
        return report
    A = A.to_laurent()
    v = row_vector_v(n, A.field)
    vA = [sum((v[i] * A[i, j] for i in range(n)), LaurentPoly.zero(A.field)) for j in range(n)]
    report.conditions["fixes_v"] = vA == v
    ones = [sum((A[i, j] for j in range(n)), LaurentPoly.zero(A.field)) for i in range(n)]
    report.conditions["fixes_ones"] = all(x == 1 for x in ones)
    report.conditions["unitary"] = is_unitary(A, squier_form(n, A.field))
    report.conditions["permutation_at_one"] = _is_permutation(A.evaluate(1).values())
    return report


@lru_cache(maxsize=None)
def reduced_images_at_one(n: int = 4, field: Field = QQ) -> FrozenSet[SqMatrix]:
    """beta_{n,r}(B_n) evaluated at t = 1: the symmetric group in its reflection representation."""
    gens = [generator_matrix(n, i, 1, BurauKind.REDUCED, field).evaluate(1) for i in range(1, n)]
    start = SqMatrix.identity(n - 1, field)
    seen = {start}
    queue = deque([start])
    while queue:
        X = queue.popleft()
        for g in gens:
            Y = X * g
            if Y not in seen:
                seen.add(Y)
                queue.append(Y)
    logger.debug(f"reduced images of S_{n} at t=1: {len(seen)} matrices")
    return frozenset(seen)


def gamma_prime_membership(A: SqMatrix) -> GammaReport:
    """Laurent entries, J'_4-unitarity and a permutation image at t = 1 (reduced, n = 4)."""
    if A.n != 3:
        raise PreconditionError(f"Gamma'_4 membership is tested on 3x3 matrices, got {A.n}x{A.n}")
    report = GammaReport(notes=[J_PRIME_NOTE])
    report.conditions["laurent"] = A.is_laurent()
    if not report.conditions["laurent"]:
        return report
    A = A.to_laurent()
    report.conditions["unitary"] = j_prime_unitary(A)
    report.conditions["permutation_at_one"] = A.evaluate(1) in reduced_images_at_one(4, A.field)
    return report


def _geometric_sum_inverse(n: int, field: Field) -> RatFunc:
    """1 / (1 + t + ... + t^(n-1))"""
    return RatFunc(LaurentPoly.one(field), LaurentPoly.from_coefficients(field, [1] * n))


def reduced_corner_column(R: SqMatrix) -> List:
    """First column c of the reduced image of diag(1, A), where R is the reduced image of A.

    With x = e_1 - 1_n / (1 + ... + t^(n-1)) written in the basis w_j as beta, c = (I - R) beta.
    """
    fld = R.field
    n = R.n + 1
    alpha = _geometric_sum_inverse(n, fld)
    x = [RatFunc(LaurentPoly.one(fld)) - alpha] + [-alpha] * (n - 1)
    beta = [x[0]]
    for k in range(2, n):
        beta.append(beta[-1] + x[k - 1] * LaurentPoly.t(fld, k - 1))
    c = []
    for i in range(R.n):
        acc = beta[i]
        for j in range(R.n):
            acc = acc - RatFunc.lift(R[i, j], fld) * beta[j]
        c.append(acc.num if acc.is_laurent() else acc)
    return c


def embed_trivial(A: SqMatrix, kind: BurauKind = BurauKind.UNREDUCED) -> SqMatrix:
    """Trivial first row and column; in reduced coordinates the first column is corrected."""
    one, zero = LaurentPoly.one(A.field), LaurentPoly.zero(A.field)
    if kind is BurauKind.UNREDUCED:
        report = gamma_membership(A, A.n)
        if not report.passed:
            raise PreconditionError(f"input is not in Gamma_{A.n}: {report.conditions}")
        rows = [[one] + [zero] * A.n] + [[zero] + list(r) for r in A.rows]
        return SqMatrix(rows, A.field)
    if not A.is_laurent():
        raise PreconditionError("reduced embedding needs a Laurent matrix")
    c = reduced_corner_column(A)
    if any(isinstance(x, RatFunc) for x in c):
        raise PreconditionError("input is not the reduced image of a Gamma member")
    rows = [[one] + [zero] * A.n] + [[c[i]] + list(A.rows[i]) for i in range(A.n)]
    return SqMatrix(rows, A.field)


def hereditary_embed(A: SqMatrix, kind: BurauKind = BurauKind.UNREDUCED) -> Tuple[SqMatrix, GammaReport]:
    """Embed and verify membership one size up (Gamma_{n+1}, or Gamma'_4 for 2x2 reduced input)."""
    if kind is BurauKind.UNREDUCED:
        B = embed_trivial(A, kind)
        return B, gamma_membership(B, B.n)
    B = embed_trivial(A, kind)
    if B.n == 3:
        return B, gamma_prime_membership(B)
    return B, GammaReport(conditions={"laurent": B.is_laurent()})
