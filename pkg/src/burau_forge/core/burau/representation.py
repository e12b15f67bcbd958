"""Unreduced and reduced Burau matrices and the Squier forms they preserve."""
from enum import Enum
from functools import lru_cache
from typing import List

from ..algebra import QQ, Field, LaurentPoly, SqMatrix
from ..braids import BraidWord
from ..errors import PreconditionError


class BurauKind(Enum):
    UNREDUCED = "u"
    REDUCED = "r"

    @classmethod
    def parse(cls, text: str) -> "BurauKind":
        text = text.strip().lower()
        for kind in cls:
            if text in (kind.value, kind.name.lower()):
                return kind
        raise PreconditionError(f"Unknown Burau kind '{text}', expected u or r")

    def dimension(self, n: int) -> int:
        return n if self is BurauKind.UNREDUCED else n - 1


def _unreduced_generator(n: int, i: int, field: Field) -> SqMatrix:
    t = LaurentPoly.t(field)
    one = LaurentPoly.one(field)
    rows = SqMatrix.identity(n, field).rows
    rows = [list(r) for r in rows]
    k = i - 1
    rows[k][k], rows[k][k + 1] = one - t, t
    rows[k + 1][k], rows[k + 1][k + 1] = one, LaurentPoly.zero(field)
    return SqMatrix(rows, field)


def _reduced_generator(n: int, i: int, field: Field) -> SqMatrix:
    t = LaurentPoly.t(field)
    one = LaurentPoly.one(field)
    if n == 2:
        return SqMatrix([[-t]], field)
    rows = [list(r) for r in SqMatrix.identity(n - 1, field).rows]
    k = i - 1
    if i == 1:
        rows[0][0], rows[0][1] = -t, one
    elif i == n - 1:
        rows[k][k - 1], rows[k][k] = t, -t
    else:
        rows[k][k - 1], rows[k][k], rows[k][k + 1] = t, -t, one
    return SqMatrix(rows, field)


@lru_cache(maxsize=None)
def generator_matrix(n: int, i: int, e: int, kind: BurauKind, field: Field = QQ) -> SqMatrix:
    if n < 2:
        raise PreconditionError(f"Burau matrices need n >= 2, got {n}")
    if kind is BurauKind.UNREDUCED:
        A = _unreduced_generator(n, i, field)
    else:
        A = _reduced_generator(n, i, field)
    return A if e > 0 else A.inverse()


def burau_matrix(w: BraidWord, kind: BurauKind = BurauKind.REDUCED, field: Field = QQ) -> SqMatrix:
    """Product of generator images in word order; the empty word maps to I."""
    if w.n < 2:
        raise PreconditionError(f"Burau matrices need n >= 2, got {w.n}")
    result = SqMatrix.identity(kind.dimension(w.n), field)
    for i, e in w.letters:
        result = result * generator_matrix(w.n, i, e, kind, field)
    return result


@lru_cache(maxsize=None)
def squier_form(n: int, field: Field = QQ) -> SqMatrix:
    """J_n: 1 on the diagonal, -t below it, -1/t above it."""
    t = LaurentPoly.t(field)
    t_inv = LaurentPoly.t(field, -1)
    one = LaurentPoly.one(field)
    return SqMatrix([[one if i == j else (-t if i > j else -t_inv) for j in range(n)]
                     for i in range(n)], field)


def row_vector_v(n: int, field: Field = QQ) -> List[LaurentPoly]:
    """v_n = (t, t^2, ..., t^n)"""
    return [LaurentPoly.t(field, k) for k in range(1, n + 1)]


def reduction_basis(n: int, field: Field = QQ) -> List[List[LaurentPoly]]:
    """Columns w_j = t^(1-j) e_j - t^(-j) e_(j+1), j = 1..n-1, spanning the kernel of x -> sum t^k x_k.

    For every braid, beta_u(b) * P = P * beta_r(b) with P = [w_1 ... w_(n-1)].
    Returned as an n x (n-1) list of rows.
    """
    zero = LaurentPoly.zero(field)
    P = [[zero] * (n - 1) for _ in range(n)]
    for j in range(1, n):
        P[j - 1][j - 1] = LaurentPoly.t(field, 1 - j)
        P[j][j - 1] = -LaurentPoly.t(field, -j)
    return P


@lru_cache(maxsize=None)
def reduced_squier_form(n: int, field: Field = QQ) -> SqMatrix:
    """Hermitian form preserved by beta_{n,r}: (P^T J_n^-1 bar(P))^-1 over Q(t)."""
    if n == 2:
        return SqMatrix.identity(1, field)
    if n < 2:
        raise PreconditionError(f"reduced Squier form needs n >= 2, got {n}")
    K = squier_form(n, field).rational_inverse()
    P = reduction_basis(n, field)
    m = n - 1
    rows = []
    for a in range(m):
        row = []
        for b in range(m):
            acc = LaurentPoly.zero(field)
            for i in range(n):
                if P[i][a].is_zero():
                    continue
                for j in range(n):
                    if P[j][b].is_zero():
                        continue
                    acc = P[i][a] * K[i, j] * P[j][b].bar() + acc
            row.append(acc)
        rows.append(row)
    return SqMatrix(rows, field).rational_inverse()
