"""Conjugation of reduced B_4 images by M, which turns the Squier form diagonal.

M has Laurent entries but its inverse needs (1+t)^-1. All checks here stay in
the Laurent ring by working with adj(M) and det(M) = -(1+t)^2 / t^3 instead of
M^-1, dividing only when a rational-function result is requested.
"""
from dataclasses import dataclass
from functools import lru_cache

from ..algebra import QQ, Field, LaurentPoly, RatFunc, SqMatrix, lp
from ..braids import parse_braid
from ..errors import PreconditionError
from .representation import BurauKind, burau_matrix

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class DiagData:
    """M, its adjugate and determinant, the diagonal form D and the Laurent form K = adj(bar M) D adj(M)^T"""
    M: SqMatrix
    adjM: SqMatrix
    delta: LaurentPoly
    D: SqMatrix
    K: SqMatrix

    @property
    def field(self) -> Field:
        return self.M.field


@lru_cache(maxsize=None)
def diag_data(field: Field = QQ) -> DiagData:
    M = SqMatrix.from_strings([
        ["0", "1", "0"],
        ["t^-1 + 1", "-t^-1", "0"],
        ["0", "-t^-1", "t^-2 + t^-1"],
    ], field)
    adjM = M.adjugate()
    delta = M.det()
    phi = lp("t^-1 + t", field)
    D = SqMatrix.diagonal([LaurentPoly.one(field), phi, phi], field)
    K = M.bar().adjugate() * D * adjM.transpose()
    return DiagData(M=M, adjM=adjM, delta=delta, D=D, K=K)


def _check_shape(A: SqMatrix):
    if A.n != 3:
        raise PreconditionError(f"M-conjugation acts on 3x3 matrices, got {A.n}x{A.n}")


def conj_numerator(A: SqMatrix, direction: str = FORWARD) -> SqMatrix:
    """M A adj(M) (forward) or adj(M) A M (backward); divide by det M for the conjugate."""
    _check_shape(A)
    data = diag_data(A.field)
    if direction == FORWARD:
        return data.M * A * data.adjM
    if direction == BACKWARD:
        return data.adjM * A * data.M
    raise PreconditionError(f"Unknown direction '{direction}'")


def conj_M(A: SqMatrix, direction: str = FORWARD) -> SqMatrix:
    """M A M^-1 or M^-1 A M over Q(t); Laurent entries come back as LaurentPoly."""
    data = diag_data(A.field)
    N = conj_numerator(A, direction)
    inv_delta = RatFunc(data.delta).inverse()

    def divide(e):
        q = RatFunc.lift(e, A.field) * inv_delta
        return q.num if q.is_laurent() else q

    return N.map_entries(divide)


def is_laurent_conjugate(A: SqMatrix, direction: str = FORWARD) -> bool:
    return conj_M(A, direction).is_laurent()


def diagonal_unitarity_holds(A: SqMatrix) -> bool:
    """bar(X) D X^T = D for X = M A M^-1, checked as bar(N) D N^T = bar(delta) delta D with N = M A adj(M)."""
    data = diag_data(A.field)
    N = conj_numerator(A, FORWARD)
    scale = data.delta.bar() * data.delta
    return N.bar() * data.D * N.transpose() == data.D * scale


def j_prime_form(field: Field = QQ) -> SqMatrix:
    """J'_4 = bar(M)^-1 D (M^T)^-1 as a rational-function matrix."""
    data = diag_data(field)
    inv = RatFunc(data.delta.bar() * data.delta).inverse()
    return data.K.map_entries(lambda e: _simplify(RatFunc(e) * inv))


def j_prime_unitary(A: SqMatrix) -> bool:
    """bar(A) J'_4 A^T = J'_4, decided in the Laurent ring through K."""
    _check_shape(A)
    K = diag_data(A.field).K
    return A.bar() * K * A.transpose() == K


def _simplify(e: RatFunc):
    return e.num if e.is_laurent() else e


def reference_matrices(field: Field = QQ) -> dict:
    """Reference conjugates: s1, s2, s3, (s3 s2 s3)^2, S', T'."""
    return {
        "s1": SqMatrix.from_strings([["1", "0", "0"], ["0", "-t", "0"], ["0", "0", "1"]], field),
        "s2": SqMatrix.from_strings([
            ["(t - t^2)/(1 + t)", "(t^2)/(1 + t)", "(t^2)/(1 + t)"],
            ["(t^-1 + t)/(1 + t)", "(1)/(1 + t)", "(-t)/(1 + t)"],
            ["(t^-1 + t)/(1 + t)", "(-t)/(1 + t)", "(1)/(1 + t)"],
        ], field),
        "s3": SqMatrix.from_strings([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-t"]], field),
        "twist": SqMatrix.from_strings([
            ["t - t^2 + t^3", "t^2 - t^3", "0"],
            ["t^-1 - 1 + t - t^2", "1 - t + t^2", "0"],
            ["0", "0", "t^3"],
        ], field),
        "S'": SqMatrix.from_strings([["1", "0", "0"], ["0", "-t", "0"], ["0", "0", "-t^-1"]], field),
        "T'": SqMatrix.from_strings([
            ["-t^-1 + 1 - t", "0", "t - t^2"],
            ["t^-2 - t^-1 + 1 - t", "0", "-1 + t - t^2"],
            ["0", "-t^-1", "0"],
        ], field),
    }


def stabilizing_conjugate(A: SqMatrix) -> SqMatrix:
    """beta(s2) A beta(s2)^-1, the matrix whose M-conjugate decides stability."""
    s2 = burau_matrix(parse_braid("s2", 4), BurauKind.REDUCED, A.field)
    return s2 * A * s2.inverse()
