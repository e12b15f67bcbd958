"""Immutable square matrices over Laurent polynomials or rational functions."""
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple
import logging

from ..errors import AlgebraError, FieldMismatchError, NotInvertibleError
from .fields import Field
from .laurent import SCALAR_TYPES, LaurentPoly
from .ratfunc import RatFunc, parse_entry, poly_lcm

logger = logging.getLogger(__name__)

Entry = Any  # LaurentPoly | RatFunc


def _popcount_above(mask: int, j: int) -> int:
    return bin(mask >> (j + 1)).count("1")


class SqMatrix:
    """n x n matrix with ring entries; all arithmetic is exact"""
    __slots__ = ("rows", "n", "field", "_hash")

    def __init__(self, rows: Sequence[Sequence[Entry]], field: Optional[Field] = None):
        n = len(rows)
        if n == 0:
            raise AlgebraError("empty matrix")
        if field is None:
            field = next(e.field for row in rows for e in row if hasattr(e, "field"))
        converted = []
        for row in rows:
            if len(row) != n:
                raise AlgebraError(f"row of length {len(row)} in a {n}x{n} matrix")
            out_row = []
            for e in row:
                if isinstance(e, (LaurentPoly, RatFunc)):
                    if e.field != field:
                        raise FieldMismatchError(f"{e.field.tag} entry in {field.tag} matrix")
                    out_row.append(e)
                else:
                    out_row.append(LaurentPoly.constant(field, e))
            converted.append(tuple(out_row))
        self.rows: Tuple[Tuple[Entry, ...], ...] = tuple(converted)
        self.n = n
        self.field = field
        self._hash = None

    # Constructors

    @classmethod
    def identity(cls, n: int, field: Field) -> "SqMatrix":
        one, zero = LaurentPoly.one(field), LaurentPoly.zero(field)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, n: int, field: Field) -> "SqMatrix":
        zero = LaurentPoly.zero(field)
        return cls([[zero] * n for _ in range(n)], field)

    @classmethod
    def diagonal(cls, entries: Sequence[Entry], field: Field) -> "SqMatrix":
        n = len(entries)
        zero = LaurentPoly.zero(field)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def elementary(cls, n: int, i: int, j: int, entry: Entry, field: Field) -> "SqMatrix":
        """Identity plus ``entry`` at (i, j); i != j."""
        if i == j:
            raise AlgebraError(f"elementary matrices need distinct indices, got ({i}, {j})")
        one, zero = LaurentPoly.one(field), LaurentPoly.zero(field)
        return cls([[one if r == c else entry if (r, c) == (i, j) else zero for c in range(n)]
                    for r in range(n)], field)

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], field: Field) -> "SqMatrix":
        return cls([[parse_entry(str(e), field) for e in row] for row in rows], field)

    # Access

    def __getitem__(self, ij: Tuple[int, int]) -> Entry:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> Iterable[Tuple[int, int, Entry]]:
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                yield i, j, e

    def map_entries(self, func: Callable[[Entry], Entry], field: Optional[Field] = None) -> "SqMatrix":
        return SqMatrix([[func(e) for e in row] for row in self.rows], field or self.field)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> List[List[Entry]]:
        return [[self.rows[i][j] for j in cols] for i in rows]

    def block(self, indices: Sequence[int]) -> "SqMatrix":
        return SqMatrix(self.submatrix(indices, indices), self.field)

    def _zero(self) -> LaurentPoly:
        return LaurentPoly.zero(self.field)

    def _one(self) -> LaurentPoly:
        return LaurentPoly.one(self.field)

    # Arithmetic

    def _check(self, other: "SqMatrix"):
        if other.n != self.n:
            raise AlgebraError(f"dimension mismatch {self.n} vs {other.n}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field.tag} vs {other.field.tag}")

    def __add__(self, other: "SqMatrix") -> "SqMatrix":
        self._check(other)
        return SqMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.field)

    def __sub__(self, other: "SqMatrix") -> "SqMatrix":
        self._check(other)
        return SqMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.field)

    def __neg__(self) -> "SqMatrix":
        return self.map_entries(lambda e: -e)

    def __mul__(self, other):
        if isinstance(other, SqMatrix):
            self._check(other)
            cols = list(zip(*other.rows))
            out = []
            for row in self.rows:
                out_row = []
                for col in cols:
                    acc = None
                    for a, b in zip(row, col):
                        if a.is_zero() or b.is_zero():
                            continue
                        acc = a * b if acc is None else acc + a * b
                    out_row.append(self._zero() if acc is None else acc)
                out.append(out_row)
            return SqMatrix(out, self.field)
        if isinstance(other, (LaurentPoly, RatFunc) + SCALAR_TYPES):
            return self.map_entries(lambda e: e * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, RatFunc) + SCALAR_TYPES):
            return self.map_entries(lambda e: other * e)
        return NotImplemented

    def transpose(self) -> "SqMatrix":
        return SqMatrix([list(col) for col in zip(*self.rows)], self.field)

    @property
    def T(self) -> "SqMatrix":
        return self.transpose()

    def bar(self) -> "SqMatrix":
        return self.map_entries(lambda e: e.bar())

    def det(self) -> Entry:
        """Leibniz expansion organised as a DP over subsets of used columns."""
        n = self.n
        dp = {0: self._one()}
        for i in range(n):
            nxt = {}
            row = self.rows[i]
            for mask, val in dp.items():
                for j in range(n):
                    if mask >> j & 1:
                        continue
                    a = row[j]
                    if a.is_zero():
                        continue
                    term = val * a
                    if _popcount_above(mask, j) & 1:
                        term = -term
                    key = mask | (1 << j)
                    nxt[key] = term if key not in nxt else nxt[key] + term
            dp = {m: v for m, v in nxt.items() if not v.is_zero()}
        return dp.get((1 << n) - 1, self._zero())

    def minor(self, i: int, j: int) -> "SqMatrix":
        keep_r = [r for r in range(self.n) if r != i]
        keep_c = [c for c in range(self.n) if c != j]
        return SqMatrix(self.submatrix(keep_r, keep_c), self.field)

    def adjugate(self) -> "SqMatrix":
        n = self.n
        if n == 1:
            return SqMatrix([[self._one()]], self.field)
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                d = self.minor(i, j).det()
                out[j][i] = -d if (i + j) & 1 else d
        return SqMatrix(out, self.field)

    def is_laurent(self) -> bool:
        return all(isinstance(e, LaurentPoly) or e.is_laurent() for _, _, e in self.entries())

    def to_laurent(self) -> "SqMatrix":
        if not self.is_laurent():
            raise AlgebraError("matrix has non-Laurent entries")
        return self.map_entries(lambda e: e if isinstance(e, LaurentPoly) else e.num)

    def to_ratfunc(self) -> "SqMatrix":
        return self.map_entries(lambda e: e if isinstance(e, RatFunc) else RatFunc(e))

    def inverse(self) -> "SqMatrix":
        """Exact inverse; Laurent matrices need a unit determinant c*t^k."""
        d = self.det()
        if d.is_zero():
            raise NotInvertibleError("singular matrix")
        adj = self.adjugate()
        if isinstance(d, LaurentPoly) and self.is_laurent():
            if not d.is_monomial():
                raise NotInvertibleError(
                    f"determinant {d} is not a unit of the Laurent ring; use rational_inverse()")
            return adj * d.unit_inverse()
        return adj.to_ratfunc() * RatFunc.lift(d, self.field).inverse()

    def rational_inverse(self) -> "SqMatrix":
        """Inverse over the rational function field; Laurent entries are kept where exact."""
        d = RatFunc.lift(self.det(), self.field)
        if d.is_zero():
            raise NotInvertibleError("singular matrix")
        inv_d = d.inverse()
        return self.adjugate().map_entries(lambda e: _simplify(RatFunc.lift(e, self.field) * inv_d))

    def __pow__(self, k: int) -> "SqMatrix":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = SqMatrix.identity(self.n, self.field)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, point: Any) -> "SqMatrix":
        """Constant matrix obtained by substituting t = point."""
        return self.map_entries(lambda e: LaurentPoly.constant(self.field, e.evaluate(point)))

    def values(self) -> List[List[Any]]:
        """Field elements of a constant matrix."""
        return [[e.constant_value() if isinstance(e, LaurentPoly) else e.to_laurent().constant_value()
                 for e in row] for row in self.rows]

    def change_field(self, field: Field) -> "SqMatrix":
        return SqMatrix([[e.change_field(field) for e in row] for row in self.rows], field)

    def direct_sum(self, other: "SqMatrix") -> "SqMatrix":
        n, m = self.n, other.n
        zero = self._zero()
        rows = [list(r) + [zero] * m for r in self.rows]
        rows += [[zero] * n + list(r) for r in other.rows]
        return SqMatrix(rows, self.field)

    # Predicates

    def is_zero(self) -> bool:
        return all(e.is_zero() for _, _, e in self.entries())

    def is_identity(self) -> bool:
        return all((e == 1) if i == j else e.is_zero() for i, j, e in self.entries())

    def is_scalar(self) -> bool:
        first = self.rows[0][0]
        return all((e == first) if i == j else e.is_zero() for i, j, e in self.entries())

    def commutes_with(self, other: "SqMatrix") -> bool:
        return self * other == other * self

    # Comparison and text

    def __eq__(self, other):
        if not isinstance(other, SqMatrix):
            return NotImplemented
        return self.n == other.n and self.field == other.field and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.tag, self.rows))
        return self._hash

    def to_strings(self) -> List[List[str]]:
        return [[e.format() for e in row] for row in self.rows]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_strings()) + "]"

    def __repr__(self):
        return f"SqMatrix({self.field.tag}, {self})"


def _simplify(e: RatFunc) -> Entry:
    return e.num if e.is_laurent() else e


def first_nonzero(A: SqMatrix) -> Tuple[int, int]:
    for i, j, e in A.entries():
        if not e.is_zero():
            return i, j
    raise AlgebraError("zero matrix has no projective class")


def projective_canonical(A: SqMatrix) -> SqMatrix:
    """Canonical Laurent representative of the scalar class of A.

    Divide by the first nonzero entry in row-major order, then clear
    denominators with their monic lcm. The first nonzero entry of the result
    is that lcm: monic with nonzero constant term.
    """
    i0, j0 = first_nonzero(A)
    pivot = RatFunc.lift(A[i0, j0], A.field)
    scaled = [[RatFunc.lift(e, A.field) / pivot for e in row] for row in A.rows]
    common = LaurentPoly.one(A.field)
    for row in scaled:
        for e in row:
            if not e.den.is_constant():
                common = poly_lcm(common, e.den)
    return SqMatrix([[(e * common).to_laurent() for e in row] for row in scaled], A.field)


def projectively_equal(A: SqMatrix, B: SqMatrix) -> bool:
    """A = c*B for a nonzero scalar function c, decided by cross multiplication."""
    if A.n != B.n or A.field != B.field:
        return False
    zero_a = [e.is_zero() for _, _, e in A.entries()]
    zero_b = [e.is_zero() for _, _, e in B.entries()]
    if zero_a != zero_b or all(zero_a):
        return False
    i0, j0 = first_nonzero(A)
    a0, b0 = A[i0, j0], B[i0, j0]
    return all(a * b0 == b * a0 for (_, _, a), (_, _, b) in zip(A.entries(), B.entries()))


def projective_ratio(A: SqMatrix, B: SqMatrix) -> Optional[Entry]:
    """The scalar c with A = c*B, or None."""
    if not projectively_equal(A, B):
        return None
    i0, j0 = first_nonzero(B)
    return _simplify(RatFunc.lift(A[i0, j0], A.field) / RatFunc.lift(B[i0, j0], B.field))
