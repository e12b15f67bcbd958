"""Words in the similitude generators and the bounded normal-form search in Q(F).

The search peels one elementary generator at a time off the right end of a
quaternionic pair. The top-degree coefficients decide which g[r] could end
the word, the bottom-degree ones which g[r]^-1 could, and a peel is kept
only when it strictly shrinks the degree span of the pair.
"""
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, List, Sequence, Set, Tuple, Union
import logging
import re

from ..algebra import QQ, Field, LaurentPoly, SqMatrix, projective_canonical, projectively_equal
from ..algebra.fields import parse_rational
from ..errors import BudgetExceeded, CheckFailure, ParseError, PreconditionError
from .generators import (
    COSET_LETTERS,
    H0,
    HM1,
    GenId,
    ProjMat2,
    coset_representatives,
    generator_lift,
    parse_poly2,
    phi,
    valid_parameter,
)
from .quaternion import Pair, normalize_pair, pair_mul, pair_span, quaternion_pair

logger = logging.getLogger(__name__)

GenLetter = Tuple[GenId, int]


def _merge(letters: Iterable[GenLetter]) -> Tuple[GenLetter, ...]:
    stack: List[GenLetter] = []
    for g, e in letters:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            total = stack[-1][1] + e
            stack.pop()
            if total:
                stack.append((g, total))
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True)
class GenWord:
    """Product of generator powers; adjacent equal letters are always merged"""
    letters: Tuple[GenLetter, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[GenLetter]) -> "GenWord":
        return cls(_merge(letters))

    def __mul__(self, other: "GenWord") -> "GenWord":
        return GenWord.of(self.letters + other.letters)

    def inverse(self) -> "GenWord":
        return GenWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def total_length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def over(self, field: Field) -> "GenWord":
        return GenWord.of((g.over(field), e) for g, e in self.letters)

    def format(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g.format() if e == 1 else f"{g.format()}^{e}" for g, e in self.letters)

    def __str__(self):
        return self.format()

    @classmethod
    def parse(cls, text: str) -> "GenWord":
        """Parse 'g[-1/2]^-1 g[6/5] h0^2 au[x + 1]'; '1' is the empty word."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        letters = []
        pos = 0
        while pos < len(text):
            match = _LETTER_RE.match(text, pos)
            if not match or match.end() == pos:
                raise ParseError(f"Malformed generator word at position {pos} in '{text}'")
            letters.append((_letter_from_match(match), int(match.group("exp") or 1)))
            pos = match.end()
        return cls.of(letters)


_LETTER_RE = re.compile(
    r"\s*(?:(?P<kind>g|au|al|e)\[(?P<param>[^\]]*)\]|(?P<plain>h0|h-1))"
    r"(?:\^(?P<exp>-?\d+))?\s*"
)


def _letter_from_match(match) -> GenId:
    if match.group("plain"):
        return H0 if match.group("plain") == "h0" else HM1
    kind, param = match.group("kind"), match.group("param").strip()
    if kind == "g":
        return GenId.g(parse_rational(param))
    if kind == "e":
        return GenId.e(param)
    f = parse_poly2(param)
    return GenId.au(f) if kind == "au" else GenId.al(f)


def word_matrix(word: GenWord, field: Field = QQ) -> SqMatrix:
    """Exact product of the generator lifts; negative powers use true inverses."""
    result = SqMatrix.identity(2, field)
    for g, e in word.letters:
        result = result * (generator_lift(g, field) ** e)
    return result


@dataclass(frozen=True)
class NotFound:
    """The bounded search found no word; this is not a proof of non-membership"""
    bound: int
    explored: int
    reason: str = "search exhausted"

    def __bool__(self):
        return False

    def __str__(self):
        return f"not found within {self.bound} letters ({self.explored} nodes, {self.reason})"


def _size(r) -> Fraction:
    if isinstance(r, Fraction):
        return abs(r)
    return Fraction(getattr(r, "value", 0))


def _candidates(pair: Pair) -> List[Tuple[object, int]]:
    """(r, +1) when g[r] may end the word, (r, -1) when g[r]^-1 may."""
    g1, g2 = pair
    out = []
    top = max(([g1.degree()] if g1 else []) + ([g2.degree() + 1] if g2 else []))
    a, b = g1.coefficient(top), g2.coefficient(top - 1)
    if a:
        out.append((b / a, 1))
    low = min(([g1.low_degree()] if g1 else []) + ([g2.low_degree() - 1] if g2 else []))
    a, b = g1.coefficient(low), g2.coefficient(low + 1)
    if a:
        out.append((-b / a, -1))
    return out


def _peel(pair: Pair, r, sign: int, field: Field, p: LaurentPoly) -> Pair:
    """Right-multiply by the inverse class of g[r]^sign."""
    t = LaurentPoly.t(field)
    if sign > 0:
        other = (t.bar() - r * r, LaurentPoly.constant(field, -r))
    else:
        other = (t - r * r, LaurentPoly.constant(field, r))
    return normalize_pair(pair_mul(pair, other, p))


@dataclass
class _Search:
    field: Field
    max_len: int
    step_budget: int
    explored: int = 0
    path: List[Tuple[object, int]] = dc_field(default_factory=list)

    def run(self, pair: Pair) -> bool:
        self.explored += 1
        if self.explored > self.step_budget:
            raise BudgetExceeded(f"normal-form search exceeded {self.step_budget} nodes")
        g1, g2 = pair
        if not g2 and g1.is_constant():
            return True
        if len(self.path) >= self.max_len:
            return False
        p = phi(self.field)
        span = pair_span(pair)
        last = self.path[-1] if self.path else None
        options = []
        for r, sign in _candidates(pair):
            if not valid_parameter(r):
                continue
            if last is not None and last[0] == r and last[1] == -sign:
                continue
            nxt = _peel(pair, r, sign, self.field, p)
            nxt_span = pair_span(nxt)
            if nxt_span >= span:
                continue
            options.append(((nxt_span, _size(r), 0 if sign > 0 else 1), r, sign, nxt))
        options.sort(key=lambda o: o[0])
        for _, r, sign, nxt in options:
            self.path.append((r, sign))
            logger.debug(f"peel g[{r}]^{sign} at depth {len(self.path)}")
            if self.run(nxt):
                return True
            self.path.pop()
        return False


def q_normal_form(W: Union[ProjMat2, SqMatrix], max_len: int = 8,
                  step_budget: int = 200000) -> Union[GenWord, NotFound]:
    """Reduced generator word for [W] in the similitude group of D_2.

    [W] is first moved into Q(F) by one of the four coset representatives;
    the representative's letters open the word.
    """
    A = W.lift if isinstance(W, ProjMat2) else W
    field = A.field
    if A.n != 2:
        raise PreconditionError(f"normal forms are computed for 2x2 matrices, got {A.n}x{A.n}")
    A = projective_canonical(A)
    prefix, pair = (), None
    for name, rep in coset_representatives(field).items():
        pair = quaternion_pair(rep.inverse() * A)
        if pair is not None:
            prefix = COSET_LETTERS[name]
            break
    if pair is None:
        raise PreconditionError("matrix is not in the projective similitude group of D_2")
    search = _Search(field, max_len, step_budget)
    try:
        found = search.run(normalize_pair(pair))
    except BudgetExceeded as e:
        logger.warning(str(e))
        return NotFound(bound=max_len, explored=search.explored, reason="step budget exhausted")
    if not found:
        logger.info(f"no normal form within {max_len} letters after {search.explored} nodes")
        return NotFound(bound=max_len, explored=search.explored)
    letters = [(g, 1) for g in prefix]
    letters += [(GenId("g", r), sign) for r, sign in reversed(search.path)]
    word = GenWord.of(letters)
    if not projectively_equal(word_matrix(word, field), A):
        raise CheckFailure("normal-form", f"word {word} does not reproduce the input")
    logger.info(f"normal form {word} found after {search.explored} nodes")
    return word


def basis_closure(basis: Iterable[GenId], field: Field = QQ) -> Set[GenId]:
    """Generators reachable from ``basis`` through h0^2 = g[0]^-1, the h0 and h-1 conjugation rules."""
    basis = {g.over(field) for g in basis}
    closure = set(basis)
    if H0 in basis:
        closure.add(GenId("g", field.zero()))
    changed = True
    while changed:
        changed = False
        for g in [g for g in closure if g.kind == "g"]:
            images = []
            if H0 in basis and g.param:
                images.append(-1 / g.param)
            if HM1 in basis:
                images.append(-g.param)
            for r in images:
                image = GenId("g", field.element(r))
                if image not in closure:
                    closure.add(image)
                    changed = True
    return closure


def subgroup_member_basis(w: GenWord, basis: Sequence[GenId], field: Field = QQ) -> bool:
    """Whether every letter of the reduced word lies in the closure of ``basis``."""
    closure = basis_closure(basis, field)
    return all(g.over(field) in closure for g, _ in w.letters)


def outside_letters(w: GenWord, basis: Sequence[GenId], field: Field = QQ) -> List[GenId]:
    closure = basis_closure(basis, field)
    return [g.over(field) for g, _ in w.letters if g.over(field) not in closure]

