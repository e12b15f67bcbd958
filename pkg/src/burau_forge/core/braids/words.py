"""Braid words and freely reduced words in a free group."""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple
import re

from ..errors import BraidError, ParseError

Letter = Tuple[int, int]


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for s, e in letters:
        if stack and stack[-1][0] == s and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((s, e))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word; letters are (symbol >= 1, +1 or -1)"""
    letters: Tuple[Letter, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> "FreeWord":
        return cls(free_reduce(letters))

    @classmethod
    def generator(cls, s: int, e: int = 1) -> "FreeWord":
        return cls(((s, e),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord.of(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((s, -e) for s, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return FreeWord.of(base.letters * abs(k))

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def max_symbol(self) -> int:
        return max((s for s, _ in self.letters), default=0)

    def substitute(self, images: Sequence["FreeWord"]) -> "FreeWord":
        """Image under the endomorphism x_s -> images[s-1]."""
        out: List[Letter] = []
        for s, e in self.letters:
            image = images[s - 1] if e > 0 else images[s - 1].inverse()
            out.extend(image.letters)
        return FreeWord.of(out)

    def format(self, prefix: str = "x") -> str:
        if not self.letters:
            return "1"
        lower, upper = prefix.lower(), prefix.upper()
        return " ".join(f"{lower if e > 0 else upper}{s}" for s, e in self.letters)

    def __str__(self):
        return self.format()

    @classmethod
    def parse(cls, text: str, prefix: str = "x") -> "FreeWord":
        """Parse 'x1 X2 x1' (capital letter = inverse); '1' is the empty word."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        pattern = re.compile(rf"^([{re.escape(prefix.lower())}{re.escape(prefix.upper())}])(\d+)$")
        letters = []
        for token in text.replace(",", " ").split():
            match = pattern.match(token)
            if not match or int(match.group(2)) < 1:
                raise ParseError(f"Malformed free-group letter '{token}'")
            e = 1 if match.group(1) == prefix.lower() else -1
            letters.append((int(match.group(2)), e))
        return cls.of(letters)


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators s_1 .. s_(n-1) of B_n"""
    n: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise BraidError(f"strand count must be positive, got {self.n}")
        for i, e in self.letters:
            if not 1 <= i <= self.n - 1:
                raise BraidError(f"generator s{i} out of range for B_{self.n}")
            if e not in (1, -1):
                raise BraidError(f"letter exponent must be +-1, got {e}")

    @classmethod
    def identity(cls, n: int) -> "BraidWord":
        return cls(n, ())

    @classmethod
    def generator(cls, n: int, i: int, e: int = 1) -> "BraidWord":
        return cls(n, ((i, e),))

    def _check(self, other: "BraidWord"):
        if other.n != self.n:
            raise BraidError(f"strand mismatch: B_{self.n} vs B_{other.n}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check(other)
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple((i, -e) for i, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """by * self * by^-1"""
        return by * self * by.inverse()

    def commutator(self, other: "BraidWord") -> "BraidWord":
        return self * other * self.inverse() * other.inverse()

    def writhe(self) -> int:
        return sum(e for _, e in self.letters)

    def shift(self, k: int, n: int = None) -> "BraidWord":
        """Reindex every generator s_i -> s_(i+k), optionally in a larger braid group."""
        return BraidWord(n or self.n + k, tuple((i + k, e) for i, e in self.letters))

    def __len__(self):
        return len(self.letters)

    def format(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{i}" if e > 0 else f"s{i}^-1" for i, e in self.letters)

    def __str__(self):
        return self.format()


def named_braids(n: int) -> dict:
    """Abbreviations understood by the parser."""
    if n < 4:
        return {}
    return {
        "b1": ((1, 1), (3, -1)),
        "b2": ((1, 1), (2, 1), (3, 1), (1, -1), (2, -1), (1, -1)),
    }


_TOKEN_RE = re.compile(r"\s*(\(|\)|s\d+|b\d+|\^\s*-?\d+)")


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse 's1 s3^-1', 'b2', '(s3 s2 s3)^2' into an unrolled braid word."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ParseError(f"Malformed braid token at position {pos} in '{text}'")
        tokens.append(match.group(1).replace(" ", ""))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    names = named_braids(n)
    letters, rest = _parse_sequence(tokens, 0, n, names)
    if rest != len(tokens):
        raise ParseError(f"Unbalanced parenthesis in '{text}'")
    return BraidWord(n, tuple(letters))


def _parse_sequence(tokens, pos, n, names):
    letters: List[Letter] = []
    while pos < len(tokens) and tokens[pos] != ")":
        token = tokens[pos]
        if token == "(":
            inner, pos = _parse_sequence(tokens, pos + 1, n, names)
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ParseError("Missing ')' in braid word")
            pos += 1
            atom = inner
        elif token.startswith("s"):
            i = int(token[1:])
            if not 1 <= i <= n - 1:
                raise BraidError(f"generator s{i} out of range for B_{n}")
            atom = [(i, 1)]
            pos += 1
        elif token.startswith("b"):
            if token not in names:
                raise ParseError(f"Unknown braid abbreviation '{token}' for B_{n}")
            atom = list(names[token])
            pos += 1
        else:
            raise ParseError(f"Unexpected token '{token}'")
        k = 1
        if pos < len(tokens) and tokens[pos].startswith("^"):
            k = int(tokens[pos][1:])
            pos += 1
        if k < 0:
            atom = [(i, -e) for i, e in reversed(atom)]
        letters.extend(atom * abs(k))
    return letters, pos
