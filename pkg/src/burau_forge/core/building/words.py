"""Fixed words in S', T' and in the generators d1, d2, g1 .. g4 of the subgroup H."""
from typing import Dict, List, Mapping, Sequence, Tuple
import re

from ..algebra import SqMatrix
from ..errors import ParseError

PowerWord = List[Tuple[str, int]]

_POWER_RE = re.compile(r"\s*([A-Za-z]+'?\d*)(?:\^(-?\d+))?\s*")

# a_j as words in S' and T'
ST_WORDS: Dict[int, str] = {
    1: "S^2 T^-2",
    2: "S T^3 S^-1 T^-1",
    3: "S T S T^-1",
    4: "T^2 S T S^-1 T^-1",
    5: "T^4",
    6: "T^3 S T^-1 S^-1",
    7: "T S T^-1 S",
    8: "T S T S^-1",
    9: "T S^2 T^-3",
}

# a_j as words in d1, d2, g1 .. g4
UNIPOTENT_WORDS: Dict[int, str] = {
    1: "d1^3 d2^-3 g4^2 g1^-2",
    2: "d1 d2^-1 g3^2 d1 g2^2 d2^-1 g3^-2 d1 d2^-1 g1^-2",
    3: "d1 g3^2 d1^-1 g1^-2",
    4: "g1^2 g4^-2 d2^-3 g3^-2 d1 g1^-2",
    5: "g1^2 d1^-1 g4^-2 d2^-1 g1^-2 d1 g4^2 d2",
    6: "g1^2 d1^-1 g4^-2 d2 g1^-2 d1^-1 g3^-2 d1^-1",
    7: "d2^2 g1^2 d1^-1 g3^2 d1",
    8: "d2 g1^2 d1^-3 g2^-2 d2^2",
    9: "d2^3 g1^2 d1^-2 g1^2 d1 g4^2 g1^-2",
}

# free generators of the kernel of the weight map, as words in d1, d2, g1 .. g4
L_WORDS: Dict[int, str] = {
    1: "d2 g1^2",
    2: "d1 g1^2",
    3: "g1 d1 g1",
    4: "g2^-1 g1",
    5: "g1 g2^-1",
    6: "g3^-1 g1",
    7: "g1 g3^-1",
    8: "g4^-1 g1",
    9: "g1 g4^-1",
}

# a_j in l1 .. l9 as published; only a3, a4 and a9 agree with their words in d, g.
# The words used for folding are rewritten from UNIPOTENT_WORDS instead.
A_IN_L_LISTED: Dict[int, str] = {
    1: "l2 l1^-1 l2 l1^-1 l2 l1^-1 l9 l3 l8^-1 l3^-1",
    2: "l2 l1^-1 l7^-1 l1 l6^-1 l2 l1^-1 l5^-1 l3 l4^-1 l1 l2 l6 l1^-1 l7 l2 l1^-2",
    3: "l2 l1^-1 l7^-1 l1 l6^-1 l1 l2^-1 l1^-1",
    4: "l1 l2 l1^-1 l8 l3^-1 l9 l6 l1^-1 l7 l2 l1^-2",
    5: "l1 l2 l1^-1 l2 l1^-1 l8 l3^-1 l1 l3^-2 l1^-1 l9 l1 l2^-1 l1^-1 l2 l1^-1 l9^-1 l3 l8^-1 l1 l2",
    6: "l1 l2 l1^-1 l8 l3^-1 l1 l3^-2 l1^-1 l9 l1 l2^-2 l6 l1^-1 l7 l1 l2^-1",
    7: "l1^2 l2^-1 l7^-1 l1 l6",
    8: "l1 l4 l3^-1 l5 l1 l2 l1 l2^-1",
    9: "l1^2 l2^-1 l1 l2^-1 l1 l2 l1^-1 l9^-1 l3 l8^-1 l1 l2^-1 l1^-1",
}

LISTED_AGREES: Dict[int, bool] = {j: j in (3, 4, 9) for j in range(1, 10)}

# the type-1 vertices of the link of [I] inside the spanning subcomplex of H
LINK_TYPE_ONE: Tuple[str, ...] = (
    "d1", "d2", "d1^-1 d2^-1", "g1", "g2", "g3", "g4",
    "d2^-1 g1^-1", "d2^-1 g3^-1", "d1^-1 g2^-1", "d1^-1 g4^-1",
)


def parse_power_word(text: str) -> PowerWord:
    """Parse 'd1^3 d2^-3 g4'; '1' is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return []
    out: PowerWord = []
    pos = 0
    while pos < len(text):
        match = _POWER_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"Malformed word at position {pos} in '{text}'")
        out.append((match.group(1), int(match.group(2) or 1)))
        pos = match.end()
    return out


def format_power_word(word: Sequence[Tuple[str, int]]) -> str:
    if not word:
        return "1"
    return " ".join(name if e == 1 else f"{name}^{e}" for name, e in word)


def expand_word(word: PowerWord, definitions: Mapping[str, PowerWord]) -> PowerWord:
    """Substitute each letter by its definition; inverse powers reverse and negate."""
    out: PowerWord = []
    for name, e in word:
        if name not in definitions:
            raise ParseError(f"No definition for letter '{name}'")
        body = definitions[name] if e > 0 else [(n, -k) for n, k in reversed(definitions[name])]
        out.extend(body * abs(e))
    return out


def evaluate_word(word: PowerWord, matrices: Mapping[str, SqMatrix]) -> SqMatrix:
    """Projective product; negative powers use the adjugate so entries stay Laurent."""
    field = next(iter(matrices.values())).field
    result = SqMatrix.identity(next(iter(matrices.values())).n, field)
    inverses: Dict[str, SqMatrix] = {}
    for name, e in word:
        if name not in matrices:
            raise ParseError(f"Unknown letter '{name}'")
        if e > 0:
            base = matrices[name]
        else:
            if name not in inverses:
                inverses[name] = matrices[name].adjugate()
            base = inverses[name]
        for _ in range(abs(e)):
            result = result * base
    return result
