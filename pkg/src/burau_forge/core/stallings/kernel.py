"""The weight map on H and its kernel generators l1 .. l9.

Words of weight zero are rewritten into l1 .. l9 Reidemeister-Schreier style with
the transversal g1^k: a letter x read at height k contributes g1^k x g1^-(k + w(x)),
which is the g1^k-conjugate of x g1^-w(x) in the kernel. Conjugation by g1 is an
automorphism of the kernel, tabulated below on the free generators.
"""
from typing import Dict, Iterable, Optional, Sequence, Union
import logging

from ..algebra import QQI, SqMatrix, projectively_equal
from ..braids.words import FreeWord
from ..building.generators import named_matrices
from ..building.identities import unipotent_word_matrix
from ..building.words import (
    A_IN_L_LISTED,
    L_WORDS,
    UNIPOTENT_WORDS,
    PowerWord,
    evaluate_word,
    expand_word,
    parse_power_word,
)
from ..errors import CheckFailure, ParseError, PreconditionError
from .folding import CoreGraph, fold

logger = logging.getLogger(__name__)

# forced by d1 = g1^-2 = d2 and g1 = g2 = g3 = g4 in the abelianization
WEIGHTS = {"d1": -2, "d2": -2, "g1": 1, "g2": 1, "g3": 1, "g4": 1}

# x g1^-w(x) for each generator x
SCHREIER_WORDS = {"d1": "l2", "d2": "l1", "g1": "1", "g2": "l5^-1", "g3": "l7^-1", "g4": "l9^-1"}

# g1 l_k g1^-1 and g1^-1 l_k g1 for k = 1 .. 9; d2 centralizes g1, g3 and d1 centralizes g2, g4
CONJUGATE_BY_G1 = (
    "l1", "l3", "l1 l2 l1^-1", "l5", "l1 l2 l1^-1 l4 l3^-1",
    "l7", "l1 l6 l1^-1", "l9", "l1 l2 l1^-1 l8 l3^-1",
)
CONJUGATE_BY_G1_INVERSE = (
    "l1", "l1^-1 l3 l1", "l2", "l3^-1 l5 l2", "l4",
    "l1^-1 l7 l1", "l6", "l3^-1 l9 l2", "l8",
)


def _word(word: Union[str, PowerWord]) -> PowerWord:
    return parse_power_word(word) if isinstance(word, str) else list(word)


def f_quotient_value(word: Union[str, PowerWord]) -> int:
    total = 0
    for name, e in _word(word):
        if name not in WEIGHTS:
            raise ParseError(f"'{name}' is not a generator of H")
        total += WEIGHTS[name] * e
    return total


def to_free_word(word: Union[str, PowerWord], prefix: str = "l") -> FreeWord:
    """'l2 l1^-1' as a free-group word over l1, l2, ..."""
    letters = []
    for name, e in _word(word):
        if not name.startswith(prefix) or not name[len(prefix):].isdigit():
            raise ParseError(f"'{name}' is not a letter {prefix}1, {prefix}2, ...")
        s = int(name[len(prefix):])
        letters.extend([(s, 1 if e > 0 else -1)] * abs(e))
    return FreeWord.of(letters)


def to_power_word(word: FreeWord, prefix: str = "l") -> PowerWord:
    out: PowerWord = []
    for s, e in word.letters:
        name = f"{prefix}{s}"
        if out and out[-1][0] == name:
            out[-1] = (name, out[-1][1] + e)
        else:
            out.append((name, e))
    return out


def _images(table: Sequence[str]) -> Sequence[FreeWord]:
    return tuple(to_free_word(text) for text in table)


def conjugate_by_g1(word: FreeWord, k: int) -> FreeWord:
    """g1^k w g1^-k for w in the kernel, again as a word in l1 .. l9."""
    images = _images(CONJUGATE_BY_G1 if k >= 0 else CONJUGATE_BY_G1_INVERSE)
    for _ in range(abs(k)):
        word = word.substitute(images)
    return word


def rewrite_in_kernel(word: Union[str, PowerWord]) -> FreeWord:
    """A word of weight zero in d1, d2, g1 .. g4 as a free word in l1 .. l9."""
    word = _word(word)
    if f_quotient_value(word) != 0:
        raise PreconditionError(f"word has weight {f_quotient_value(word)}, not 0")
    out = FreeWord()
    height = 0
    for name, e in word:
        schreier = to_free_word(SCHREIER_WORDS[name])
        for _ in range(abs(e)):
            if e > 0:
                out = out * conjugate_by_g1(schreier, height)
                height += WEIGHTS[name]
            else:
                height -= WEIGHTS[name]
                out = out * conjugate_by_g1(schreier, height).inverse()
    return out


def a_words_in_l() -> Dict[int, FreeWord]:
    return {j: rewrite_in_kernel(text) for j, text in UNIPOTENT_WORDS.items()}


def listed_a_words_in_l() -> Dict[int, FreeWord]:
    return {j: to_free_word(text) for j, text in A_IN_L_LISTED.items()}


def l_definitions() -> Dict[str, PowerWord]:
    return {f"l{j}": parse_power_word(text) for j, text in L_WORDS.items()}


def expanded_a_word(j: int, listed: bool = False) -> PowerWord:
    """a_j in l1 .. l9 with each l_k replaced by its word in d1, d2, g1 .. g4."""
    word = parse_power_word(A_IN_L_LISTED[j]) if listed else to_power_word(rewrite_in_kernel(UNIPOTENT_WORDS[j]))
    return expand_word(word, l_definitions())


def l_word_matrix(word: Union[str, PowerWord]) -> SqMatrix:
    return evaluate_word(expand_word(_word(word), l_definitions()), named_matrices(QQI))


def _indices(j: Optional[int]) -> Iterable[int]:
    if j is None:
        return sorted(UNIPOTENT_WORDS)
    if j not in UNIPOTENT_WORDS:
        raise PreconditionError(f"index j must lie in 1..9, got {j}")
    return [j]


def l_expansion_agrees(j: int, listed: bool = False) -> bool:
    return projectively_equal(evaluate_word(expanded_a_word(j, listed), named_matrices(QQI)),
                              unipotent_word_matrix(j))


def verify_l_consistency(j: Optional[int] = None, listed: bool = False) -> bool:
    """Each a_j read through the l-generators equals its word in d, g as a projective matrix.

    Raises CheckFailure naming the first index that disagrees.
    """
    tag = "listed-l-consistency" if listed else "l-consistency"
    for k in _indices(j):
        if not l_expansion_agrees(k, listed):
            logger.error(f"a_{k} through l1 .. l9 differs from its word in d, g")
            raise CheckFailure(f"{tag}-a{k}", "matrices differ")
        logger.debug(f"a_{k}: l-expansion agrees")
    return True


def listed_agreement() -> Dict[int, bool]:
    """Per index, whether the published l-word of a_j matches its word in d, g."""
    return {j: l_expansion_agrees(j, listed=True) for j in sorted(A_IN_L_LISTED)}


def kernel_weights() -> Dict[str, int]:
    """Weights of the l-generators and of every a_j; all vanish."""
    out = {f"l{j}": f_quotient_value(text) for j, text in L_WORDS.items()}
    out.update({f"a{j}": f_quotient_value(text) for j, text in UNIPOTENT_WORDS.items()})
    return out


def a_subgroup_graph(listed: bool = False) -> CoreGraph:
    words = listed_a_words_in_l() if listed else a_words_in_l()
    return fold([words[j] for j in sorted(words)], len(L_WORDS))


def a_subgroup_rank(listed: bool = False) -> int:
    return a_subgroup_graph(listed).rank()
