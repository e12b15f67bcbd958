"""Named braids of B_4, centralizer generating sets and the conjugation identities among them."""
from typing import Dict, List, Tuple
import logging

from ..errors import PreconditionError
from .artin import braid_equal, braids_commute
from .words import BraidWord, parse_braid

logger = logging.getLogger(__name__)


def b4(text: str) -> BraidWord:
    return parse_braid(text, 4)


B1 = b4("b1")
B2 = b4("b2")
SIGMA1, SIGMA2, SIGMA3 = b4("s1"), b4("s2"), b4("s3")
# (s3 s2 s3)^2 and (s1 s2 s1)^2: full twists of the last and first three strands
Y = b4("(s3 s2 s3)^2")
Y_FIRST = b4("(s1 s2 s1)^2")
SHIFT = b4("s1 s2 s3")


def centralizer_data(which: str) -> List[BraidWord]:
    """Generating sets of the centralizers of s3 and s2 in B_4."""
    if which == "sigma3":
        return [SIGMA1, SIGMA3, Y]
    if which == "sigma2":
        return [B2, B1.inverse() * B2 * B1, SIGMA2, Y_FIRST]
    raise PreconditionError(f"Unknown centralizer '{which}', expected sigma3 or sigma2")


CENTRALIZED = {"sigma3": SIGMA3, "sigma2": SIGMA2}


def centralized_element(which: str) -> BraidWord:
    if which not in CENTRALIZED:
        raise PreconditionError(f"Unknown centralizer '{which}', expected sigma3 or sigma2")
    return CENTRALIZED[which]


def verify_centralizer(which: str) -> bool:
    gens = centralizer_data(which)
    c = centralized_element(which)
    return all(braids_commute(g, c) for g in gens)


def conjugation_identities() -> Dict[str, Tuple[BraidWord, BraidWord]]:
    """Pairs (lhs, rhs) that must be equal in B_4."""
    Yi = Y.inverse()
    b1i, b2i = B1.inverse(), B2.inverse()
    y_inv_b1 = Yi * B1 * Y
    return {
        "s2-acts-on-b1": (B1.conjugate(SIGMA2), b2i * B1),
        "s3-acts-on-b1": (B1.conjugate(SIGMA3), B1),
        "s2-acts-on-b2": (B2.conjugate(SIGMA2), B2),
        "s3-acts-on-b2": (B2.conjugate(SIGMA3), B2 * B1),
        "twist-inverse-acts-on-b1": (y_inv_b1, B2 * b1i * b2i),
        "twist-acts-on-b1": (B1.conjugate(Y), b1i * B2 * b1i * b2i * B1),
        "twist-relation-restated": (B1.conjugate(Y), b1i * y_inv_b1 * B1),
        "shift-s1": (SIGMA1.conjugate(SHIFT), SIGMA2),
        "shift-s2": (SIGMA2.conjugate(SHIFT), SIGMA3),
        "shift-s3": (SIGMA3.conjugate(SHIFT), B2 * SIGMA2),
    }


def verify_conjugation_identity(identity_id: str) -> bool:
    table = conjugation_identities()
    if identity_id not in table:
        raise PreconditionError(f"Unknown braid identity '{identity_id}'")
    lhs, rhs = table[identity_id]
    ok = braid_equal(lhs, rhs)
    logger.debug(f"{identity_id}: {ok}")
    return ok


def strand_merge_quotient(w: BraidWord) -> BraidWord:
    """Endomorphism of B_4 sending s1 -> s3 and fixing s2, s3; b1 and b2 lie in its kernel."""
    if w.n != 4:
        raise PreconditionError("the strand-merge quotient is defined on B_4")
    return BraidWord(4, tuple((3 if i == 1 else i, e) for i, e in w.letters))
