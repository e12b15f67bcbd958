"""Registry of every exact check run by the scorecard.

Ids are stable and grouped by prefix, so ``run_scorecard("unipotent-words")`` runs the
nine unipotent-word identities and ``run_scorecard("counterexample")`` the
whole pipeline.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, Dict, List, Optional, Tuple
import logging
import random

from ..core.algebra import QQ, Field, LaurentPoly, SqMatrix, is_unitary, prime_field
from ..core.braids import artin, catalog
from ..core.braids.words import BraidWord, parse_braid
from ..core.building import (
    LINK_TYPE_ONE,
    LISTED_AGREES,
    BuildingGen,
    explore,
    link_type_one_classes,
    verify_building_identity,
)
from ..core.burau import (
    FORWARD,
    BurauKind,
    burau_matrix,
    conj_M,
    diagonal_unitarity_holds,
    direct_criteria,
    laurent_criteria,
    reduced_squier_form,
    reference_matrices,
    squier_form,
)
from ..core.counterexample import (
    CounterexampleReport,
    build_C,
    c_checks,
    c_word,
    generic_witness,
    run_counterexample,
)
from ..core.errors import NotInvertibleError
from ..core.similitude import (
    H0,
    GenId,
    NotFound,
    outside_letters,
    q_normal_form,
    verify_relation,
    word_matrix,
)
from ..core.similitude.generators import valid_parameter
from ..core.stallings import a_subgroup_rank, kernel_weights, l_expansion_agrees, verify_l_consistency
from ..utils.config import Settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """A named exact check; ``func`` receives the active settings"""
    id: str
    description: str
    func: Callable[[Settings], bool]


CHECKS: Dict[str, Check] = {}

UNITARITY_SAMPLES = 500
CRITERIA_SAMPLES = 200


def register(check_id: str, description: str, func: Callable[[Settings], bool]):
    if check_id in CHECKS:
        raise ValueError(f"duplicate check id '{check_id}'")
    CHECKS[check_id] = Check(check_id, description, func)


def check(check_id: str, description: str):
    def decorator(func: Callable[[Settings], bool]):
        register(check_id, description, func)
        return func
    return decorator


def random_braid(rng: random.Random, n: int, max_len: int = 8) -> BraidWord:
    length = rng.randint(0, max_len)
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))


def random_elementary_product(rng: random.Random, n: int = 3, factors: int = 5) -> SqMatrix:
    """Product of transvections with small integer Laurent entries; these generate SL(n, Z[t, t^-1]) for n >= 3."""
    A = SqMatrix.identity(n, QQ)
    for _ in range(factors):
        i, j = rng.sample(range(n), 2)
        terms = {rng.randint(-2, 2): rng.choice((-2, -1, 1, 2)) for _ in range(rng.randint(1, 2))}
        A = A * SqMatrix.elementary(n, i, j, LaurentPoly(QQ, terms), QQ)
    return A


def _criteria_agree_on(A: SqMatrix, label: str) -> bool:
    fast, slow = laurent_criteria(A), direct_criteria(A)
    if fast != slow:
        logger.warning(f"criteria disagree on {label}: {fast} vs {slow}")
    return fast == slow


# unitarity

def _unitarity_unreduced(n: int, settings: Settings) -> bool:
    rng = random.Random(1000 + n)
    J = squier_form(n)
    return all(is_unitary(burau_matrix(random_braid(rng, n), BurauKind.UNREDUCED), J)
               for _ in range(UNITARITY_SAMPLES))


for _n in (3, 4, 5, 6):
    register(f"unitarity-unreduced-n{_n}", f"unreduced images of B_{_n} preserve J_{_n}",
             partial(_unitarity_unreduced, _n))


@check("unitarity-reduced-n4", "reduced images of B_4 preserve the reduced form")
def _unitarity_reduced(settings: Settings) -> bool:
    rng = random.Random(4)
    K = reduced_squier_form(4)
    return all(is_unitary(burau_matrix(random_braid(rng, 4), BurauKind.REDUCED), K)
               for _ in range(UNITARITY_SAMPLES))


@check("unitarity-m-conjugate", "M-conjugated reduced images preserve D = diag(1, Phi, Phi)")
def _unitarity_m_conjugate(settings: Settings) -> bool:
    rng = random.Random(8)
    return all(diagonal_unitarity_holds(burau_matrix(random_braid(rng, 4), BurauKind.REDUCED))
               for _ in range(UNITARITY_SAMPLES))


# criteria at t = -1

@check("criteria-agree-random-images", "t = -1 criteria match direct Laurent-ness on reduced B_4 images")
def _criteria_agree(settings: Settings) -> bool:
    rng = random.Random(39)
    words = [random_braid(rng, 4, max_len=6) for _ in range(CRITERIA_SAMPLES)]
    return all(_criteria_agree_on(burau_matrix(w, BurauKind.REDUCED), str(w)) for w in words)


@check("criteria-agree-random-gl3", "t = -1 criteria match direct Laurent-ness on random elementary products")
def _criteria_agree_gl3(settings: Settings) -> bool:
    rng = random.Random(93)
    return all(_criteria_agree_on(random_elementary_product(rng), f"elementary product {k}")
               for k in range(CRITERIA_SAMPLES))


@check("criteria-tame-generators", "s1 and s3 are tame, s2 is not")
def _criteria_examples(settings: Settings) -> bool:
    p1 = {s: laurent_criteria(burau_matrix(parse_braid(s, 4), BurauKind.REDUCED)).p1
          for s in ("s1", "s2", "s3")}
    return p1 == {"s1": True, "s2": False, "s3": True}


# braids

for _which in ("sigma3", "sigma2"):
    register(f"braid-centralizer-{_which}", f"listed generators commute with {_which}",
             partial(lambda which, settings: catalog.verify_centralizer(which), _which))

for _identity in catalog.conjugation_identities():
    register(f"braid-{_identity}", f"conjugation identity {_identity} under the Artin action",
             partial(lambda identity, settings: catalog.verify_conjugation_identity(identity), _identity))


@check("braid-strand-merge-kernel", "b1 and b2 die under s1 -> s3")
def _strand_merge_kernel(settings: Settings) -> bool:
    identity = BraidWord.identity(4)
    return all(artin.braid_equal(catalog.strand_merge_quotient(b), identity)
               for b in (catalog.B1, catalog.B2))


# reference matrices

REFERENCE_CONJUGATES = (
    ("s1", "s1", "s1"),
    ("s2", "s2", "s2"),
    ("s3", "s3", "s3"),
    ("twist", "twist", "(s3 s2 s3)^2"),
    ("s-prime", "S'", "b1"),
    ("t-prime", "T'", "b2"),
)

for _id, _name, _braid in REFERENCE_CONJUGATES:
    register(f"reference-{_id}",
             f"M beta({_braid}) M^-1 matches the reference {_name}",
             partial(lambda name, braid, settings: conj_M(
                 burau_matrix(parse_braid(braid, 4), BurauKind.REDUCED), FORWARD) == reference_matrices()[name],
                 _name, _braid))

for _name in ("c-det-one", "c-unitary", "c-lifts-word"):
    register(f"reference-{_name}", f"matrix C: {_name}", partial(lambda name, settings: c_checks(build_C())[name], _name))


# similitude relations

SIMILITUDE_PARAMETERS = ("1", "-1", "2", "-2", "1/2", "-1/2", "3/5")
ODD_FIELDS: Tuple[Field, ...] = (QQ, prime_field(5), prime_field(7))
CHAR2_POLYS = ("1", "x", "x^2 + x")


def _usable(r: str, field: Field) -> bool:
    try:
        return valid_parameter(field.element(Fraction(r)))
    except NotInvertibleError:
        return False


for _field in ODD_FIELDS:
    for _r in SIMILITUDE_PARAMETERS:
        if not _usable(_r, _field):
            continue
        for _rel in ("h-1-conjugation", "h0-conjugation"):
            register(f"similitude-{_rel}-{_field.tag}-r{_r}", f"{_rel} for r = {_r} over {_field.tag}",
                     partial(lambda rel, field, r, settings: verify_relation(rel, field, r=r), _rel, _field, _r))
    for _rel in ("h0-square", "lifted-h-1-action", "d-squared", "coset-representatives"):
        register(f"similitude-{_rel}-{_field.tag}", f"{_rel} over {_field.tag}",
                 partial(lambda rel, field, settings: verify_relation(rel, field), _rel, _field))

for _f in CHAR2_POLYS:
    register(f"similitude-char2-h0-swap-f{_f.replace(' ', '')}", f"h0 al[{_f}] h0^-1 = au[{_f}] over F_2",
             partial(lambda f, settings: verify_relation("char2-h0-swap", prime_field(2), f=f), _f))
register("similitude-char2-structure", "characteristic 2 structure of c and d",
         lambda settings: verify_relation("char2-structure", prime_field(2)))
register("similitude-additivity", "au and al are additive over F_2",
         lambda settings: verify_relation("additivity", prime_field(2), f="x", g="x^2 + 1"))

for _p in (None, 3, 5, 7, 17):
    _tag = "q" if _p is None else f"fp:{_p}"
    register(f"similitude-key-{_tag}", f"key relation d c d^-1 = c^-1 (d^-1 c d) c over {_tag}",
             partial(lambda p, settings: verify_relation("key", QQ if p is None else prime_field(p)), _p))


# normal form

@check("nf-c-word", "the normal form of C recovers the seven-letter word")
def _nf_c_word(settings: Settings) -> bool:
    word = c_word()
    found = q_normal_form(word_matrix(word, QQ), max_len=settings.nf_max_len)
    return not isinstance(found, NotFound) and found.format() == word.format()


@check("nf-witness-outside", "g[-1/2] lies outside <h0, g[1]>")
def _nf_witness(settings: Settings) -> bool:
    outside = outside_letters(c_word(), [H0, GenId.g(1)], QQ)
    return GenId.g("-1/2") in outside


for _p in (3, 5, 17):
    register(f"nf-witness-fp:{_p}", f"a letter of the word escapes <h0, g[1]> over F_{_p}",
             partial(lambda p, settings: (generic_witness(p) is None) == (p == 3), _p))


# counterexample

@lru_cache(maxsize=4)
def _counterexample(exponents: Tuple[int, int]) -> CounterexampleReport:
    return run_counterexample(exponents)


COUNTEREXAMPLE_CHECKS = (
    "b-prime-identity-at-minus-one",
    "b-commutes-with-conjugated-s3",
    "backward-criterion-agrees",
    "a0-laurent",
    "a0-det-one",
    "a0-commutes-with-s3",
    "a0-in-gamma-prime",
    "a0-at-minus-one",
    "a0-tame-not-stable",
    "eigencheck",
    "eigencheck-needs-correction",
    "det-one-at-points",
)

for _name in COUNTEREXAMPLE_CHECKS:
    register(f"counterexample-{_name}", f"pipeline check {_name}",
             partial(lambda name, settings: _counterexample(tuple(settings.eigen_exponents)).checks.get(name, False),
                     _name))


# building

BUILDING_CHECKS: List[Tuple[str, str, Dict]] = [
    ("building-link-chain-r1", "link-chain", {"r": 1}),
    ("building-link-chain-r2", "link-chain", {"r": 2}),
    ("building-link-chain-r3", "link-chain", {"r": 3}),
    ("building-rel-infinity-zero", "rel-infinity-zero", {}),
    ("building-rel-inverse-pair", "rel-inverse-pair", {"r": 2}),
    ("building-rel-triangle", "rel-triangle", {}),
    ("building-commute-zero", "commute-zero", {}),
    ("building-commute-infinity", "commute-infinity", {}),
    ("building-commute-reflection", "commute-reflection", {"r": 2}),
    ("building-unipotent-membership", "unipotent-membership", {}),
    ("building-link-type-one", "link-type-one", {}),
    ("building-phi-values", "phi-values", {}),
    ("building-phi-closed-form", "phi-closed-form", {}),
    ("building-phi-additivity", "phi-additivity", {}),
]

for _id, _identity, _params in BUILDING_CHECKS:
    register(_id, f"building identity {_identity} {_params or ''}".strip(),
             partial(lambda identity, params, settings: verify_building_identity(identity, **params),
                     _identity, _params))


def _rel_triangle_settings(settings: Settings) -> bool:
    r1, r2 = settings.triangle_params
    return verify_building_identity("rel-triangle", r1=r1, r2=r2)


register("building-rel-triangle-configured", "triangle relation for the configured parameters",
         _rel_triangle_settings)

for _j in range(1, 10):
    register(f"unipotent-words-a{_j}", f"a_{_j} as a word in S', T' equals its word in d, g",
             partial(lambda j, settings: verify_building_identity("unipotent-words", j=j), _j))


@check("building-link-explore", "exploration from [I] reaches the eleven type-1 link classes")
def _link_explore(settings: Settings) -> bool:
    gens = [BuildingGen.named(name) for name in ("d1", "d2", "g1", "g2", "g3", "g4")]
    report = explore(gens, radius=settings.explore_radius, step_budget=settings.explore_step_budget,
                     threads=settings.threads)
    found = {v.lattice.rep for v in report.link()}
    expected = link_type_one_classes()
    missing = [w for w in LINK_TYPE_ONE if expected[w].rep not in found]
    logger.info(f"link of [I]: {len(report.link_of_type(1))} type-1 vertices at radius {report.radius}")
    if missing:
        logger.info(f"link classes not reached: {missing}")
    return not missing


# stallings

@check("stallings-rank-9", "the a_j rewritten in l1 .. l9 fold to a rank 9 core graph")
def _stallings_rank(settings: Settings) -> bool:
    return a_subgroup_rank() == 9


@check("stallings-weights", "the weight map vanishes on l1 .. l9 and on every a_j")
def _stallings_weights(settings: Settings) -> bool:
    return not any(kernel_weights().values())


for _j in range(1, 10):
    register(f"stallings-l-consistency-a{_j}", f"a_{_j} through l1 .. l9 matches its word in d, g",
             partial(lambda j, settings: verify_l_consistency(j), _j))

for _j in range(1, 10):
    register(f"stallings-listed-table-a{_j}",
             f"the published l-word of a_{_j} " + ("matches" if LISTED_AGREES[_j] else "misses") + " its word in d, g",
             partial(lambda j, settings: l_expansion_agrees(j, listed=True) == LISTED_AGREES[j], _j))


def selected(prefix: Optional[str] = None) -> List[Check]:
    return [CHECKS[k] for k in sorted(CHECKS) if not prefix or k.startswith(prefix)]
