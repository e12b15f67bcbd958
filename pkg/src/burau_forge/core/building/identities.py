"""Identities among building generators, checked as exact projective equalities."""
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional
import logging
import random

from ..algebra import QQI, Field, GaussianRational, LaurentPoly, SqMatrix, projectively_equal
from ..algebra.fields import MultiQuadField, parse_rational
from ..burau import reference_matrices
from ..errors import PreconditionError
from .generators import (
    INFINITY,
    NAMED,
    BuildingGen,
    building_gen,
    in_unipotent_kernel,
    named_matrices,
    phi,
    phi_closed_form,
    phi_poly,
    tower_for_gens,
)
from .lattice import adjacent, lattice_canonical, lattice_equal, vertex_type
from .words import (
    LINK_TYPE_ONE,
    ST_WORDS,
    UNIPOTENT_WORDS,
    evaluate_word,
    format_power_word,
    parse_power_word,
)

logger = logging.getLogger(__name__)

I = GaussianRational(0, 1)
HALF = Fraction(1, 2)

EXPECTED_PHI = {
    "d1": (0, 0),
    "d2": (0, 0),
    "g1": (GaussianRational(HALF, HALF), 0),
    "g2": (0, GaussianRational(-HALF, -HALF)),
    "g3": (GaussianRational(HALF, -HALF), 0),
    "g4": (0, GaussianRational(HALF, -HALF)),
}

SAMPLE_ORTHOGONAL = (
    ((Fraction(3, 5), Fraction(-4, 5)), (Fraction(4, 5), Fraction(3, 5))),
    ((0, 1), (1, 0)),
    ((-1, 0), (0, 1)),
    ((-1, 0), (0, -1)),
)

UNITS = (1, -1, I, -I)


def _rational(value: Any, name: str) -> Fraction:
    if value is None:
        raise PreconditionError(f"this identity needs a parameter {name}")
    return parse_rational(value) if isinstance(value, str) else Fraction(value)


def _inv(X: SqMatrix) -> SqMatrix:
    return X.adjugate()


def _o(field: MultiQuadField, rows) -> SqMatrix:
    return building_gen(BuildingGen.oe(rows), field)


def _link_chain(params) -> bool:
    r = _rational(params.get("r", 2), "r")
    if r <= 0:
        raise PreconditionError(f"the lattice chain is stated for r > 0, got {r}")
    gen = BuildingGen.ke(r)
    field = tower_for_gens([gen])
    t = LaurentPoly.t(field)
    one = LaurentPoly.one(field)
    zero = LaurentPoly.zero(field)
    p = phi_poly(field)
    r2 = r * r
    stages = [
        building_gen(gen, field),
        SqMatrix([[one.scale(r2) - t, t.scale(-r), zero],
                  [p.scale(-r), one - t.scale(r2), zero],
                  [zero, zero, one]], field),
        SqMatrix([[zero, t.scale(-r), zero],
                  [one.scale(-(1 + r2 * r2) / r), one - t.scale(r2), zero],
                  [zero, zero, one]], field),
        SqMatrix([[t, zero, zero], [t.scale(r), one, zero], [zero, zero, one]], field),
    ]
    classes = [lattice_canonical(X) for X in stages]
    return all(lattice_equal(classes[0], L) for L in classes[1:])


def _rel_infinity_zero(params) -> bool:
    k_inf, k_zero = BuildingGen.ke(INFINITY), BuildingGen.ke(0)
    field = tower_for_gens([k_inf, k_zero])
    lhs = building_gen(k_inf, field) * building_gen(k_zero, field)
    rhs = _o(field, ((0, -1), (1, 0))) * _inv(building_gen(k_inf, field)) * _o(field, ((0, 1), (-1, 0)))
    return projectively_equal(lhs, rhs)


def _rel_inverse_pair(params) -> bool:
    r = _rational(params.get("r", 2), "r")
    if r <= 0:
        raise PreconditionError(f"the inverse-pair relation is stated for r > 0, got {r}")
    k_r, k_inv, k_inf = BuildingGen.ke(r), BuildingGen.ke(1 / r), BuildingGen.ke(INFINITY)
    field = tower_for_gens([k_r, k_inv])
    lhs = building_gen(k_r, field) * _o(field, ((-1, 0), (0, -1))) * building_gen(k_inv, field)
    rotation = _o(field, ((0, 1), (-1, 0)))
    rhs = rotation * _inv(building_gen(k_inf, field)) * rotation
    return projectively_equal(lhs, rhs)


def triangle_radicands(r1: Fraction, r2: Fraction) -> List[Fraction]:
    s = r1 + r2
    return [1 / (r1 * r2), 1 - 1 / (r1 * r2),
            (r2 - 1 / r1) / s, (r1 + 1 / r1) / s,
            (r1 - 1 / r2) / s, (r2 + 1 / r2) / s]


def _rel_triangle(params) -> bool:
    r1 = _rational(params.get("r1", 2), "r1")
    r2 = _rational(params.get("r2", 1), "r2")
    if r1 <= 0 or r2 <= 0 or r1 * r2 <= 1:
        raise PreconditionError(f"the triangle relation needs r1, r2 > 0 and r1*r2 > 1, got {r1}, {r2}")
    q = (r1 + r2) / (r1 * r2 - 1)
    gens = [BuildingGen.ke_sqrt(r1), BuildingGen.ke_sqrt(r2), BuildingGen.ke_sqrt(q)]
    field = tower_for_gens(gens, triangle_radicands(r1, r2))
    logger.debug(f"triangle relation for ({r1}, {r2}) over {field.tag}")
    sq = field.sqrt
    a, b = sq(1 / (r1 * r2)), sq(1 - 1 / (r1 * r2))
    s = r1 + r2
    c, d = sq((r2 - 1 / r1) / s), sq((r1 + 1 / r1) / s)
    e, f = sq((r1 - 1 / r2) / s), sq((r2 + 1 / r2) / s)
    k1, k2, k3 = (building_gen(g, field) for g in gens)
    lhs = k1 * _o(field, ((-a, -b), (b, -a))) * k2
    rhs = _o(field, ((-c, d), (-d, -c))) * _inv(k3) * _o(field, ((-e, f), (-f, -e)))
    return projectively_equal(lhs, rhs)


def _commutes_projectively(X: SqMatrix, Y: SqMatrix) -> bool:
    return projectively_equal(X * Y, Y * X)


def _commute_zero(params) -> bool:
    gen = BuildingGen.ke(0)
    field = tower_for_gens([gen])
    k0 = building_gen(gen, field)
    return all(_commutes_projectively(k0, _o(field, A)) for A in SAMPLE_ORTHOGONAL)


def _commute_infinity(params) -> bool:
    gen = BuildingGen.ke(INFINITY)
    field = tower_for_gens([gen])
    return _commutes_projectively(building_gen(gen, field), _o(field, ((-1, 0), (0, -1))))


def _commute_reflection(params) -> bool:
    r = _rational(params.get("r", 2), "r")
    gens = [BuildingGen.ke(r), BuildingGen.ke(0), BuildingGen.ke(INFINITY)]
    field = tower_for_gens(gens)
    reflection = _o(field, ((1, 0), (0, -1)))
    return all(_commutes_projectively(building_gen(g, field), reflection) for g in gens)


def st_matrices(field: Field = QQI) -> Dict[str, SqMatrix]:
    ref = reference_matrices(field)
    return {"S": ref["S'"], "T": ref["T'"]}


def a_matrix(j: int, field: Field = QQI) -> SqMatrix:
    """a_j as the tabulated word in S' and T'."""
    return evaluate_word(parse_power_word(ST_WORDS[j]), st_matrices(field))


def unipotent_word_matrix(j: int, field: Field = QQI) -> SqMatrix:
    """a_j as the tabulated word in d1, d2, g1 .. g4."""
    return evaluate_word(parse_power_word(UNIPOTENT_WORDS[j]), named_matrices(field))


def _indices(params) -> Iterable[int]:
    j = params.get("j")
    if j is None:
        return range(1, 10)
    j = int(j)
    if j not in ST_WORDS:
        raise PreconditionError(f"index j must lie in 1..9, got {j}")
    return [j]


def _unipotent_words(params) -> bool:
    ok = True
    for j in _indices(params):
        holds = projectively_equal(a_matrix(j), unipotent_word_matrix(j))
        logger.debug(f"a_{j} as a word in d, g: {holds}")
        ok = ok and holds
    return ok


def _unipotent_membership(params) -> bool:
    return all(in_unipotent_kernel(a_matrix(j)) for j in _indices(params))


def link_type_one_classes(field: Field = QQI):
    mats = named_matrices(field)
    return {w: lattice_canonical(evaluate_word(parse_power_word(w), mats)) for w in LINK_TYPE_ONE}


def _link_type_one(params) -> bool:
    classes = link_type_one_classes()
    base = lattice_canonical(SqMatrix.identity(3, QQI))
    reps = list(classes.values())
    distinct = len({L.rep for L in reps}) == len(reps)
    typed = all(vertex_type(L) == 1 for L in reps)
    linked = all(adjacent(base, L) for L in reps)
    logger.debug(f"link classes: distinct={distinct} type-one={typed} adjacent={linked}")
    return distinct and typed and linked


def _phi_values(params) -> bool:
    mats = named_matrices()
    return all(phi(mats[name]) == tuple(QQI.element(x) for x in expected)
               for name, expected in EXPECTED_PHI.items())


def su2_units() -> List[tuple]:
    """SU(2) matrices with entries in {0, +-1, +-i}: (a1, a2) with one unit and one zero."""
    return [(u, 0) for u in UNITS] + [(0, u) for u in UNITS]


def conjugated_uk(a1: Any, a2: Any, r: Any) -> SqMatrix:
    a1, a2 = QQI.element(a1), QQI.element(a2)
    A = ((a1, a2), (-a2.conjugate(), a1.conjugate()))
    A_inv = ((a1.conjugate(), -a2), (a2.conjugate(), a1))
    k = building_gen(BuildingGen.uk(r), QQI)
    return building_gen(BuildingGen.uu(A), QQI) * k * building_gen(BuildingGen.uu(A_inv), QQI)


def _phi_closed_form(params) -> bool:
    radii = params.get("radii", (1, 2, 3))
    ok = True
    for a1, a2 in su2_units():
        for r in radii:
            holds = phi(conjugated_uk(a1, a2, r)) == phi_closed_form(a1, a2, r)
            if not holds:
                logger.debug(f"phi closed form fails for a1={a1}, a2={a2}, r={r}")
            ok = ok and holds
    return ok


def phi_of_word(word: str) -> tuple:
    return phi(evaluate_word(parse_power_word(word), named_matrices()))


def random_unipotent_word(rng: random.Random, max_len: int = 4) -> str:
    """A word in d1, d2, g1 .. g4 with exponents in {+-1, +-2}."""
    return format_power_word([(rng.choice(NAMED), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randint(1, max_len))])


def _phi_additivity(params) -> bool:
    """phi is additive on every pair of grid words and on ``samples`` random pairs of words."""
    words = params.get("words", ("d1", "d2", "g1", "g2", "g3", "g4", "g1^2 d1", "g3^-1 g2"))
    rng = random.Random(params.get("seed", 0))
    pairs = [(u, v) for u in words for v in words]
    pairs += [(random_unipotent_word(rng), random_unipotent_word(rng)) for _ in range(params.get("samples", 100))]
    for u, v in pairs:
        total = tuple(x + y for x, y in zip(phi_of_word(u), phi_of_word(v)))
        if phi_of_word(f"{u} {v}") != total:
            logger.debug(f"phi is not additive on ({u}, {v})")
            return False
    return True


BUILDING_IDENTITIES: Dict[str, Callable[[Dict[str, Any]], bool]] = {
    "link-chain": _link_chain,
    "rel-infinity-zero": _rel_infinity_zero,
    "rel-inverse-pair": _rel_inverse_pair,
    "rel-triangle": _rel_triangle,
    "commute-zero": _commute_zero,
    "commute-infinity": _commute_infinity,
    "commute-reflection": _commute_reflection,
    "unipotent-words": _unipotent_words,
    "unipotent-membership": _unipotent_membership,
    "link-type-one": _link_type_one,
    "phi-values": _phi_values,
    "phi-closed-form": _phi_closed_form,
    "phi-additivity": _phi_additivity,
}


def verify_building_identity(identity_id: str, **params: Optional[Any]) -> bool:
    if identity_id not in BUILDING_IDENTITIES:
        raise PreconditionError(
            f"Unknown building identity '{identity_id}', expected one of {sorted(BUILDING_IDENTITIES)}")
    holds = BUILDING_IDENTITIES[identity_id]({k: v for k, v in params.items() if v is not None})
    logger.debug(f"building identity {identity_id} with {params}: {holds}")
    return holds
