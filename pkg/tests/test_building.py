from concurrent.futures import ThreadPoolExecutor
import json
import random

import pytest

from burau_forge.core.algebra import QQ, QQI, LaurentPoly, RatFunc, SqMatrix, lp
from burau_forge.core.building import (
    EXPECTED_PHI,
    LINK_TYPE_ONE,
    BuildingGen,
    a_matrix,
    adjacent,
    building_gen,
    elem_divisors,
    evaluate_word,
    explore,
    find_vertex,
    in_unipotent_kernel,
    lattice_canonical,
    lattice_equal,
    link_type_one,
    link_type_one_classes,
    named_matrices,
    parse_gens,
    parse_power_word,
    phi,
    random_unipotent_word,
    same_class_oracle,
    truncate_at_infinity,
    unipotent_word_matrix,
    val_inf,
    verify_building_identity,
    vertex_type,
)
from burau_forge.core.building.generators import GENERATOR_CACHE_SIZE, _generator_matrix
from burau_forge.core.errors import AlgebraError, ParseError, PreconditionError


def diag(*entries: str) -> SqMatrix:
    return SqMatrix.diagonal([lp(e, QQ) for e in entries], QQ)


class TestValuation:

    def test_laurent_and_rational(self):
        assert val_inf(lp("t^2 + 1", QQ)) == -2
        assert val_inf(lp("3*t^-1", QQ)) == 1
        assert val_inf(RatFunc(lp("1", QQ), lp("t^2 + 1", QQ))) == 2

    def test_additive(self):
        f, g = lp("t^3 - t", QQ), RatFunc(lp("1 + t", QQ), lp("t^4", QQ))
        assert val_inf(RatFunc.lift(f, QQ) * g) == val_inf(f) + val_inf(g)

    def test_zero(self):
        with pytest.raises(AlgebraError):
            val_inf(LaurentPoly.zero(QQ))

    def test_truncation(self):
        f = RatFunc(lp("1", QQ), lp("1 - t", QQ))
        assert truncate_at_infinity(f, 3) == lp("-t^-1 - t^-2", QQ)
        assert truncate_at_infinity(lp("t^2 + t^-5", QQ), 2) == lp("t^2", QQ)


class TestLattice:

    def test_scalar_multiples_share_a_class(self):
        assert lattice_equal(lattice_canonical(SqMatrix.identity(3, QQ)), lattice_canonical(diag("7", "7", "7")))
        assert lattice_equal(lattice_canonical(diag("t", "t", "t")), lattice_canonical(SqMatrix.identity(3, QQ)))

    @pytest.mark.parametrize("entries,exponents,vtype", [
        (("1", "1", "1"), (0, 0, 0), 0),
        (("t", "1", "1"), (0, 1, 1), 1),
        (("t^2", "1", "1"), (0, 2, 2), 2),
        (("1", "1", "t^-1"), (0, 0, 1), 2),
    ])
    def test_diagonal_classes(self, entries, exponents, vtype):
        L = lattice_canonical(diag(*entries))
        assert L.exponents == exponents
        assert vertex_type(L) == vtype

    def test_column_operations_over_the_valuation_ring(self):
        X = SqMatrix.from_strings([["1", "t^-1", "0"], ["0", "1", "0"], ["0", "0", "1"]], QQ)
        assert lattice_equal(lattice_canonical(X), lattice_canonical(SqMatrix.identity(3, QQ)))

    def test_canonical_form_is_lower_triangular(self):
        X = SqMatrix.from_strings([["t", "1", "2"], ["0", "t^2", "1"], ["1", "0", "t"]], QQ)
        rep = lattice_canonical(X).rep
        assert all(rep[i, j].is_zero() for i in range(3) for j in range(i + 1, 3))

    def test_elementary_divisors(self):
        base = lattice_canonical(SqMatrix.identity(3, QQ))
        assert elem_divisors(base, lattice_canonical(diag("t", "1", "1"))) == (0, 1, 1)
        assert elem_divisors(base, lattice_canonical(diag("t^2", "t", "1"))) == (0, 1, 2)

    def test_adjacency(self):
        base = lattice_canonical(SqMatrix.identity(3, QQ))
        assert adjacent(base, lattice_canonical(diag("t", "1", "1")))
        assert adjacent(base, lattice_canonical(diag("t", "t", "1")))
        assert not adjacent(base, lattice_canonical(diag("t^2", "1", "1")))
        assert not adjacent(base, base)

    def test_oracle_agrees_with_canonical_form(self):
        X = SqMatrix.from_strings([["t", "1", "0"], ["0", "1", "0"], ["0", "0", "t^-1"]], QQ)
        Y = X * SqMatrix.from_strings([["1", "t^-3", "0"], ["0", "1", "0"], ["2", "0", "1"]], QQ)
        assert same_class_oracle(X, Y)
        assert lattice_equal(lattice_canonical(X), lattice_canonical(Y))


class TestGenerators:

    def test_parse_gens(self):
        gens = parse_gens("d1, g2,k[3],k[inf]")
        assert [g.format() for g in gens] == ["d1", "g2", "k[3]", "k[inf]"]

    def test_unknown_gen(self):
        with pytest.raises(ParseError):
            parse_gens("x7")
        with pytest.raises(PreconditionError):
            BuildingGen.named("g9")

    def test_negative_parameter(self):
        with pytest.raises(PreconditionError):
            BuildingGen.uk(-1)

    def test_named_generators_in_unipotent_kernel(self):
        assert all(in_unipotent_kernel(M) for M in named_matrices().values())

    def test_phi_values(self):
        mats = named_matrices()
        for name, (b12, b13) in EXPECTED_PHI.items():
            assert phi(mats[name]) == (QQI.element(b12), QQI.element(b13)), name

    def test_a_words_agree(self):
        from burau_forge.core.algebra import projectively_equal
        assert projectively_equal(a_matrix(3), unipotent_word_matrix(3))

    def test_generator_cache_is_bounded_and_shared(self):
        g = BuildingGen.uk("1/3")
        assert building_gen(g) is building_gen(g, QQI)
        info = _generator_matrix.cache_info()
        assert info.maxsize == GENERATOR_CACHE_SIZE
        assert info.currsize <= GENERATOR_CACHE_SIZE
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(lambda r: building_gen(BuildingGen.uk(r)), [1, 2, 1, 2, 1, 2]))
        assert results[0] == results[2] == results[4]
        assert results[1] == results[3]
        assert building_gen(BuildingGen.uk(2)) is building_gen(BuildingGen.uk(2))


class TestIdentities:

    @pytest.mark.parametrize("r", [1, 2, 3, "1/2"])
    def test_link_chain(self, r):
        assert verify_building_identity("link-chain", r=r)

    @pytest.mark.parametrize("identity_id", [
        "rel-infinity-zero", "rel-triangle", "commute-zero", "commute-infinity",
        "unipotent-membership", "link-type-one", "phi-values", "phi-closed-form", "phi-additivity",
    ])
    def test_identities(self, identity_id):
        assert verify_building_identity(identity_id)

    def test_phi_additivity_on_random_words(self):
        assert verify_building_identity("phi-additivity", words=(), samples=100, seed=7)
        rng = random.Random(7)
        for _ in range(10):
            word = parse_power_word(random_unipotent_word(rng))
            assert 1 <= len(word) <= 4
            assert in_unipotent_kernel(evaluate_word(word, named_matrices()))

    def test_parametrized_relations(self):
        assert verify_building_identity("rel-inverse-pair", r=2)
        assert verify_building_identity("commute-reflection", r=2)
        assert verify_building_identity("rel-triangle", r1=2, r2=1)

    @pytest.mark.parametrize("j", range(1, 10))
    def test_unipotent_words(self, j):
        assert verify_building_identity("unipotent-words", j=j)

    def test_bad_index(self):
        with pytest.raises(PreconditionError):
            verify_building_identity("unipotent-words", j=10)

    def test_unknown_identity(self):
        with pytest.raises(PreconditionError):
            verify_building_identity("no-such-identity")


class TestExplore:

    @pytest.fixture(scope="class")
    def single(self):
        return explore([BuildingGen.named("d1")], radius=1, threads=2)

    def test_single_generator_radius_one(self, single):
        assert single.vertex_count == 3
        assert single.type_counts() == {0: 1, 1: 1, 2: 1}
        assert {v.label() for v in single.link()} == {"d1", "d1^-1"}
        assert link_type_one(single) == ["d1"]

    def test_radius_zero(self):
        report = explore([BuildingGen.named("d1")], radius=0)
        assert report.vertex_count == 1
        assert report.edge_count == 0

    def test_budget_truncates(self):
        report = explore([BuildingGen.named("d1"), BuildingGen.named("g1")], radius=3, step_budget=10)
        assert report.truncated
        assert report.notes
        assert all(v.distance <= 1 for v in report.vertices)

    def test_find_vertex(self, single):
        L = lattice_canonical(named_matrices()["d1"])
        v = find_vertex(single, L)
        assert v is not None and v.label() == "d1"

    @pytest.mark.filterwarnings("error::FutureWarning")
    def test_exports(self, single, tmp_path):
        dot = single.to_dot()
        assert dot.startswith("graph subcomplex {")
        assert "v0 -- v1;" in dot
        path = tmp_path / "sub.json"
        single.to_json(str(path))
        data = json.loads(path.read_text())
        assert data["vertex_count"] == 3
        assert data["type_counts"] == {"0": 1, "1": 1, "2": 1}
        assert len(data["graph"]["links"]) == single.edge_count
        single.write_dot(str(tmp_path / "sub.dot"))
        assert (tmp_path / "sub.dot").read_text() == dot

    @pytest.mark.slow
    def test_link_of_identity_contains_eleven_type_one_classes(self):
        gens = parse_gens("d1,d2,g1,g2,g3,g4")
        report = explore(gens, radius=2, threads=4)
        found = {v.lattice.rep for v in report.link() if v.type == 1}
        expected = {L.rep for L in link_type_one_classes().values()}
        assert len(expected) == len(LINK_TYPE_ONE) == 11
        assert expected <= found
