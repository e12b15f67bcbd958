import json
import random

import pytest

from burau_forge.core.algebra import projectively_equal
from burau_forge.core.braids import FreeWord
from burau_forge.core.building import (
    L_WORDS,
    LISTED_AGREES,
    UNIPOTENT_WORDS,
    evaluate_word,
    format_power_word,
    named_matrices,
    parse_power_word,
)
from burau_forge.core.errors import CheckFailure, ParseError, PreconditionError
from burau_forge.core.stallings import (
    a_subgroup_graph,
    a_subgroup_rank,
    a_words_in_l,
    conjugate_by_g1,
    f_quotient_value,
    fold,
    kernel_weights,
    l_word_matrix,
    listed_a_words_in_l,
    listed_agreement,
    membership,
    rank,
    read_words,
    rewrite_in_kernel,
    to_free_word,
    to_power_word,
    verify_l_consistency,
)


def words(*texts: str):
    return [FreeWord.parse(t) for t in texts]


class TestFolding:

    @pytest.mark.parametrize("gens,alphabet,expected", [
        (("x1",), 1, 1),
        (("x1 x1", "x1 x1 x1"), 1, 1),
        (("x1", "x2"), 2, 2),
        (("x1 x2 X1", "x2"), 2, 2),
        (("x1 x2", "x2 x1", "x1 x1"), 2, 3),
        (("x1 x2 X1 X2",), 2, 1),
    ])
    def test_rank(self, gens, alphabet, expected):
        assert rank(fold(words(*gens), alphabet)) == expected

    def test_folded_graph_is_deterministic(self):
        graph = fold(words("x1 x2 X1", "x1 x2 x2 X1"), 2)
        assert graph.is_folded()

    def test_membership(self):
        graph = fold(words("x1 x1", "x1 x1 x1"), 1)
        assert membership(FreeWord.parse("x1"), graph)
        sub = fold(words("x1 x2 X1"), 2)
        assert membership(FreeWord.parse("x1 x2 x2 x2 X1"), sub)
        assert not membership(FreeWord.parse("x2"), sub)

    def test_letters_outside_alphabet(self):
        with pytest.raises(ParseError):
            fold(words("x3"), 2)
        assert not fold(words("x1"), 1).accepts(FreeWord.parse("x2"))

    def test_canonical_hash_ignores_generator_order(self):
        a = fold(words("x1 x2", "x2 X1 x2"), 2)
        b = fold(words("x2 X1 x2", "x1 x2"), 2)
        assert a.canonical_hash() == b.canonical_hash()
        assert a.canonical_hash() != fold(words("x1", "x2"), 2).canonical_hash()

    def test_read_words(self):
        lines = ["l1 L2  # first", "", "# comment only", "l3"]
        assert [w.format("l") for w in read_words(lines)] == ["l1 L2", "l3"]

    @pytest.mark.filterwarnings("error::FutureWarning")
    def test_json_export(self, tmp_path):
        path = tmp_path / "core.json"
        fold(words("x1 x2", "x2 x1"), 2).to_json(str(path), prefix="x")
        data = json.loads(path.read_text())
        assert data["rank"] == 2
        assert data["alphabet"] == 2
        assert len(data["graph"]["links"]) == data["edge_count"] == 4


class TestKernel:

    def test_weights(self):
        assert f_quotient_value("g1") == 1
        assert f_quotient_value("d1 g1^2") == 0
        assert f_quotient_value(L_WORDS[2]) == 0

    def test_every_kernel_generator_has_weight_zero(self):
        assert set(kernel_weights().values()) == {0}

    def test_unknown_letter(self):
        with pytest.raises(ParseError):
            f_quotient_value("s1")

    def test_to_free_word(self):
        assert to_free_word("l2 l1^-2").format("l") == "l2 L1 L1"
        with pytest.raises(ParseError):
            to_free_word("d1 l2")

    @pytest.mark.parametrize("j", range(1, 10))
    def test_l_consistency(self, j):
        assert verify_l_consistency(j)

    def test_listed_table_matches_only_three_indices(self):
        assert listed_agreement() == LISTED_AGREES
        assert [j for j, ok in LISTED_AGREES.items() if ok] == [3, 4, 9]
        with pytest.raises(CheckFailure, match="listed-l-consistency-a7"):
            verify_l_consistency(7, listed=True)

    @pytest.mark.parametrize("k", range(1, 10))
    def test_rewrite_recovers_generators(self, k):
        assert rewrite_in_kernel(L_WORDS[k]) == FreeWord.generator(k)

    def test_rewrite_a7(self):
        assert format_power_word(to_power_word(rewrite_in_kernel(UNIPOTENT_WORDS[7]))) == \
            "l1^2 l2^-1 l7^-1 l1 l6^-1 l2 l1^-1"

    def test_rewrite_needs_weight_zero(self):
        with pytest.raises(PreconditionError):
            rewrite_in_kernel("d1 g1")

    @pytest.mark.parametrize("k", [-3, 1, 4])
    def test_conjugation_by_g1_is_invertible(self, k):
        for s in range(1, 10):
            l_s = FreeWord.generator(s)
            assert conjugate_by_g1(conjugate_by_g1(l_s, k), -k) == l_s

    @pytest.mark.parametrize("s", range(1, 10))
    def test_conjugation_by_g1_matches_matrices(self, s):
        g1 = named_matrices()["g1"]
        lhs = l_word_matrix(to_power_word(conjugate_by_g1(FreeWord.generator(s), 1)))
        assert projectively_equal(lhs, g1 * l_word_matrix(f"l{s}") * g1.adjugate())

    def test_l_consistency_bad_index(self):
        with pytest.raises(PreconditionError):
            verify_l_consistency(10)

    def test_l_word_matrix(self):
        assert l_word_matrix("1").is_identity()
        direct = evaluate_word(parse_power_word(L_WORDS[1]), named_matrices())
        assert projectively_equal(l_word_matrix("l1"), direct)

    def test_a_subgroup_is_free_of_rank_nine(self):
        assert a_subgroup_rank() == 9
        graph = a_subgroup_graph()
        assert all(graph.accepts(w) for w in a_words_in_l().values())

    def test_listed_words_that_agree_are_the_rewritten_words(self):
        rewritten, listed = a_words_in_l(), listed_a_words_in_l()
        assert {j for j in rewritten if rewritten[j] == listed[j]} == {3, 4, 9}

    def test_fold_is_independent_of_generator_order(self):
        rng = random.Random(10)
        gens = list(a_words_in_l().values())
        expected = fold(gens, 9).canonical_hash()
        for _ in range(20):
            rng.shuffle(gens)
            graph = fold(gens, 9)
            assert graph.rank() == 9
            assert graph.canonical_hash() == expected
