from fractions import Fraction
import random

import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from burau_forge.core.algebra import QQ, SqMatrix, prime_field, projectively_equal
from burau_forge.core.counterexample import C_WORD, c_word, generic_witness
from burau_forge.core.errors import NotInvertibleError, ParseError, PreconditionError
from burau_forge.core.similitude import (
    H0,
    HM1,
    GenId,
    GenWord,
    NotFound,
    coset_classes,
    gen_matrix,
    generator_lift,
    in_quaternionic_group,
    outside_letters,
    q_normal_form,
    similitude_unit,
    verify_relation,
    word_matrix,
)

F2 = prime_field(2)
ODD_FIELDS = [QQ, prime_field(5), prime_field(7)]


class TestGenerators:

    def test_g_lift_has_unit_similitude(self):
        assert similitude_unit(generator_lift(GenId.g("1/2"))) is not None

    def test_undefined_parameter(self):
        # 2^4 = 16 = -1 mod 17
        with pytest.raises(PreconditionError):
            generator_lift(GenId.g(2), prime_field(17))

    def test_char2_generators_need_char2(self):
        with pytest.raises(PreconditionError):
            generator_lift(GenId.au((1,)), QQ)

    def test_unknown_central_label(self):
        with pytest.raises(PreconditionError):
            GenId.e("t^3")

    def test_projective_classes_ignore_scalars(self):
        A = generator_lift(GenId.g(3))
        assert gen_matrix(GenId.g(3)) == gen_matrix(GenId.g(3)) * gen_matrix(H0) * gen_matrix(H0).inverse()
        assert projectively_equal(A, A * 5)


class TestWords:

    def test_parse_and_format(self):
        w = GenWord.parse(C_WORD)
        assert len(w) == 7
        assert w.format() == C_WORD

    def test_adjacent_letters_merge(self):
        w = GenWord.parse("g[2] g[2]^-1 h0 h0")
        assert w.format() == "h0^2"

    def test_empty_word(self):
        assert word_matrix(GenWord.parse("1")).is_identity()

    def test_malformed(self):
        with pytest.raises(ParseError):
            GenWord.parse("g[1/2 h0")

    def test_inverse_word(self):
        w = GenWord.parse("g[1/3] h0 g[-2]^-1")
        assert (word_matrix(w) * word_matrix(w.inverse())).is_identity()


class TestRelations:

    @pytest.mark.parametrize("field", ODD_FIELDS, ids=lambda f: f.tag)
    @pytest.mark.parametrize("r", ["1", "-1", "2", "1/2", "-1/2", "3/5"])
    def test_conjugation_rules(self, field, r):
        for rel in ("h-1-conjugation", "h0-conjugation"):
            try:
                holds = verify_relation(rel, field, r=r)
            except (PreconditionError, NotInvertibleError):
                continue
            assert holds, (rel, field.tag, r)

    @pytest.mark.parametrize("rel", ["h0-square", "lifted-h-1-action", "d-squared", "coset-representatives"])
    @pytest.mark.parametrize("field", ODD_FIELDS, ids=lambda f: f.tag)
    def test_fixed_relations(self, rel, field):
        assert verify_relation(rel, field)

    @pytest.mark.parametrize("p", [None, 3, 5, 7, 17])
    def test_key_relation(self, p):
        assert verify_relation("key", QQ if p is None else prime_field(p))

    @pytest.mark.parametrize("f", ["1", "x", "x^2 + x", "x^3 + 1"])
    def test_char2_swap(self, f):
        assert verify_relation("char2-h0-swap", F2, f=f)

    def test_char2_structure(self):
        assert verify_relation("char2-structure", F2)

    def test_additivity(self):
        assert verify_relation("additivity", F2, f="x", g="x^2 + 1")
        assert verify_relation("additivity", F2, f="x + 1", g="x + 1")

    def test_char2_relation_rejected_elsewhere(self):
        with pytest.raises(PreconditionError):
            verify_relation("char2-structure", QQ)
        with pytest.raises(PreconditionError):
            verify_relation("d-squared", F2)

    def test_missing_parameter(self):
        with pytest.raises(PreconditionError):
            verify_relation("h0-conjugation", QQ)

    def test_unknown_relation(self):
        with pytest.raises(PreconditionError):
            verify_relation("no-such-relation", QQ)

    def test_four_coset_classes_over_q(self):
        assert coset_classes(QQ) == 4


class TestNormalForm:

    def test_recovers_c_word(self):
        word = c_word()
        found = q_normal_form(word_matrix(word), max_len=8)
        assert found
        assert found.format() == word.format()

    def test_coset_prefix(self):
        word = GenWord.parse("h0 g[1/2] g[3]^-1")
        found = q_normal_form(word_matrix(word), max_len=4)
        assert not isinstance(found, NotFound)
        assert projectively_equal(word_matrix(found), word_matrix(word))
        assert found.letters[0][0] == H0

    def test_scalar_multiple_has_same_form(self):
        word = GenWord.parse("g[2] g[-1/3]^-1")
        found = q_normal_form(word_matrix(word) * 7, max_len=4)
        assert found
        assert found.total_length() <= word.total_length()
        assert projectively_equal(word_matrix(found), word_matrix(word))

    def test_bound_too_small(self):
        found = q_normal_form(word_matrix(c_word()), max_len=3)
        assert isinstance(found, NotFound)
        assert not found

    def test_not_a_similitude(self):
        A = SqMatrix.from_strings([["1", "t"], ["t", "1"]], QQ)
        with pytest.raises(PreconditionError):
            q_normal_form(A)

    def test_quaternionic_group_membership(self):
        assert in_quaternionic_group(word_matrix(GenWord.parse("g[1/2] g[5]^-1")))
        assert not in_quaternionic_group(generator_lift(H0))

    @hsettings(max_examples=15, deadline=None)
    @given(st.lists(st.tuples(st.sampled_from(["1/2", "2", "-3", "3/4", "-5/2"]), st.sampled_from([1, -1])),
                    min_size=1, max_size=3))
    def test_random_words_reproduce(self, letters):
        word = GenWord.of((GenId.g(r), e) for r, e in letters)
        found = q_normal_form(word_matrix(word), max_len=4)
        assert not isinstance(found, NotFound)
        assert projectively_equal(word_matrix(found), word_matrix(word))

    NF_PARAMS = ("1", "-1", "2", "1/2", "-3", "3/4")

    def random_word(self, rng: random.Random, max_len: int = 6) -> GenWord:
        letters = []
        for _ in range(rng.randint(1, max_len)):
            g = H0 if rng.random() < 0.25 else GenId.g(rng.choice(self.NF_PARAMS))
            letters.append((g, rng.choice((1, -1))))
        return GenWord.of(letters)

    def assert_round_trip(self, word: GenWord, field):
        word = word.over(field)
        found = q_normal_form(word_matrix(word, field), max_len=12)
        assert not isinstance(found, NotFound), word.format()
        assert projectively_equal(word_matrix(found, field), word_matrix(word, field))
        # reduced: no two neighbouring letters from the same cyclic factor
        assert all(a != b for (a, _), (b, _) in zip(found.letters, found.letters[1:])), found.format()

    @pytest.mark.parametrize("field", [QQ, prime_field(5)], ids=["q", "fp5"])
    def test_mixed_words_round_trip(self, field):
        rng = random.Random(6)
        for _ in range(20):
            self.assert_round_trip(self.random_word(rng), field)

    @pytest.mark.slow
    @pytest.mark.parametrize("field", [QQ, prime_field(5)], ids=["q", "fp5"])
    def test_many_mixed_words_round_trip(self, field):
        rng = random.Random(200)
        for _ in range(200):
            self.assert_round_trip(self.random_word(rng), field)


class TestWitness:

    def test_c_word_escapes_subgroup(self):
        outside = outside_letters(c_word(), [H0, GenId.g(1)], QQ)
        assert GenId.g(Fraction(-1, 2)) in outside

    def test_h_minus_one_closure(self):
        assert not outside_letters(GenWord.parse("g[-1]"), [HM1, GenId.g(1)], QQ)

    @pytest.mark.parametrize("p,expected", [(5, "-1/2"), (17, "-7/13")])
    def test_witness_mod_p(self, p, expected):
        F = prime_field(p)
        assert generic_witness(p) == GenId.g(expected).over(F)

    def test_no_witness_mod_three(self):
        assert generic_witness(3) is None
