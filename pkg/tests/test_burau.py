import random

import pytest
from hypothesis import given, settings as hsettings

from burau_forge.core.algebra import QQ, QQI, LaurentPoly, SqMatrix, is_unitary, lp
from burau_forge.core.braids import BraidWord, parse_braid
from burau_forge.core.burau import (
    BACKWARD,
    FORWARD,
    BurauKind,
    burau_matrix,
    conj_M,
    diagonal_unitarity_holds,
    direct_criteria,
    embed_trivial,
    gamma_membership,
    gamma_prime_membership,
    generator_matrix,
    hereditary_embed,
    j_prime_unitary,
    laurent_criteria,
    reduced_squier_form,
    reference_matrices,
    squier_form,
)
from burau_forge.core.errors import PreconditionError
from burau_forge.verification.checks import random_braid
from conftest import braid_words, elementary_products

U, R = BurauKind.UNREDUCED, BurauKind.REDUCED


def reduced(text: str) -> SqMatrix:
    return burau_matrix(parse_braid(text, 4), R)


class TestGenerators:

    def test_unreduced_block(self):
        A = generator_matrix(3, 1, 1, U, QQ)
        assert A == SqMatrix.from_strings([["1 - t", "t", "0"], ["1", "0", "0"], ["0", "0", "1"]], QQ)

    def test_reduced_end_generators(self):
        assert generator_matrix(4, 1, 1, R, QQ) == SqMatrix.from_strings(
            [["-t", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]], QQ)
        assert generator_matrix(4, 3, 1, R, QQ) == SqMatrix.from_strings(
            [["1", "0", "0"], ["0", "1", "0"], ["0", "t", "-t"]], QQ)

    def test_empty_word_is_identity(self):
        assert burau_matrix(BraidWord.identity(4), R).is_identity()

    def test_inverse_letters(self):
        assert (burau_matrix(parse_braid("s2 s2^-1", 4), U)).is_identity()

    def test_kind_parse(self):
        assert BurauKind.parse("U") is U
        assert BurauKind.parse("reduced") is R
        with pytest.raises(PreconditionError):
            BurauKind.parse("x")

    def test_braid_relation_holds_in_matrices(self):
        assert reduced("s1 s2 s1") == reduced("s2 s1 s2")
        assert reduced("s1 s3") == reduced("s3 s1")

    def test_field_is_carried(self):
        A = burau_matrix(parse_braid("s1", 3), U, QQI)
        assert A.field == QQI


class TestUnitarity:

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_squier_form_shape(self, n):
        J = squier_form(n)
        assert J[0, 0] == 1
        assert J[1, 0] == -LaurentPoly.t(QQ)
        assert J[0, 1] == -LaurentPoly.t(QQ, -1)

    @hsettings(max_examples=30, deadline=None)
    @given(braid_words(n=4, max_len=6))
    def test_unreduced_images_preserve_form(self, w):
        assert is_unitary(burau_matrix(w, U), squier_form(4))

    @hsettings(max_examples=20, deadline=None)
    @given(braid_words(n=4, max_len=5))
    def test_reduced_images_preserve_form(self, w):
        assert is_unitary(burau_matrix(w, R), reduced_squier_form(4))

    @hsettings(max_examples=20, deadline=None)
    @given(braid_words(n=4, max_len=5))
    def test_conjugate_preserves_diagonal_form(self, w):
        assert diagonal_unitarity_holds(burau_matrix(w, R))

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_many_unreduced_images_preserve_form(self, n):
        rng = random.Random(n)
        J = squier_form(n)
        for _ in range(500):
            w = random_braid(rng, n)
            assert is_unitary(burau_matrix(w, U), J), w

    @pytest.mark.slow
    def test_many_conjugates_preserve_diagonal_form(self):
        rng = random.Random(44)
        for _ in range(500):
            w = random_braid(rng, 4)
            assert diagonal_unitarity_holds(burau_matrix(w, R)), w

    def test_non_image_breaks_form(self):
        assert not j_prime_unitary(SqMatrix.identity(3, QQ) * 2)


class TestTargetGroups:

    @hsettings(max_examples=20, deadline=None)
    @given(braid_words(n=4, max_len=6))
    def test_images_lie_in_gamma(self, w):
        report = gamma_membership(burau_matrix(w, U), 4)
        assert report.passed, report.conditions

    def test_gamma_condition_names(self):
        report = gamma_membership(burau_matrix(parse_braid("s1", 3), U), 3)
        assert set(report.conditions) == {"fixes_v", "fixes_ones", "unitary", "permutation_at_one"}

    def test_non_member(self):
        A = SqMatrix.diagonal([lp("t", QQ), lp("1", QQ), lp("1", QQ)], QQ)
        report = gamma_membership(A, 3)
        assert not report.passed
        assert not report.conditions["fixes_ones"]

    def test_size_mismatch(self):
        with pytest.raises(PreconditionError):
            gamma_membership(SqMatrix.identity(3, QQ), 4)

    @pytest.mark.parametrize("word", ["s1", "s2 s3^-1", "b1", "b2", "(s3 s2 s3)^2"])
    def test_reduced_images_in_gamma_prime(self, word):
        assert gamma_prime_membership(reduced(word)).passed

    def test_gamma_prime_needs_three_by_three(self):
        with pytest.raises(PreconditionError):
            gamma_prime_membership(SqMatrix.identity(2, QQ))


class TestEmbeddings:

    def test_unreduced_embedding_matches_shifted_braid(self):
        w = parse_braid("s1 s2^-1", 3)
        B, report = hereditary_embed(burau_matrix(w, U), U)
        assert report.passed
        assert B == burau_matrix(w.shift(1), U)

    def test_unreduced_embedding_rejects_non_member(self):
        A = SqMatrix.diagonal([lp("t", QQ), lp("1", QQ)], QQ)
        with pytest.raises(PreconditionError):
            embed_trivial(A, U)

    def test_reduced_embedding_matches_shifted_braid(self):
        w = parse_braid("s1^2", 3)
        B = embed_trivial(burau_matrix(w, R), R)
        assert B == burau_matrix(w.shift(1), R)

    def test_reduced_embedding_lands_in_gamma_prime(self):
        B, report = hereditary_embed(burau_matrix(parse_braid("s1 s2", 3), R), R)
        assert B.n == 3
        assert report.passed


class TestDiagonalization:

    @pytest.mark.parametrize("name,word", [
        ("s1", "s1"), ("s3", "s3"), ("twist", "(s3 s2 s3)^2"), ("S'", "b1"), ("T'", "b2"),
    ])
    def test_reference_matrices(self, name, word):
        assert conj_M(reduced(word), FORWARD) == reference_matrices()[name]

    def test_s2_conjugate_is_not_laurent(self):
        X = conj_M(reduced("s2"), FORWARD)
        assert not X.is_laurent()
        assert X == reference_matrices()["s2"]

    def test_conjugation_respects_inverses(self):
        A = reduced("s2 s1^-1")
        X = conj_M(A, FORWARD).rational_inverse()
        assert conj_M(A.inverse(), FORWARD) == X

    def test_t_prime_at_minus_i(self):
        T = reference_matrices(QQI)["T'"].evaluate(QQI.i() * -1)
        expected = SqMatrix.from_strings([["1", "0", "(1-i)"], ["0", "0", "(-i)"], ["0", "(-i)", "0"]], QQI)
        assert T == expected

    def test_wrong_size(self):
        with pytest.raises(PreconditionError):
            conj_M(SqMatrix.identity(2, QQ), BACKWARD)


class TestCriteria:

    @pytest.mark.parametrize("word,p1", [("s1", True), ("s3", True), ("s2", False)])
    def test_tame_generators(self, word, p1):
        assert laurent_criteria(reduced(word)).p1 is p1

    @pytest.mark.parametrize("word", ["s1", "s2", "s3", "b1", "b2", "s2 s1 s2^-1", "s1 s2 s3"])
    def test_fast_criteria_match_direct(self, word):
        A = reduced(word)
        assert laurent_criteria(A) == direct_criteria(A)

    @hsettings(max_examples=25, deadline=None)
    @given(elementary_products())
    def test_criteria_on_elementary_products(self, A):
        assert laurent_criteria(A) == direct_criteria(A)

    def test_transvection_below_the_diagonal_is_not_tame(self):
        E = SqMatrix.elementary(3, 1, 0, 1, QQ)
        assert not laurent_criteria(E).p1
        assert laurent_criteria(E) == direct_criteria(E)

    @pytest.mark.slow
    @hsettings(max_examples=200, deadline=None)
    @given(elementary_products())
    def test_criteria_on_many_non_images(self, A):
        assert laurent_criteria(A) == direct_criteria(A)

    @pytest.mark.slow
    @hsettings(max_examples=200, deadline=None)
    @given(braid_words(n=4, max_len=6))
    def test_criteria_on_many_images(self, w):
        A = burau_matrix(w, R)
        assert laurent_criteria(A) == direct_criteria(A)

    def test_needs_laurent_input(self):
        X = conj_M(reduced("s2"), FORWARD)
        with pytest.raises(PreconditionError):
            laurent_criteria(X)

    def test_needs_three_by_three(self):
        with pytest.raises(PreconditionError):
            laurent_criteria(SqMatrix.identity(2, QQ))
