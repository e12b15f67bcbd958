import pytest
from hypothesis import given

from burau_forge.core.braids import (
    B1,
    B2,
    BraidWord,
    FreeWord,
    braid_equal,
    braids_commute,
    centralized_element,
    conjugation_identities,
    parse_braid,
    strand_merge_quotient,
    verify_centralizer,
    verify_conjugation_identity,
)
from burau_forge.core.errors import BraidError, ParseError, PreconditionError
from conftest import braid_words


class TestParsing:

    def test_letters_and_powers(self):
        w = parse_braid("s1 s3^-1 (s2 s1)^2", 4)
        assert w.letters == ((1, 1), (3, -1), (2, 1), (1, 1), (2, 1), (1, 1))

    def test_negative_group_power(self):
        assert parse_braid("(s1 s2)^-1", 3) == parse_braid("s2^-1 s1^-1", 3)

    def test_abbreviations(self):
        assert B1 == parse_braid("s1 s3^-1", 4)
        assert len(B2) == 6
        assert B2.writhe() == 0

    def test_abbreviation_needs_four_strands(self):
        with pytest.raises(ParseError):
            parse_braid("b1", 3)

    def test_generator_out_of_range(self):
        with pytest.raises(BraidError):
            parse_braid("s3", 3)
        with pytest.raises(BraidError):
            BraidWord(3, ((0, 1),))

    def test_malformed(self):
        with pytest.raises(ParseError):
            parse_braid("s1 x2", 3)
        with pytest.raises(ParseError):
            parse_braid("(s1 s2", 3)

    def test_free_word_capitals_are_inverses(self):
        w = FreeWord.parse("l1 L2 l2", prefix="l")
        assert w == FreeWord.parse("l1", prefix="l")
        assert FreeWord.parse("1").is_identity()


class TestArtinAction:

    def test_braid_relation(self):
        assert braid_equal(parse_braid("s1 s2 s1", 3), parse_braid("s2 s1 s2", 3))

    def test_far_commutation(self):
        assert braids_commute(parse_braid("s1", 4), parse_braid("s3", 4))

    def test_adjacent_generators_do_not_commute(self):
        assert not braids_commute(parse_braid("s1", 3), parse_braid("s2", 3))

    def test_strand_mismatch(self):
        with pytest.raises(BraidError):
            braid_equal(parse_braid("s1", 3), parse_braid("s1", 4))

    @given(braid_words())
    def test_word_times_inverse_is_trivial(self, w):
        assert braid_equal(w * w.inverse(), BraidWord.identity(4))

    @given(braid_words(n=4, max_len=5))
    def test_full_twist_is_central(self, w):
        delta_squared = parse_braid("(s1 s2 s3)^4", 4)
        assert braids_commute(w, delta_squared)


class TestCatalog:

    @pytest.mark.parametrize("which", ["sigma3", "sigma2"])
    def test_centralizers(self, which):
        assert verify_centralizer(which)

    def test_unknown_centralizer(self):
        with pytest.raises(PreconditionError):
            verify_centralizer("sigma1")
        with pytest.raises(PreconditionError, match="sigma1"):
            centralized_element("sigma1")

    @pytest.mark.parametrize("identity_id", sorted(conjugation_identities()))
    def test_conjugation_identities(self, identity_id):
        assert verify_conjugation_identity(identity_id)

    def test_unknown_identity(self):
        with pytest.raises(PreconditionError):
            verify_conjugation_identity("no-such-identity")

    @pytest.mark.parametrize("w", [B1, B2])
    def test_strand_merge_kills_b1_and_b2(self, w):
        assert braid_equal(strand_merge_quotient(w), BraidWord.identity(4))

    def test_strand_merge_keeps_s2(self):
        s2 = parse_braid("s2", 4)
        assert not braid_equal(strand_merge_quotient(s2 * s2), BraidWord.identity(4))
