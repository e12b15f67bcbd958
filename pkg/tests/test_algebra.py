from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from burau_forge.core.algebra import (
    QQ,
    QQI,
    GaussianRational,
    LaurentPoly,
    RatFunc,
    SqMatrix,
    field_from_tag,
    is_unitary,
    lp,
    multi_quad,
    prime_field,
    projective_canonical,
    projective_ratio,
    projectively_equal,
)
from burau_forge.core.algebra.serialization import dump_matrix, load_matrix, matrix_from_dict
from burau_forge.core.errors import (
    AlgebraError,
    FieldMismatchError,
    NotInvertibleError,
    ParseError,
    PoleError,
    RadicalTowerOverflow,
)
from conftest import elementary_products, laurent_polys


class TestFields:

    def test_tags_round_trip(self):
        for tag in ("q", "qi", "fp:5", "fp:17"):
            assert field_from_tag(tag).tag == tag

    def test_unknown_tag(self):
        with pytest.raises(ParseError):
            field_from_tag("zz")

    def test_composite_modulus_rejected(self):
        with pytest.raises(AlgebraError):
            prime_field(4)

    def test_prime_field_rejects_bad_denominator(self):
        with pytest.raises(NotInvertibleError):
            prime_field(5).element(Fraction(1, 5))

    def test_prime_field_inverts_denominator(self):
        f7 = prime_field(7)
        assert f7.element(Fraction(1, 2)) * 2 == f7.one()

    def test_gaussian_i_squared(self):
        i = QQI.i()
        assert i * i == -1
        assert (GaussianRational(1, 1) * GaussianRational(1, -1)) == 2

    def test_tower_square_roots(self):
        K = multi_quad([2, 3])
        r6 = K.sqrt(6)
        assert r6 * r6 == 6
        assert K.sqrt(Fraction(1, 2)) * K.sqrt(2) == 1

    def test_tower_cap(self):
        with pytest.raises(RadicalTowerOverflow):
            multi_quad([2, 3, 5, 7, 11, 13, 17])


class TestLaurent:

    def test_parse_and_format(self):
        f = lp("-2 + 6*t - 9*t^2", QQ)
        assert f.coefficient(2) == -9
        assert f.degree() == 2 and f.low_degree() == 0
        assert lp(str(f), QQ) == f

    def test_negative_exponents(self):
        f = lp("t^-1 + 1", QQ)
        assert f.low_degree() == -1
        assert f * LaurentPoly.t(QQ) == lp("1 + t", QQ)

    def test_malformed(self):
        with pytest.raises(ParseError):
            lp("1 + + t", QQ)
        with pytest.raises(ParseError):
            lp("", QQ)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            lp("t", QQ) + lp("t", prime_field(5))

    def test_evaluate(self):
        assert lp("1 - t + t^2", QQ).evaluate(2) == 3
        assert lp("t^-1", QQ).evaluate(Fraction(1, 3)) == 3
        with pytest.raises(PoleError):
            lp("t^-1", QQ).evaluate(0)

    def test_evaluate_at_i(self):
        f = lp("1 + t^2", QQI)
        assert f.evaluate(QQI.i()) == 0

    def test_unit_inverse(self):
        u = lp("-3*t^2", QQ)
        assert u * u.unit_inverse() == 1
        with pytest.raises(NotInvertibleError):
            lp("1 + t", QQ).unit_inverse()

    def test_division_by_non_unit_is_rational(self):
        q = lp("1", QQ) / lp("1 - t", QQ)
        assert isinstance(q, RatFunc)
        assert not q.is_laurent()

    @given(laurent_polys(field=QQI))
    def test_bar_is_involution(self, f):
        assert f.bar().bar() == f

    @given(laurent_polys(field=QQI), laurent_polys(field=QQI))
    def test_bar_is_multiplicative(self, f, g):
        assert (f * g).bar() == f.bar() * g.bar()

    @pytest.mark.slow
    @hsettings(max_examples=1000, deadline=None)
    @given(laurent_polys(field=QQI), laurent_polys(field=QQI))
    def test_bar_is_a_ring_involution_over_gaussian_rationals(self, f, g):
        assert (f * g).bar() == f.bar() * g.bar()
        assert (f + g).bar().bar() == f + g

    @pytest.mark.slow
    @hsettings(max_examples=1000, deadline=None)
    @given(laurent_polys(), laurent_polys())
    def test_bar_is_a_ring_involution_over_rationals(self, f, g):
        assert (f * g).bar() == f.bar() * g.bar()
        assert (f + g).bar().bar() == f + g

    @given(laurent_polys(), laurent_polys(), laurent_polys())
    def test_distributive(self, f, g, h):
        assert f * (g + h) == f * g + f * h

    @given(laurent_polys(), st.integers(min_value=1, max_value=5))
    def test_evaluation_is_a_homomorphism(self, f, x):
        g = lp("1 + 2*t^-1", QQ)
        assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)


class TestRatFunc:

    def test_cancels_common_factor(self):
        r = RatFunc(lp("1 - t^2", QQ), lp("1 - t", QQ))
        assert r.is_laurent()
        assert r == lp("1 + t", QQ)

    def test_val_inf(self):
        r = RatFunc(lp("1", QQ), lp("t^2 + 1", QQ))
        assert r.val_inf() == 2
        assert RatFunc(lp("t^3", QQ)).val_inf() == -3

    def test_pole(self):
        r = RatFunc(lp("1", QQ), lp("1 - t", QQ))
        with pytest.raises(PoleError):
            r.evaluate(1)

    def test_zero_denominator(self):
        with pytest.raises(NotInvertibleError):
            RatFunc(lp("1", QQ), LaurentPoly.zero(QQ))

    def test_parse(self):
        r = RatFunc.parse("(1 + t)/(1 - t)", QQ)
        assert r * RatFunc(lp("1 - t", QQ)) == lp("1 + t", QQ)


class TestMatrix:

    def test_elementary(self):
        E = SqMatrix.elementary(3, 0, 2, lp("t^-1 - 2", QQ), QQ)
        assert E.det() == 1
        assert E == SqMatrix.from_strings([["1", "0", "t^-1 - 2"], ["0", "1", "0"], ["0", "0", "1"]], QQ)
        with pytest.raises(AlgebraError):
            SqMatrix.elementary(3, 1, 1, 1, QQ)

    @hsettings(max_examples=20, deadline=None)
    @given(elementary_products())
    def test_elementary_products_are_invertible_over_laurent(self, A):
        assert A.det() == 1
        assert (A * A.inverse()).is_identity()

    def test_det_and_inverse(self):
        A = SqMatrix.from_strings([["t", "1"], ["0", "1"]], QQ)
        assert A.det() == lp("t", QQ)
        assert (A * A.inverse()).is_identity()

    def test_non_unit_determinant(self):
        A = SqMatrix.from_strings([["1 + t", "0"], ["0", "1"]], QQ)
        with pytest.raises(NotInvertibleError):
            A.inverse()
        assert (A * A.rational_inverse()).is_identity()

    def test_singular(self):
        A = SqMatrix.from_strings([["1", "t"], ["1", "t"]], QQ)
        with pytest.raises(NotInvertibleError):
            A.inverse()

    def test_adjugate_identity(self):
        A = SqMatrix.from_strings([["1", "t", "0"], ["2", "1", "t^-1"], ["0", "1", "3"]], QQ)
        assert A * A.adjugate() == SqMatrix.identity(3, QQ) * A.det()

    def test_power(self):
        A = SqMatrix.from_strings([["1", "t"], ["0", "1"]], QQ)
        assert A ** 3 == SqMatrix.from_strings([["1", "3*t"], ["0", "1"]], QQ)
        assert (A ** -2 * A ** 2).is_identity()

    def test_evaluate_values(self):
        A = SqMatrix.from_strings([["t", "t^2"], ["1", "0"]], QQ)
        assert A.evaluate(-1).values() == [[-1, 1], [1, 0]]

    def test_projective_equality(self):
        A = SqMatrix.from_strings([["1", "t"], ["0", "2"]], QQ)
        B = A * lp("3*t^2", QQ)
        assert projectively_equal(A, B)
        assert projective_ratio(B, A) == lp("3*t^2", QQ)
        assert projective_canonical(A) == projective_canonical(B)
        assert not projectively_equal(A, SqMatrix.identity(2, QQ))

    def test_unitary_identity(self):
        J = SqMatrix.identity(2, QQ)
        assert is_unitary(SqMatrix.identity(2, QQ), J)
        assert not is_unitary(SqMatrix.diagonal([lp("2", QQ), lp("1", QQ)], QQ), J)

    def test_ragged_rows(self):
        with pytest.raises(AlgebraError):
            SqMatrix([[1, 2], [3]], QQ)


class TestSerialization:

    def test_file_round_trip(self, tmp_path):
        A = SqMatrix.from_strings([["-t", "1"], ["(1)/(1 - t)", "0"]], QQ)
        path = tmp_path / "a.json"
        dump_matrix(A, path)
        assert load_matrix(path) == A

    def test_yaml(self, tmp_path):
        path = tmp_path / "a.yaml"
        path.write_text("n: 2\nfield: fp:5\nentries:\n  - ['t', '1']\n  - ['1', '0']\n")
        A = load_matrix(path)
        assert A.field == prime_field(5)
        assert A.det() == -1

    @pytest.mark.parametrize("doc", [
        {"n": 2, "field": "q"},
        {"n": 2, "field": "r", "entries": [["1", "0"], ["0", "1"]]},
        {"n": 2, "field": "q", "entries": [["1", "0"]]},
    ])
    def test_invalid_documents(self, doc):
        with pytest.raises(ParseError):
            matrix_from_dict(doc)


@hsettings(max_examples=25)
@given(st.integers(min_value=-3, max_value=3), st.integers(min_value=1, max_value=4))
def test_monomial_power_law(k, m):
    u = LaurentPoly.monomial(QQ, 2, k)
    assert u ** m == LaurentPoly.monomial(QQ, 2 ** m, k * m)
