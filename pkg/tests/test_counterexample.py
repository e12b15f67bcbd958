import pytest

from burau_forge.core.algebra import QQ, SqMatrix, is_unitary, lp
from burau_forge.core.counterexample import (
    A0_AT_MINUS_ONE,
    DEFAULT_EXPONENTS,
    assemble_counterexample,
    build_C,
    c_checks,
    correction_at_minus_one,
    det_at_points,
    final_eigencheck,
    run_counterexample,
)
from burau_forge.core.similitude import d2_form


@pytest.fixture(scope="module")
def report():
    return run_counterexample()


class TestMatrixC:

    def test_determinant_one(self):
        assert build_C().det() == 1

    def test_unitary_for_d2(self):
        assert is_unitary(build_C(), d2_form(QQ))

    def test_lifts_c_word(self):
        assert c_checks(build_C()) == {"c-det-one": True, "c-unitary": True, "c-lifts-word": True}

    def test_a_perturbed_matrix_fails(self):
        C = build_C()
        bad = SqMatrix([[C[0, 0], C[0, 1] + lp("1", QQ)], [C[1, 0], C[1, 1]]], QQ)
        assert not c_checks(bad)["c-lifts-word"]


class TestPipeline:

    def test_all_checks_pass(self, report):
        assert report.passed, report.failing()

    def test_a0_value_at_minus_one(self, report):
        assert report.A0.evaluate(-1).values() == [[1, 41616, 0], [0, 1, 0], [0, -17238, 1]]
        assert A0_AT_MINUS_ONE == [[1, 41616, 0], [0, 1, 0], [0, -17238, 1]]

    def test_b_prime_is_identity_at_minus_one(self, report):
        assert report.B_prime.evaluate(-1).is_identity()

    def test_eigencheck_depends_on_exponents(self, report):
        assert final_eigencheck(report.A0, DEFAULT_EXPONENTS)
        assert not final_eigencheck(report.A0, (0, 0))

    def test_determinant_at_sample_points(self, report):
        assert det_at_points(report.A0)
        assert not det_at_points(report.A0, (1, 0))

    def test_correction_is_integral(self):
        W = correction_at_minus_one()
        assert all(v.denominator == 1 for row in W.values() for v in row)

    def test_report_serializes(self, report):
        data = report.to_dict()
        assert data["passed"] is True
        assert data["exponents"] == list(DEFAULT_EXPONENTS)
        assert data["A0"] is not None
        assert set(data["checks"]) >= {"eigencheck", "a0-in-gamma-prime", "a0-tame-not-stable"}

    def test_assemble_returns_a0(self):
        A0, report = assemble_counterexample()
        assert A0.det() == 1
        assert report.passed

    def test_materialized_small_exponents(self):
        report = run_counterexample(materialize=(2, 1))
        for name in ("materialized-matches-evaluation", "materialized-det", "materialized-stable"):
            assert report.checks[name], name
