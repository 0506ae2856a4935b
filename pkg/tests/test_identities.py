"""Certification checks: each must hold, and each corruption control must fail."""

from fractions import Fraction

import pytest

from wpfeq import identities as idn
from wpfeq import jetpoly as jp
from wpfeq.errors import JetOrderOverflow, TruncationTooLow


class TestFactorization:
    def test_holds_with_recorded_cofactor(self):
        rep = idn.factorization_check()
        assert rep.holds
        assert rep.cofactor == jp.DiffPolynomial.constant(1)

    def test_recheck_is_zero(self):
        rep = idn.factorization_check()
        lhs = idn.elimination_polynomial()
        rhs = rep.cofactor * idn.factor_one() * idn.factor_two()
        assert (lhs - rhs).is_zero()

    def test_corruption_control(self):
        bad = (idn.factor_one() + jp.f(0), idn.factor_two())
        assert not idn.factorization_check(factors=bad).holds

    def test_first_factor_vanishes_on_the_diagonal(self):
        diag = jp.substitute_g_to_f(idn.factor_one())
        # identifying the two functions and the two points kills the factor
        assert diag == jp.f(1) ** 2 - jp.f(1) ** 2 - jp.f(0) * jp.f(2) + jp.f(0) * jp.f(2)
        assert diag.is_zero()


class TestFactorRewrites:
    def test_both_hold_with_cofactor_one(self):
        one = jp.DiffPolynomial.constant(1)
        first, second = idn.factor_rewrite_check()
        assert first.holds and first.cofactor == one
        assert second.holds and second.cofactor == one

    def test_wrong_direction_control(self):
        first, second = idn.factor_rewrite_check(direction="x")
        assert not first.holds
        assert not second.holds


class TestDiagonalProduct:
    def test_holds_with_recorded_cofactor(self):
        rep = idn.diagonal_product_check()
        assert rep.holds
        assert rep.cofactor is not None
        assert rep.cofactor.total_degree() == 0  # a pure rational constant

    def test_first_factor_dies_on_exponential_jets(self):
        # all jets equal kills f3*f1 - f2^2
        c = 1.7
        value = jp.evaluate(idn.diagonal_first_factor(), [c] * 6, [])
        assert value == pytest.approx(0.0, abs=1e-14)

    def test_second_factor_dies_on_inverse_square_jets(self):
        # jets of 1/x^2 at x=1: the arithmetic recomputed term by term
        jets = [1.0, -2.0, 6.0, -24.0, 120.0, -720.0]
        f5f1sq = (-720.0) * 4.0
        f3sqf1 = (-24.0) ** 2 * (-2.0)
        three_f2f4f1 = 3.0 * 6.0 * 120.0 * (-2.0)
        three_f2sqf3 = 3.0 * 36.0 * (-24.0)
        assert f5f1sq - f3sqf1 - three_f2f4f1 + three_f2sqf3 == 0.0
        assert jp.evaluate(idn.diagonal_second_factor(), jets, []) == pytest.approx(0.0, abs=1e-9)


class TestOdeCoefficients:
    def test_all_six_reduce(self):
        assert idn.ode_coefficient_check().holds

    def test_p3_formula_reduces_exactly(self):
        cleared = idn.cubic_block_formulas()["p3"]
        assert idn.cubic_branch_reduce(cleared).is_zero()

    def test_l1_formula_reduces_exactly(self):
        cleared = idn.linear_block_formulas()["l1"]
        assert idn.linear_branch_reduce(cleared).is_zero()

    def test_corrupted_p3_fails(self):
        bad = jp.substitute(idn.cubic_block_formulas()["p3"], {"f4": jp.f(4) + jp.f(1)})
        assert not idn.cubic_branch_reduce(bad).is_zero()


class TestCentralDifference:
    def test_order5_confirms_both_levels(self):
        rep = idn.central_difference_check(order=5)
        assert rep.holds
        assert "order 1: 2" in rep.note
        assert "order 2: 1/3" in rep.note

    def test_difference_of_even_series_is_odd(self):
        diff, avg = idn.central_difference_series(5, 0)
        for j in range(0, 6, 2):
            assert diff.coefficients[j].is_zero()
        # and the average keeps only even coefficients
        for j in range(1, 6, 2):
            assert avg.coefficients[j].is_zero()

    def test_low_truncation_rejected(self):
        with pytest.raises(TruncationTooLow):
            idn.central_difference_check(order=4)

    def test_high_truncation_rejected(self):
        with pytest.raises(JetOrderOverflow):
            idn.central_difference_check(order=6)

    def test_expected_first_order_coefficients(self):
        diff0 = idn.central_difference_series(5, 0)[0]
        diff1 = idn.central_difference_series(5, 1)[0]
        # raw eta^1 coefficients carry the common factor 2
        assert diff0.coefficients[1] == 2 * jp.f(1)
        assert diff1.coefficients[1] == 2 * jp.f(2)


def test_run_checks_all_pass():
    rows = idn.run_checks()
    assert len(rows) == 6
    assert all(rep.holds for _, rep in rows)
    names = [name for name, _ in rows]
    assert names == [
        "factorization",
        "rewrites/first",
        "rewrites/second",
        "eqf",
        "coefficients",
        "eta",
    ]


def test_run_checks_unknown_name():
    with pytest.raises(KeyError):
        idn.run_checks(["bogus"])
