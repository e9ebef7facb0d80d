from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest

from analysis.asymptotics import (
    connective_constant_sum,
    convergence_check,
    dominance_check,
    exact_ratio,
    format_fixed,
    leading_term,
    limit_constant,
    limit_constants,
    ratio,
)
from analysis.surds import QuadraticSurd
from formulas.model import Connective
from sequences.printed import PRINTED_RATIOS_AT_100
from sequences.recurrences import SequenceId, compute

S = SequenceId


class TestRatio:
    def test_table_values(self):
        assert ratio(S.T1, 100, 9) == "0.497093847"
        assert ratio(S.F, 4, 4) == "0.2375"
        assert ratio(S.T3, 2, 2) == "0.25"

    def test_h_is_a_power_of_two(self):
        for n in (1, 5, 10, 40):
            assert exact_ratio(S.H, n) == Fraction(1, 2**n)
        assert ratio(S.H, 10) == "0.0009765625"

    def test_published_decimals_at_100(self):
        """The printed 9-digit decimals agree up to rounding of the last digit."""
        for sid, printed in PRINTED_RATIOS_AT_100.items():
            places = len(printed.split(".")[1])
            computed = Decimal(ratio(sid, 100, places + 3))
            assert abs(computed - Decimal(printed)) <= Decimal(1).scaleb(-places), sid

    def test_prefixes_agree_across_precisions(self):
        long = ratio(S.D1, 50, 60)
        short = ratio(S.D1, 50, 50)
        assert long[:45] == short[:45]

    def test_round_half_even(self):
        assert format_fixed(Fraction(1, 8), 2) == "0.12"
        assert format_fixed(Fraction(3, 8), 2) == "0.38"
        assert format_fixed(Fraction(-1, 3), 3) == "-0.333"
        assert format_fixed(Fraction(5, 2), 0) == "2"

    def test_pairwise_ratio(self):
        assert ratio(S.T3, 3, 2, denominator=S.T2) == "0.50"

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            ratio(S.F, 10, 201)
        with pytest.raises(ValueError):
            ratio(S.F, 0)
        with pytest.raises(ValueError):
            exact_ratio(S.F, 1, denominator=S.T1)


class TestLimitConstants:
    def test_counts(self):
        constants = limit_constants()
        assert len(constants) == 27
        assert sum(c.denominator == S.G for c in constants) == 13

    def test_examples(self):
        assert limit_constant(S.F).decimal.startswith("0.211324865405")
        assert limit_constant(S.T3, S.T2).exact_form == "(√3-1)/2"
        assert limit_constant(S.K1, S.K2).value == QuadraticSurd(2, 2, 2)
        assert limit_constant(S.H).value == 0

    def test_each_connective_sums_to_one(self):
        for c in Connective:
            assert connective_constant_sum(c) == 1

    def test_pairwise_constants_are_quotients(self):
        for constant in limit_constants():
            if constant.denominator == S.G:
                continue
            numerator = limit_constant(constant.numerator).value
            denominator = limit_constant(constant.denominator).value
            assert constant.value == numerator / denominator, constant.id

    def test_decimals_against_mpmath(self):
        with mpmath.workdps(40):
            expected = {
                S.F: (3 - mpmath.sqrt(3)) / 6,
                S.Y: (10 - 2 * mpmath.sqrt(10)) / 10,
                S.K1: mpmath.sqrt(2) / 2,
            }
            for sid, value in expected.items():
                assert abs(mpmath.mpf(limit_constant(sid).decimal) - value) < mpmath.mpf(10) ** -28, sid

    def test_unknown_pair(self):
        with pytest.raises(ValueError):
            limit_constant(S.F, S.K1)

    def test_as_row(self):
        row = limit_constant(S.Y).as_row()
        assert row["id"] == "y/g"
        assert (row["a"], row["b"], row["k"]) == ("1", "-1/5", "10")


class TestConvergence:
    def test_t1_errors(self):
        report = convergence_check(S.T1, limit_constant(S.T1), [10, 100])
        assert report.passed
        assert report.errors[0].startswith("0.03096")
        assert report.errors[1].startswith("0.00290")

    def test_h_geometric(self):
        report = convergence_check(S.H, limit_constant(S.H), [5, 10])
        assert report.passed
        assert report.errors[0] == "0.03125"
        assert abs(float(report.errors[1]) - 2**-10) < 1e-9

    def test_every_ratio_over_g_converges(self):
        for constant in limit_constants():
            if constant.denominator != S.G or constant.numerator == S.G:
                continue
            report = convergence_check(constant.numerator, constant, [10, 50, 100, 500])
            assert report.passed, (constant.id, report.errors)

    def test_probes_must_ascend(self):
        with pytest.raises(ValueError):
            convergence_check(S.F, None, [100, 10])

    def test_g_has_nothing_to_converge(self):
        with pytest.raises(ValueError):
            convergence_check(S.G, None, [10])


class TestDominance:
    def test_ordering_up_to_200(self):
        report = dominance_check(3, 200)
        assert report.passed
        assert report.counterexample is None

    def test_fails_where_ties_exist(self):
        # at n=2 every case count is 1
        assert dominance_check(2, 5).counterexample == 2


class TestLeadingTerm:
    def test_ratio_to_leading_term_tends_to_one(self):
        n = 400
        value = compute(S.T1, n).values[-1]
        scale = value / leading_term(S.T1, n)
        assert abs(scale - 1) < 0.02
