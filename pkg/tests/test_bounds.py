import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glbounds import (
    BoundInput,
    Interval,
    MembershipMode,
    MembershipStatus,
    Proposition,
    Regime,
    corollary_bound_q1,
    evaluate_bound_report,
    hermite_hadamard_check,
    parse,
    proposition_bound,
    theorem_bound,
)

UNIT = Interval(0.0, 1.0)

LAM_GRID = [i / 100.0 for i in range(0, 101, 5)]

PROP_SETTINGS = [
    (Proposition.MIDPOINT_Q1, 0.0, (1.0,)),
    (Proposition.TRAPEZOID_Q1, 1.0, (1.0,)),
    (Proposition.SIMPSON_Q1, 1.0 / 3.0, (1.0,)),
    (Proposition.MIDTRAP_Q1, 0.5, (1.0,)),
    (Proposition.MIDPOINT_PM, 0.0, (1.0, 2.0, 3.0)),
    (Proposition.TRAPEZOID_PM, 1.0, (1.0, 2.0, 3.0)),
    (Proposition.SIMPSON_PM, 1.0 / 3.0, (1.0, 2.0, 3.0)),
]


class TestTheoremBound:
    def test_q1_constant_second_derivative(self):
        got = theorem_bound(BoundInput(UNIT, 0.0, 1.0, 2.0, 2.0))
        assert got == pytest.approx(2.0 * math.log(2.0) - 1.0, abs=1e-12)

    def test_q1_trapezoid_case(self):
        got = theorem_bound(BoundInput(UNIT, 1.0, 1.0, 2.0, 2.0))
        assert got == pytest.approx(1.0, abs=1e-12)

    def test_q2_midpoint_case(self):
        got = theorem_bound(BoundInput(UNIT, 0.0, 2.0, 2.0, 2.0))
        expected = 0.5 * math.sqrt(1.0 / 24.0) * 2.0 * math.sqrt(4.0 * (math.log(2.0) - 0.5))
        assert got == pytest.approx(expected, abs=1e-12)

    def test_zero_data_gives_zero(self):
        assert theorem_bound(BoundInput(UNIT, 0.3, 2.0, 0.0, 0.0)) == 0.0

    @pytest.mark.parametrize(
        "lam,q,ga,gb",
        [(-0.1, 1.0, 1.0, 1.0), (0.5, 0.9, 1.0, 1.0), (0.5, 1.0, -1.0, 1.0), (0.5, math.inf, 1.0, 1.0)],
    )
    def test_input_validation(self, lam, q, ga, gb):
        with pytest.raises(ValueError):
            BoundInput(UNIT, lam, q, ga, gb)

    @settings(max_examples=150, deadline=None)
    @given(
        st.sampled_from(LAM_GRID),
        st.floats(1.0, 8.0),
        st.floats(0.0, 10.0),
        st.floats(0.0, 10.0),
    )
    def test_symmetric_in_endpoint_data(self, lam, q, ga, gb):
        one = theorem_bound(BoundInput(UNIT, lam, q, ga, gb))
        two = theorem_bound(BoundInput(UNIT, lam, q, gb, ga))
        assert abs(one - two) <= 1e-15 * max(1.0, abs(one))

    @settings(max_examples=150, deadline=None)
    @given(
        st.sampled_from(LAM_GRID),
        st.floats(0.0, 10.0),
        st.floats(0.0, 10.0),
    )
    def test_q1_collapse_matches_corollary(self, lam, ga, gb):
        general = theorem_bound(BoundInput(UNIT, lam, 1.0, ga, gb))
        collapsed = corollary_bound_q1(UNIT, lam, ga, gb)
        assert abs(general - collapsed) <= 1e-12

    @settings(max_examples=150, deadline=None)
    @given(
        st.sampled_from(LAM_GRID),
        st.floats(1.0, 8.0),
        st.floats(0.01, 10.0),
        st.floats(0.01, 10.0),
        st.floats(0.01, 100.0),
    )
    def test_positive_homogeneity_in_data(self, lam, q, ga, gb, c):
        base = theorem_bound(BoundInput(UNIT, lam, q, ga, gb))
        scaled = theorem_bound(BoundInput(UNIT, lam, q, c * ga, c * gb))
        assert abs(scaled - c * base) <= 1e-12 * max(1.0, abs(c * base))


class TestCorollary:
    def test_midpoint_matches_quarter_prefactor_form(self):
        got = corollary_bound_q1(UNIT, 0.0, 2.0, 2.0)
        assert got == pytest.approx(0.25 * math.log(4.0 / math.e) * 4.0, abs=1e-12)
        assert got == pytest.approx(2.0 * math.log(2.0) - 1.0, abs=1e-12)

    def test_simpson_value(self):
        got = corollary_bound_q1(UNIT, 1.0 / 3.0, 1.0, 1.0)
        assert got == pytest.approx((2.0 / 3.0) * math.log(8.0 / 9.0) + 1.0 / 6.0, abs=1e-12)

    def test_lambda_validation(self):
        with pytest.raises(ValueError):
            corollary_bound_q1(UNIT, 1.5, 1.0, 1.0)


class TestPropositions:
    @pytest.mark.parametrize("which,lam,qs", PROP_SETTINGS)
    def test_agree_with_general_path(self, which, lam, qs):
        for q in qs:
            for ga, gb in [(2.0, 2.0), (1.0, 0.0), (0.3, 2.7), (5.0, 1.0)]:
                special = proposition_bound(which, UNIT, q, ga, gb)
                general = theorem_bound(BoundInput(UNIT, lam, q, ga, gb))
                assert abs(special - general) <= 1e-12, (which, q, ga, gb)

    def test_trapezoid_q1_value(self):
        assert proposition_bound(Proposition.TRAPEZOID_Q1, UNIT, 1.0, 2.0, 2.0) == pytest.approx(
            1.0, abs=1e-15
        )

    def test_midpoint_pm_matches_theorem_at_q2(self):
        special = proposition_bound(Proposition.MIDPOINT_PM, UNIT, 2.0, 2.0, 2.0)
        general = theorem_bound(BoundInput(UNIT, 0.0, 2.0, 2.0, 2.0))
        assert abs(special - general) <= 1e-12
        assert special == pytest.approx(0.179419, abs=1e-6)

    def test_simpson_pm_at_q1_collapses(self):
        pm = proposition_bound(Proposition.SIMPSON_PM, UNIT, 1.0, 1.0, 1.0)
        q1 = proposition_bound(Proposition.SIMPSON_Q1, UNIT, 1.0, 1.0, 1.0)
        assert abs(pm - q1) <= 1e-12

    def test_q1_variants_reject_other_q(self):
        for which in (
            Proposition.MIDPOINT_Q1,
            Proposition.TRAPEZOID_Q1,
            Proposition.SIMPSON_Q1,
            Proposition.MIDTRAP_Q1,
        ):
            with pytest.raises(ValueError):
                proposition_bound(which, UNIT, 2.0, 1.0, 1.0)

    def test_rejects_bad_data(self):
        with pytest.raises(ValueError):
            proposition_bound(Proposition.MIDPOINT_PM, UNIT, 0.5, 1.0, 1.0)
        with pytest.raises(ValueError):
            proposition_bound(Proposition.MIDPOINT_PM, UNIT, 2.0, -1.0, 1.0)


class TestBoundReport:
    def test_square_midpoint_worked_numbers(self):
        rep = evaluate_bound_report(
            parse("x^2"), UNIT, 0.0, 1.0, membership_mode=MembershipMode.CERTIFIED
        )
        assert rep.lhs_abs == pytest.approx(1.0 / 12.0, abs=1e-9)
        assert rep.bound == pytest.approx(2.0 * math.log(2.0) - 1.0, abs=1e-12)
        assert rep.ratio == pytest.approx((1.0 / 12.0) / (2.0 * math.log(2.0) - 1.0), abs=1e-6)
        assert rep.regime is Regime.LOW
        assert rep.q_membership is MembershipStatus.CERTIFIED

    def test_square_simpson_is_exact(self):
        rep = evaluate_bound_report(
            parse("x^2"), UNIT, 1.0 / 3.0, 1.0, membership_mode=MembershipMode.CERTIFIED
        )
        assert rep.lhs_abs <= 1e-10
        assert rep.ratio == pytest.approx(0.0, abs=1e-9)

    def test_exp_checked_pass_and_bounded(self):
        rep = evaluate_bound_report(parse("exp(x)"), UNIT, 1.0, 2.0, grid_n=16)
        assert rep.q_membership is MembershipStatus.CHECKED_PASS
        assert rep.lhs_abs <= rep.bound

    def test_sine_checked_fail_still_reports(self):
        rep = evaluate_bound_report(
            parse("sin(x)"), Interval(0.000001, 3.141592), 0.0, 1.0, grid_n=16
        )
        assert rep.q_membership is MembershipStatus.CHECKED_FAIL
        assert rep.lhs_abs > 0.0
        assert rep.bound > 0.0

    def test_skip_mode_reports_unchecked(self):
        rep = evaluate_bound_report(
            parse("x^2"), UNIT, 0.0, 1.0, membership_mode=MembershipMode.SKIP
        )
        assert rep.q_membership is MembershipStatus.UNCHECKED

    def test_zero_second_derivative_gives_undefined_ratio(self):
        rep = evaluate_bound_report(
            parse("x"), UNIT, 0.3, 1.0, membership_mode=MembershipMode.CERTIFIED
        )
        assert rep.bound == 0.0
        assert rep.ratio is None
        assert rep.lhs_abs <= 1e-12


class TestHermiteHadamard:
    def test_square(self):
        rep = hermite_hadamard_check(parse("x^2"), UNIT)
        assert rep.holds
        assert rep.lower == pytest.approx(0.25, abs=1e-15)
        assert rep.mid == pytest.approx(1.0 / 3.0, abs=1e-10)
        assert rep.upper == pytest.approx(0.5, abs=1e-15)

    def test_exp(self):
        rep = hermite_hadamard_check(parse("exp(x)"), UNIT)
        assert rep.holds
        assert rep.lower == pytest.approx(1.648721, abs=1e-6)
        assert rep.mid == pytest.approx(1.718281, abs=1e-6)
        assert rep.upper == pytest.approx(1.859140, abs=1e-6)

    def test_constant_equality_case(self):
        rep = hermite_hadamard_check(parse("3"), UNIT)
        assert rep.holds
        assert rep.lower == rep.upper == 3.0

    def test_rejects_non_convex(self):
        with pytest.raises(ValueError, match="convexity"):
            hermite_hadamard_check(parse("sin(x)"), Interval(0.1, 3.0))
