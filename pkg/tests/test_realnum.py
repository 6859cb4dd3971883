"""Canonical real numbers: parsing, ordering, betweenness, digit access.

Oracles: sequential long division and Fraction arithmetic from conftest;
expected digits and witnesses are frozen from those routes."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    expected_period_structure,
    fraction_digit,
    fraction_prefix,
    long_division_digits,
    nine_tail_value,
    opaque,
)
from decreal.errors import (
    CanonicalViolation,
    DigitsUnstable,
    MalformedLiteral,
    NotLess,
    OrderUndecided,
    SignUndecided,
)
from decreal.realnum import (
    Classification,
    ComputedReal,
    DigitPrefix,
    OracleReal,
    PeriodicReal,
    TerminatingReal,
    between,
    canonicalize_trailing_nines,
    classify,
    compare,
    digit_at,
    integral_part,
    parse_real,
    real_from_fraction,
    render_digits,
    with_nine_run_check,
)
from decreal.terminating import Comparison, TerminatingDecimal

fractions_st = st.fractions(min_value=-10**4, max_value=10**4,
                            max_denominator=10**4)


def P(text):
    return parse_real(text)


class TestParse:
    def test_periodic_value(self):
        # independent route: 2.1(90) = 2 + (190 - 1)/990 = 241/110
        assert P("2.1(90)").as_fraction() == Fraction(241, 110)

    def test_terminating_value(self):
        x = P("-51.43")
        assert isinstance(x, TerminatingReal)
        assert x.as_fraction() == Fraction(-5143, 100)

    def test_all_nines_period_rejected(self):
        with pytest.raises(MalformedLiteral):
            P("1.(9)")
        with pytest.raises(MalformedLiteral):
            P("0.2(99)")

    def test_all_zero_period_is_terminating(self):
        x = P("1.25(0)")
        assert isinstance(x, TerminatingReal)
        assert str(x) == "1.25"

    @pytest.mark.parametrize("text", ["1.", "1.2(", "1.2()", "(3)", "1.2)3",
                                      "--1", "", "nan", "0x1"])
    def test_rejects(self, text):
        with pytest.raises(MalformedLiteral):
            P(text)

    def test_non_minimal_period_normalised(self):
        assert str(P("0.(33)")) == "0.(3)"
        assert str(P("0.(142857142857)")) == "0.(142857)"

    @given(fractions_st)
    @settings(max_examples=200)
    def test_exact_literal_roundtrip(self, f):
        x = real_from_fraction(f)
        assert P(str(x)).as_fraction() == f


class TestPeriodicStructure:
    def test_minimal_period_known_values(self):
        x = P("0.(142857)")
        assert (x.preperiod, x.period) == ("", "142857")
        y = real_from_fraction(Fraction(1, 6))
        assert (y.preperiod, y.period) == ("1", "6")

    @given(st.integers(min_value=2, max_value=1000),
           st.integers(min_value=1, max_value=1000))
    @settings(max_examples=150)
    def test_period_structure_matches_number_theory(self, q, p):
        f = Fraction(p, q)
        x = real_from_fraction(f)
        if not isinstance(x, PeriodicReal):
            return  # terminating after reduction
        pre_len, per_len = expected_period_structure(f.denominator)
        assert (len(x.preperiod), len(x.period)) == (pre_len, per_len)

    @given(st.integers(min_value=1, max_value=999),
           st.integers(min_value=2, max_value=999),
           st.integers(min_value=1, max_value=60))
    @settings(max_examples=150)
    def test_digit_at_matches_long_division(self, p, q, i):
        x = real_from_fraction(Fraction(p, q))
        want = int(long_division_digits(p % q, q, i)[-1])
        assert x.digit_at(i) == want


class TestDigitAccess:
    def test_golden_examples(self):
        x = P("0.1(6)")
        assert digit_at(x, 1) == 1 and digit_at(x, 5) == 6
        assert digit_at(P("2.12"), 7) == 0
        assert digit_at(P("0.(142857)"), 8) == 4

    @given(fractions_st, st.integers(min_value=1, max_value=40))
    @settings(max_examples=200)
    def test_digit_matches_fraction_oracle(self, f, i):
        assert digit_at(real_from_fraction(f), i) == fraction_digit(f, i)

    def test_render_digits(self):
        assert render_digits(P("0.1(6)"), 5) == "0.16666"
        assert render_digits(P("-1.(45)"), 6) == "-1.454545"
        assert render_digits(P("2.5"), 4) == "2.5"


class TestCompare:
    def test_stream_below_two(self):
        nine_then_eights = OracleReal(
            digit_fn=lambda i: 9 if i <= 4 else 8, negative=False,
            int_part=1)
        assert compare(nine_then_eights, P("2"), 3) is Comparison.LT

    def test_periodic_reflexivity_any_budget(self):
        x = P("0.(3)")
        assert compare(x, x, 1) is Comparison.EQ

    def test_matching_streams_undecided(self):
        threes = OracleReal(digit_fn=lambda i: 3, negative=False, int_part=0)
        assert compare(P("0.(3)"), threes, 10) is Comparison.UNDECIDED

    def test_exact_pairs_never_undecided(self):
        assert compare(P("0.(3)"), P("0.333"), 1) is Comparison.GT
        assert compare(P("0.(3)"), real_from_fraction(Fraction(1, 3)),
                       1) is Comparison.EQ

    @given(fractions_st, fractions_st)
    @settings(max_examples=300)
    def test_matches_fraction_order(self, f, g):
        want = {-1: Comparison.LT, 0: Comparison.EQ, 1: Comparison.GT}[
            (f > g) - (f < g)]
        assert compare(real_from_fraction(f), real_from_fraction(g)) is want

    @given(fractions_st, fractions_st,
           st.integers(min_value=1, max_value=50))
    @settings(max_examples=100)
    def test_budget_monotone(self, f, g, budget):
        x, y = opaque(f), opaque(g)
        small = compare(x, y, budget)
        if small is not Comparison.UNDECIDED:
            assert compare(x, y, budget + 37) is small

    def test_opaque_streams_decided_on_divergence(self):
        assert compare(opaque(Fraction(1, 3)), opaque(Fraction(1, 7)),
                       10) is Comparison.GT

    def test_degenerate_computed_equality(self):
        def pinned(value):
            return ComputedReal(
                refine=lambda m: (value, value), description="pinned")
        a, b = pinned(Fraction(5, 4)), pinned(Fraction(5, 4))
        assert compare(a, b, 20) is Comparison.EQ
        assert compare(pinned(Fraction(5, 4)), pinned(Fraction(4, 5)),
                       20) is Comparison.GT

    def test_sign_flag_needs_nonzero_evidence(self):
        # opposite sign flags alone cannot separate streams that may both
        # denote zero; a nonzero digit within budget settles the order
        neg_zeros = OracleReal(digit_fn=lambda i: 0, negative=True,
                               int_part=0)
        tiny = OracleReal(digit_fn=lambda i: 1 if i == 4 else 0,
                          negative=False, int_part=0)
        assert compare(neg_zeros, tiny, 2) is Comparison.UNDECIDED
        assert compare(neg_zeros, tiny, 10) is Comparison.LT


class TestClassify:
    def test_goldens(self):
        assert classify(P("0")) is Classification.ZERO
        assert classify(P("-0.0001")) is Classification.NEGATIVE
        assert classify(P("0.(3)")) is Classification.POSITIVE

    def test_oracle_budget_exhaustion(self):
        zeros = OracleReal(digit_fn=lambda i: 0, negative=False, int_part=0)
        with pytest.raises(SignUndecided):
            classify(zeros, 8)

    def test_oracle_late_digit(self):
        late = OracleReal(digit_fn=lambda i: 1 if i == 40 else 0,
                          negative=True, int_part=0)
        assert classify(late, 100) is Classification.NEGATIVE


class TestIntegralPart:
    def test_golden_examples(self):
        stream = OracleReal(
            digit_fn=lambda i: int("12011"[i - 1]) if i <= 5 else 1,
            negative=False, int_part=2)
        assert integral_part(stream) == 2
        assert integral_part(P("-0.19")) == -1
        assert integral_part(P("-3")) == -3

    @given(fractions_st)
    @settings(max_examples=300)
    def test_floor_law(self, f):
        n = integral_part(real_from_fraction(f))
        assert n <= f < n + 1


class TestCanonicalizeTrailingNines:
    def test_golden_examples(self):
        all_nines = DigitPrefix(False, 0, "999")
        assert canonicalize_trailing_nines(all_nines, 1) == \
            TerminatingDecimal(1)
        prefix = DigitPrefix(False, 2, "41999")
        assert str(canonicalize_trailing_nines(prefix, 3)) == "2.42"

    @given(st.integers(min_value=0, max_value=50),
           st.text(alphabet="012345678", min_size=0, max_size=8),
           st.integers(min_value=1, max_value=6))
    @settings(max_examples=200)
    def test_geometric_series_oracle(self, ip, head, extra_nines):
        # expansion: ip . head 999...  with the nine run starting right
        # after the head (the digit before the onset is < 9 by alphabet)
        onset = len(head) + 1
        prefix = DigitPrefix(False, ip, head + "9" * extra_nines)
        head_value = Fraction(int(str(ip) + head) if head else ip,
                              10 ** len(head))
        want = nine_tail_value(head_value, onset)
        got = canonicalize_trailing_nines(prefix, onset)
        assert got.as_fraction() == want

    def test_negative_prefix(self):
        # -0.0999... = -0.1
        prefix = DigitPrefix(True, 0, "0999")
        assert str(canonicalize_trailing_nines(prefix, 2)) == "-0.1"


class TestBetween:
    @pytest.mark.parametrize("a,b,want", [
        ("1.99998(8)", "2", "1.99999"),
        ("0.88(7)", "5.1(1)", "0.9"),
        ("0.120999(8)", "0.121", "0.1209999"),
        ("-1.5", "2.5", "0"),
    ])
    def test_goldens(self, a, b, want):
        assert str(between(P(a), P(b))) == want

    def test_zero_lower_endpoint(self):
        # a = 0 < b: witness built from b's first nonzero digit
        w = between(P("0"), P("0.00(3)"))
        assert Fraction(0) < w.as_fraction() < Fraction(1, 300)

    def test_not_less(self):
        with pytest.raises(NotLess):
            between(P("2"), P("2"))
        with pytest.raises(NotLess):
            between(P("3"), P("2"))

    def test_order_undecided(self):
        x, y = opaque(Fraction(1, 3)), opaque(Fraction(1, 3))
        with pytest.raises(OrderUndecided):
            between(x, y, 10)

    @given(fractions_st, fractions_st)
    @settings(max_examples=300)
    def test_density(self, f, g):
        if f == g:
            return
        lo, hi = min(f, g), max(f, g)
        w = between(real_from_fraction(lo), real_from_fraction(hi))
        assert isinstance(w, TerminatingDecimal)
        assert lo < w.as_fraction() < hi

    def test_oracle_endpoints(self):
        w = between(opaque(Fraction(1, 7)), opaque(Fraction(1, 3)))
        assert Fraction(1, 7) < w.as_fraction() < Fraction(1, 3)


class TestOracleReal:
    def test_memo_determinism(self):
        calls = []

        def digit(i):
            calls.append(i)
            return i % 10

        x = OracleReal(digit_fn=digit, negative=False, int_part=0)
        assert x.digit_at(5) == 5
        assert x.digit_at(5) == 5
        assert calls.count(5) == 1  # memoized

    def test_negated_shares_stream(self):
        x = opaque(Fraction(22, 7))
        y = x.negated()
        assert y.negative and not x.negative
        assert y.digit_at(3) == x.digit_at(3)
        assert integral_part(y) == -4  # -22/7 = -3.142857... floors to -4

    def test_nine_run_check_wrapper(self):
        bad = with_nine_run_check(lambda i: 9, window=16)
        with pytest.raises(CanonicalViolation):
            bad(1)
        good = with_nine_run_check(lambda i: 9 if i % 5 else 1, window=16)
        assert good(1) == 9

    def test_bounds_enclose_value(self):
        x = opaque(Fraction(355, 113))
        for m in (1, 5, 20):
            lo, hi = x.bounds(m)
            assert lo <= Fraction(355, 113) <= hi
            assert hi - lo <= Fraction(1, 10**m)


class TestComputedReal:
    @staticmethod
    def shrinking(target, start_width=Fraction(1)):
        """Stream converging to target from the side away from zero.

        A symmetric enclosure of an exactly-representable value straddles
        its digit boundary at every width (the 0.999/1.000 situation, see
        test_boundary_raises_digits_unstable), so one-sided convergence is
        what a digit-stable computation looks like.
        """
        def refine(m):
            r = min(start_width, Fraction(1, 10**m))
            if target < 0:
                return target - r, target
            return target, target + r
        return ComputedReal(refine=refine, description="test stream")

    def test_digit_pinning_positive(self):
        x = self.shrinking(Fraction(1, 7))
        assert render_digits(x, 8) == "0." + long_division_digits(1, 7, 8)

    def test_digit_pinning_negative(self):
        x = self.shrinking(Fraction(-19, 100))
        assert render_digits(x, 4) == "-0.1900"
        assert integral_part(x) == -1
        assert x.digit_at(1) == 1 and x.digit_at(2) == 9

    def test_boundary_raises_digits_unstable(self):
        # interval straddles 1.000/0.999... forever
        x = ComputedReal(
            refine=lambda m: (1 - Fraction(1, 10**(m + 1)),
                              1 + Fraction(1, 10**(m + 1))),
            description="boundary stream")
        with pytest.raises(DigitsUnstable):
            x.digit_at(3)
        lo, hi = x.bounds(10)  # bounds remain available
        assert lo <= 1 <= hi

    def test_inconsistent_refinement_asserts(self):
        flip = ComputedReal(
            refine=lambda m: (Fraction(2), Fraction(3)) if m < 5
            else (Fraction(5), Fraction(6)),
            description="inconsistent")
        flip.bounds(1)
        with pytest.raises(AssertionError):
            flip.bounds(8)

    def test_negated(self):
        x = self.shrinking(Fraction(5, 4))
        y = x.negated()
        assert render_digits(y, 3) == "-1.250"
        lo, hi = y.bounds(6)
        assert lo <= Fraction(-5, 4) <= hi


class TestPrefix:
    @given(fractions_st, st.integers(min_value=1, max_value=40))
    @settings(max_examples=200)
    def test_prefix_matches_long_division(self, f, n):
        x = real_from_fraction(f)
        assert x.prefix(n).render() == fraction_prefix(f, n)

    def test_prefix_value(self):
        p = P("0.1(6)").prefix(3)
        assert p.value() == Fraction(166, 1000)
        assert str(p.as_terminating()) == "0.166"
