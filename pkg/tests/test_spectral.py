from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import binary_words
from quasiword import spectral as S
from quasiword.counting import star_counts_recurrence
from quasiword.errors import InvalidWordError
from quasiword.quasiperiod import analyze

T_P = 1.324717957244746


def numpy_largest_root(p):
    roots = np.roots(list(reversed(p.coefficients)))
    return max(r.real for r in roots if abs(r.imag) < 1e-9 and r.real > 0)


@pytest.mark.parametrize(
    "text, coeffs",
    [("t^3 - t - 1", (-1, -1, 0, 1)), ("t^5 - t^2 - t - 1", (-1, -1, -1, 0, 0, 1)), ("2t^2 + 3", (3, 0, 2)),
     ("-t", (0, -1)), ("0", ())],
)
def test_polynomial_parse_and_str(text, coeffs):
    p = S.IntPolynomial.parse(text)
    assert p.coefficients == coeffs
    assert str(p) == text


@given(st.lists(st.integers(-5, 5), max_size=8))
def test_polynomial_str_roundtrip(coeffs):
    p = S.IntPolynomial(tuple(coeffs))
    assert S.IntPolynomial.parse(str(p)) == p


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6), st.integers(0, 40), st.integers(0, 6))
def test_dyadic_sign_is_exact(coeffs, m, k):
    p = S.IntPolynomial(tuple(coeffs))
    value = p(Fraction(m, 2**k))
    assert p.sign_at_dyadic(m, k) == (value > 0) - (value < 0)


def test_polynomial_product():
    a = S.IntPolynomial.parse("t^2 + 1")
    b = S.IntPolynomial.parse("t^3 - t - 1")
    assert str(a * b) == "t^5 - t^2 - t - 1"


def test_pisot_constant():
    assert abs(S.pisot_constant() - T_P) < 1e-12


@pytest.mark.parametrize("text", ["t^4 - t - 1", "t^9 - t^4 - t - 1", "t^7 - t^3 - t^2 - t - 1", "t^2 - 1"])
def test_roots_match_numpy(text):
    p = S.IntPolynomial.parse(text)
    lo, hi = S.root_bracket(p)
    assert lo <= hi and hi - lo <= Fraction(1, 2**60)
    assert abs(S.largest_positive_root(p) - numpy_largest_root(p)) < 1e-9


@pytest.mark.parametrize("text", ["t^3 + t - 1", "t^3 - t", "2t^3 - 1", "t^3 - 2t - 1", "1"])
def test_non_growth_shapes_are_rejected(text):
    p = S.IntPolynomial.parse(text)
    assert not S.has_growth_shape(p)
    with pytest.raises(InvalidWordError):
        S.largest_positive_root(p)


@pytest.mark.parametrize(
    "q, poly",
    [("aba", "t^3 - t - 1"), ("aabaa", "t^5 - t^2 - t - 1"), ("aaa", "t - 1"), ("abab", "t^2 - 1"),
     ("aabaaaaba", "t^9 - t^4 - t - 1"), ("abaaba", "t^5 - t^2 - 1")],
)
def test_characteristic_polynomials(q, poly):
    assert str(S.characteristic_polynomial(analyze(q))) == poly


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetric_family(n):
    q = "a" * n + "b" + "a" * n
    p = S.characteristic_polynomial(analyze(q))
    assert p == S.IntPolynomial.from_terms({2 * n + 1: 1, **{i: -1 for i in range(n + 1)}})
    assert p == S.extremal_polynomial(2 * n + 1)


def test_growth_rate_is_star_radius():
    # the root of the polynomial against a direct estimate from the counts themselves
    for q in binary_words(8):
        a = analyze(q)
        est = S.radius_estimate(star_counts_recurrence(a.star_root, 2 * S.RADIUS_N))
        assert abs(S.lambda_q(q) - est) / S.lambda_q(q) < 0.02, q


def test_lambda_below_cubic_constant_up_to_nine(binary_q9):
    worst = max(S.lambda_q(q) for q in binary_q9)
    assert worst <= T_P + 1e-9


def test_growth_report_roundtrip():
    r = S.growth_report("aba")
    assert abs(r.lam - T_P) < 1e-12
    assert S.GrowthReport.from_dict(r.as_dict()) == r
    assert not r.divides_case and S.growth_report("abab", with_ratios=False).divides_case


def test_radius_estimate_needs_enough_counts():
    with pytest.raises(InvalidWordError):
        S.radius_estimate([1, 0, 1], n=5)


def test_eventually_positive_on_grid():
    grid = [Fraction(i, 100) for i in range(1, 300)]
    for n in range(1, 30):
        assert S.eventually_positive(S.extremal_polynomial(n), grid)


def test_extremal_family_bound():
    rep = S.verify_lemma_poly(max_n=50, exhaustive_max_n=12)
    assert rep.passed and rep.equality_set == [3, 5] and rep.exhaustive_violations == []
    assert max(rep.roots.values()) <= T_P + 1e-9


def test_restricted_polynomial_count():
    # M contains 0 and any subset of 1..floor((n-1)/2)
    for n in range(1, 12):
        assert len(list(S.restricted_polynomials(n))) == 2 ** ((n - 1) // 2)


def test_canonical_words_count():
    # binary words up to renaming: 2^(n-1) of each length
    assert len(S.canonical_words(2, 5)) == 1 + 2 + 4 + 8 + 16
    assert S.canonical_words(3, 2) == ["a", "aa", "ab"]


def test_survey_small():
    res = S.survey(2, 5)
    assert res.argmax == ["aba", "aabaa"]
    lams = [r.lam for r in res.reports]
    assert lams == sorted(lams, reverse=True)
    with pytest.raises(InvalidWordError):
        S.survey(2, 0)


def test_maximal_quasiperiods():
    cands = S.canonical_words(2, 5)
    maximal = S.maximal_quasiperiods(cands)
    assert "aba" in maximal and "aabaa" in maximal
    for q in maximal:
        a = analyze(q)
        assert a.divides or 2 * len(a.q0) > len(q)


@settings(max_examples=50, deadline=None)
@given(st.text(alphabet="abc", min_size=1, max_size=10))
def test_lambda_between_one_and_cubic_constant(q):
    lam = S.lambda_q(q)
    assert 1 - 1e-12 <= lam <= T_P + 1e-9
