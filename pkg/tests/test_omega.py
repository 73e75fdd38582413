from itertools import islice

import pytest

from conftest import star_words_naive
from quasiword import omega as O
from quasiword import words as W
from quasiword.counting import count_table, infix_window_set
from quasiword.errors import InvalidWordError
from quasiword.quasiperiod import compute_P


def test_enumeration_head_for_aba():
    head = list(islice(O.enumerate_star("aba"), 9))
    assert head == ["", "ab", "aba", "abab", "abaab", "ababa", "abaaba", "ababab", "abaabab"]


@pytest.mark.parametrize("q", ["aba", "aabaa", "bab", "aabaaaaba", "abcab"])
def test_enumeration_is_length_lex_and_complete(q):
    limit = 12
    naive = star_words_naive(compute_P(q), limit)
    rank = {c: i for i, c in enumerate(dict.fromkeys(q))}
    expected = sorted(naive, key=lambda w: (len(w), [rank[c] for c in w]))
    got = []
    for w in O.enumerate_star(q):
        if len(w) > limit:
            break
        got.append(w)
    assert got == expected


@pytest.mark.parametrize("q", ["aba", "aabaa", "aabaaaaba"])
def test_prefix_lies_in_the_star_and_its_factors_in_infix(q):
    pre = O.build_prefix(q, 400)
    assert len(pre) >= 400 and pre.enumeration_order == "length-lex"
    assert W.in_star(pre.prefix, compute_P(q))
    for n in (3, 7):
        window = infix_window_set(q, n)
        assert {pre.prefix[i:i + n] for i in range(len(pre) - n + 1)} <= window


def test_build_prefix_rejects_short_lengths():
    with pytest.raises(InvalidWordError):
        O.build_prefix("aba", 2)


def test_subword_complexity():
    assert O.subword_complexity("abaab", 2) == 3
    assert O.subword_complexity("abaab", 0) == 1
    with pytest.raises(InvalidWordError):
        O.subword_complexity("ab", 3)


def test_aba_long_prefix_reaches_infix_count():
    pre = O.build_prefix("aba", 2000)
    assert O.subword_complexity(pre.prefix, 10) == count_table("aba", 10).infix_counts[10] == 28


@pytest.mark.parametrize("q", ["aba", "aabaa", "aabaaaaba", "abab"])
def test_saturation_up_to_twelve(q):
    for n in range(13):
        s = O.check_saturation(q, n)
        assert s.saturated and s.subword_count == s.target, (q, n)
        w = O.build_prefix(q, max(s.prefix_len_needed, len(q))).prefix[: s.prefix_len_needed]
        assert O.subword_complexity(w, n) == s.target
        # one letter shorter is not enough, so the reported length is minimal
        if n > 0 and s.prefix_len_needed > n:
            assert O.subword_complexity(w[:-1], n) < s.target


def test_saturation_cap_reports_failure():
    s = O.check_saturation("aabaaaaba", 12, cap=30)
    assert not s.saturated and s.subword_count < s.target
